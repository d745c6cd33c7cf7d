#include "cmreg/groebner.hpp"

#include <algorithm>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

namespace cmreg {

namespace {

bool revlex_less(const ExponentVector& a, const ExponentVector& b) {
  return revlex_compare(a, b) == std::strong_ordering::less;
}

const Polynomial* find_reducer(const ExponentVector& e,
                               std::span<const Polynomial> G) {
  for (const auto& g : G)
    if (!g.is_zero() && divides(g.leading_exponent(), e)) return &g;
  return nullptr;
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("S-polynomial of a zero polynomial");
  const auto& field = f.ring()->field();
  const auto& ef = f.leading_exponent();
  const auto& eg = g.leading_exponent();
  const auto l = lcm(ef, eg);
  Polynomial out = f.shifted(l - ef, field.inverse(f.leading_coefficient()));
  out.subtract_multiple(field.inverse(g.leading_coefficient()), l - eg, g);
  return out;
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> G) {
  for (const auto& g : G) require_same_ring(f, g);
  const auto& field = f.ring()->field();
  std::vector<Term> remainder;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    if (const Polynomial* g = find_reducer(lt.exponent, G)) {
      const auto c = field.mul(lt.coefficient, field.inverse(g->leading_coefficient()));
      p.subtract_multiple(c, lt.exponent - g->leading_exponent(), *g);
    } else {
      remainder.push_back(lt);
      p.subtract_multiple(lt.coefficient, lt.exponent,
                          Polynomial::constant(p.ring(), 1));
    }
  }
  return Polynomial(f.ring(), std::move(remainder));
}

namespace {

struct Pair {
  std::size_t i, j;  // i < j
  ExponentVector lcm;
};

// Normal strategy with deterministic tie-breaking.
bool pair_before(const Pair& a, const Pair& b) {
  const auto da = a.lcm.degree(), db = b.lcm.degree();
  if (da != db) return da < db;
  const auto c = revlex_compare(a.lcm, b.lcm);
  if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
  return std::tie(a.j, a.i) < std::tie(b.j, b.i);
}

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> G) {
  // Drop elements whose leading exponent is divisible by another's.
  std::vector<Polynomial> minimal;
  for (std::size_t a = 0; a < G.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < G.size() && !redundant; ++b) {
      if (a == b) continue;
      const auto& ea = G[a].leading_exponent();
      const auto& eb = G[b].leading_exponent();
      if (divides(eb, ea) && (ea != eb || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[a]);
  }
  // Tail-reduce each element against the others.
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Polynomial> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    minimal[a] = reduce(minimal[a], others).monic();
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const Polynomial& f, const Polynomial& g) {
              return revlex_less(g.leading_exponent(), f.leading_exponent());
            });
  return minimal;
}

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> gens,
                         const GroebnerOptions& options) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  const RingPtr ring = gens.front().ring();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    require_same_ring(gens.front(), gens[k]);
    if (!gens[k].is_homogeneous())
      throw NonHomogeneousError("generator " + std::to_string(k + 1) + " (" +
                                to_string(gens[k]) + ") is not homogeneous");
  }

  std::vector<Polynomial> G;
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> open;

  auto add_element = [&](Polynomial f) {
    const std::size_t j = G.size();
    G.push_back(std::move(f));
    for (std::size_t i = 0; i < j; ++i) {
      pending.push_back({i, j, lcm(G[i].leading_exponent(), G[j].leading_exponent())});
      open.emplace(i, j);
    }
  };

  for (const auto& g : gens)
    if (!g.is_zero()) add_element(g.monic());

  auto is_open = [&](std::size_t a, std::size_t b) {
    return open.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), pair_before);
    const Pair pair = *best;
    pending.erase(best);
    open.erase({pair.i, pair.j});

    const auto& ei = G[pair.i].leading_exponent();
    const auto& ej = G[pair.j].leading_exponent();
    if (coprime(ei, ej)) continue;
    if (options.chain_criterion) {
      bool chained = false;
      for (std::size_t m = 0; m < G.size() && !chained; ++m) {
        if (m == pair.i || m == pair.j) continue;
        chained = divides(G[m].leading_exponent(), pair.lcm) &&
                  !is_open(pair.i, m) && !is_open(pair.j, m);
      }
      if (chained) continue;
    }

    Polynomial h = reduce(s_polynomial(G[pair.i], G[pair.j]), G);
    if (!h.is_zero()) add_element(h.monic());
  }

  return GroebnerBasis(ring, reduce_basis(std::move(G)));
}

bool satisfies_buchberger_criterion(const GroebnerBasis& basis) {
  const auto& G = basis.elements();
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      if (!reduce(s_polynomial(G[i], G[j]), G).is_zero()) return false;
  return true;
}

MonomialIdeal initial_ideal(const GroebnerBasis& basis) {
  std::vector<ExponentVector> leads;
  for (const auto& g : basis.elements()) leads.push_back(g.leading_exponent());
  return minimalize(basis.ring()->num_vars(), leads);
}

// ---------------------------------------------------------------------------
// CoordinateChange

CoordinateChange::CoordinateChange(RingPtr ring,
                                   std::vector<std::vector<Coefficient>> matrix)
    : ring_(std::move(ring)), k_(matrix.size()), matrix_(std::move(matrix)) {}

CoordinateChange CoordinateChange::sample(const RingPtr& ring, std::size_t k,
                                          std::uint64_t seed) {
  if (k == 0 || k > ring->num_vars())
    throw std::invalid_argument("coordinate change size out of range");
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 engine(seq);
  const std::uint64_t p = ring->characteristic();
  std::vector<std::vector<Coefficient>> m(k, std::vector<Coefficient>(k, 0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t h = 0; h <= j; ++h)
      m[j][h] = static_cast<Coefficient>(1 + engine() % (p - 1));
  return CoordinateChange(ring, std::move(m));
}

CoordinateChange CoordinateChange::identity(const RingPtr& ring, std::size_t k) {
  if (k == 0 || k > ring->num_vars())
    throw std::invalid_argument("coordinate change size out of range");
  std::vector<std::vector<Coefficient>> m(k, std::vector<Coefficient>(k, 0));
  for (std::size_t j = 0; j < k; ++j) m[j][j] = 1;
  return CoordinateChange(ring, std::move(m));
}

Polynomial CoordinateChange::apply(const Polynomial& f) const {
  if (!(*f.ring() == *ring_))
    throw std::invalid_argument("coordinate change applied in another ring");
  const auto n = ring_->num_vars();
  std::vector<Polynomial> images;
  for (std::size_t j = 0; j < n; ++j) {
    if (j >= k_) {
      images.push_back(Polynomial::variable(ring_, j));
      continue;
    }
    std::vector<Term> terms;
    for (std::size_t h = 0; h <= j; ++h) {
      ExponentVector e(n);
      e[h] = 1;
      terms.push_back({std::move(e), matrix_[j][h]});
    }
    images.emplace_back(ring_, std::move(terms));
  }
  // powers[j][e] = images[j]^e, filled on demand.
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](std::size_t j, Exponent e) -> const Polynomial& {
    auto& cache = powers[j];
    if (cache.empty()) cache.push_back(Polynomial::constant(ring_, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[j]);
    return cache[e];
  };
  Polynomial out(ring_);
  for (const auto& t : f.terms()) {
    Polynomial image = Polynomial::constant(ring_, t.coefficient);
    for (std::size_t j = 0; j < n; ++j)
      if (t.exponent[j]) image = image * power(j, t.exponent[j]);
    out = out + image;
  }
  return out;
}

std::vector<Polynomial> CoordinateChange::apply(
    std::span<const Polynomial> gens) const {
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(apply(g));
  return out;
}

std::string CoordinateChange::digest() const {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto mix = [&hash](std::uint32_t word) {
    for (int b = 0; b < 4; ++b) {
      hash ^= (word >> (8 * b)) & 0xff;
      hash *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint32_t>(k_));
  mix(ring_->characteristic());
  for (const auto& row : matrix_)
    for (auto c : row) mix(c);
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << hash;
  return os.str();
}

std::vector<Polynomial> random_linear_change(std::span<const Polynomial> gens,
                                             std::size_t k, std::uint64_t seed) {
  if (gens.empty()) return {};
  return CoordinateChange::sample(gens.front().ring(), k, seed).apply(gens);
}

}  // namespace cmreg
