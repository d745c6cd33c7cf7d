#include "cmreg/regularity.hpp"

#include <algorithm>
#include <sstream>

namespace cmreg {

namespace {

std::string describe(const ExponentSet& E) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < E.size(); ++k) os << (k ? "," : "") << E.points()[k];
  os << '}';
  return os.str();
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<Polynomial> as_polynomials(const MonomialIdeal& J, const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (const auto& g : J.generators()) gens.push_back(Polynomial::monomial(ring, g));
  return gens;
}

// deg g_i - (n - i), with g_i = 1 when J_i has no generators.
ExtendedDegree level_bound(const MonomialIdeal& J_i) {
  ExponentVector g(J_i.num_vars());
  for (const auto& v : J_i.generators()) g = lcm(g, v);
  return ExtendedDegree(static_cast<int>(g.degree()) - static_cast<int>(J_i.num_vars()));
}

RegularityReport run_pipeline(MonomialIdeal initial, std::vector<Polynomial> gens,
                              const RingPtr& ring, const RegularityOptions& options) {
  if (options.max_retries < 0) throw std::invalid_argument("max_retries must be >= 0");
  const std::size_t n = ring->num_vars();

  RegularityReport report;
  report.n = n;
  report.p = ring->characteristic();
  report.initial_ideal = initial;
  report.d = krull_dim(initial);
  if (report.d < 0) throw std::invalid_argument("the ideal is the whole ring");
  const auto d = static_cast<std::size_t>(report.d);

  // The ideal currently in use lives in S_base = k[x_1..x_{n-base}].
  std::size_t base = 0;
  MonomialIdeal base_ideal = std::move(initial);
  std::vector<Polynomial> base_gens = std::move(gens);

  for (std::size_t i = 0; i < d; ++i) {
    int attempt = 0;
    std::optional<FinitenessCertificate> certificate;
    MonomialIdeal J_i = evaluate_zero(base_ideal, i - base);
    while (!(certificate = certify_finite(J_i))) {
      if (attempt == options.max_retries)
        throw RetriesExhausted(i, exponent_set(J_i), exponent_set(evaluate_zero(J_i, 1)));
      ++attempt;
      std::vector<Polynomial> level_gens;
      for (const auto& g : base_gens) {
        auto h = i > base ? g.evaluate_last_zero(i - base) : g;
        if (!h.is_zero()) level_gens.push_back(std::move(h));
      }
      const RingPtr level_ring = ring->prefix(n - i);
      const auto seed = retry_seed(options.seed, i, attempt);
      const auto change = CoordinateChange::sample(level_ring, n - i, seed);
      base_gens = change.apply(level_gens);
      base = i;
      base_ideal = base_gens.empty()
                       ? MonomialIdeal(n - i)
                       : initial_ideal(buchberger(base_gens, options.groebner));
      report.retries.push_back({i, attempt, seed, change.digest()});
      J_i = base_ideal;
    }
    report.c.push_back(c_value(J_i, *certificate));
    report.corners.push_back(corners(J_i));
    report.level_ideals.push_back(std::move(J_i));
  }

  MonomialIdeal J_d = evaluate_zero(base_ideal, d - base);
  report.r = r_value(J_d);
  {
    // An Artinian J_d always passes the finiteness test.
    const auto certificate = certify_finite(J_d);
    if (!certificate) throw std::logic_error("Artinian level ideal failed the finiteness test");
    report.c.push_back(c_value(J_d, *certificate));
    report.corners.push_back(corners(J_d));
    report.level_ideals.push_back(std::move(J_d));
  }

  report.reg = report.r;
  for (std::size_t i = 0; i < d; ++i)
    if (report.c[i].is_finite()) report.reg = std::max(report.reg, report.c[i].value());

  ExtendedDegree running, running_bound;
  for (std::size_t t = 0; t <= d; ++t) {
    running = max(running, report.c[t]);
    running_bound = max(running_bound, level_bound(report.level_ideals[t]));
    report.reg_t.push_back(running);
    report.bound.push_back(running_bound);
  }
  const auto top = report.reg_t.back();
  if (top.is_finite())
    report.attained_t = static_cast<std::size_t>(
        std::find(report.c.begin(), report.c.end(), top) - report.c.begin());
  return report;
}

}  // namespace

RetriesExhausted::RetriesExhausted(std::size_t level, ExponentSet E_level,
                                   ExponentSet E_next)
    : std::runtime_error("level " + std::to_string(level) +
                         " is still infinite after the allowed coordinate changes; E_i = " +
                         describe(E_level) + ", E_{i+1} = " + describe(E_next)),
      level_(level),
      E_level_(std::move(E_level)),
      E_next_(std::move(E_next)) {}

std::uint64_t retry_seed(std::uint64_t base, std::size_t level, int attempt) {
  return splitmix64(splitmix64(splitmix64(base) ^ level) ^
                    static_cast<std::uint64_t>(attempt));
}

RegularityReport compute_report(std::span<const Polynomial> gens,
                                const RegularityOptions& options) {
  const auto basis = buchberger(gens, options.groebner);
  return run_pipeline(initial_ideal(basis),
                      std::vector<Polynomial>(gens.begin(), gens.end()),
                      gens.front().ring(), options);
}

RegularityReport compute_report(const MonomialIdeal& J, const RingPtr& ring,
                                const RegularityOptions& options) {
  if (J.num_vars() != ring->num_vars())
    throw std::invalid_argument("monomial ideal and ring differ in variable count");
  return run_pipeline(J, as_polynomials(J, ring), ring, options);
}

ExtendedDegree reg_bound(const MonomialIdeal& J, std::size_t t) {
  if (t > J.num_vars()) throw std::invalid_argument("reg_bound level out of range");
  ExtendedDegree out;
  for (std::size_t i = 0; i <= t; ++i) out = max(out, level_bound(evaluate_zero(J, i)));
  return out;
}

ZerodivisorFlags zerodivisor_flags(const RegularityReport& report) {
  ZerodivisorFlags flags;
  for (int i = 0; i < report.d; ++i)
    flags.nonzerodivisor.push_back(report.c[static_cast<std::size_t>(i)].is_minus_infinity());
  // compute_report only returns once every level 0..d-1 is certified.
  flags.filter_regular = report.c.size() == static_cast<std::size_t>(report.d) + 1;
  return flags;
}

// ---------------------------------------------------------------------------
// Curves

int stabilization_degree(const MonomialIdeal& J_1, std::size_t ceiling) {
  StandardMonomialCounter small(J_1);
  StandardMonomialCounter large(evaluate_one(J_1));
  int last_nonzero = -1;
  for (std::size_t u = 0; u <= ceiling; ++u)
    if (small.count(u) != large.count(u)) last_nonzero = static_cast<int>(u);
  if (last_nonzero == static_cast<int>(ceiling))
    throw std::runtime_error("counting function does not stabilize below the ceiling");
  return std::max(0, last_nonzero);
}

CurveReport curve_report(const MonomialIdeal& J) {
  CurveReport out;
  const auto n = J.num_vars();
  out.n = n;
  const int d = krull_dim(J);
  if (n < 3 || d != 2 || !evaluate_zero(J, 2).is_artinian()) {
    out.diagnostic = "k[x_{n-1},x_n] is not a Noether normalization (n = " +
                     std::to_string(n) + ", d = " + std::to_string(d) +
                     "); apply a linear change of coordinates";
    return out;
  }
  out.noether_ok = true;

  const auto certificate0 = certify_finite(J);
  if (!certificate0 || c_value(J, *certificate0).is_finite()) {
    out.diagnostic = "x_n is a zerodivisor on S/I; curve formulas need the saturated ideal";
    return out;
  }
  const MonomialIdeal J_1 = evaluate_zero(J, 1);
  const auto certificate1 = certify_finite(J_1);
  if (!certificate1) {
    out.diagnostic = "level 1 is not finite; curve formulas need the saturated ideal";
    return out;
  }
  const MonomialIdeal J_2 = evaluate_zero(J, 2);

  out.c1 = c_value(J_1, *certificate1);
  out.r = r_value(J_2);
  out.reg = std::max(*out.r, out.c1.is_finite() ? out.c1.value() : 0);

  if (out.c1.is_minus_infinity()) {
    // H(E): first degree where every monomial of S_2 lies in J_2.
    StandardMonomialCounter counter(J_2);
    std::size_t h = 0;
    while (counter.count(h) != 0) ++h;
    if (static_cast<int>(h) != *out.r + 1)
      throw std::logic_error("H(E) disagrees with r + 1");
    out.H_E = static_cast<int>(h);
  } else {
    out.last_shift = out.c1.value() + static_cast<int>(n) - 1;
  }

  const int closed_form = out.c1.is_finite() ? std::max(0, out.c1.value()) : 0;
  const auto lcm1 = lcm_gens(J_1, 0);
  const std::size_t ceiling = 2 * (lcm1 ? lcm1->degree() : 0) + J_1.num_vars() + 2;
  if (stabilization_degree(J_1, ceiling) != closed_form)
    throw std::logic_error("H(R) closed form disagrees with direct counting");
  out.H_Re = closed_form;
  return out;
}

CurveReport curve_report(std::span<const Polynomial> gens,
                         const GroebnerOptions& options) {
  return curve_report(initial_ideal(buchberger(gens, options)));
}

}  // namespace cmreg
