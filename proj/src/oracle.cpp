#include "cmreg/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "cmreg/groebner.hpp"
#include "cmreg/staircase.hpp"

namespace cmreg {

namespace {

// deg g_i - (n - i), or nullopt when level i has no generators.
std::optional<long> finite_ceiling(const MonomialIdeal& J, std::size_t level) {
  const auto g = lcm_gens(J, level);
  if (!g) return std::nullopt;
  return static_cast<long>(g->degree()) - static_cast<long>(J.num_vars() - level);
}

}  // namespace

std::size_t min_a_ceiling(const MonomialIdeal& J, std::size_t level) {
  const auto top = finite_ceiling(J, level);
  return top ? static_cast<std::size_t>(std::max(0L, *top + 1)) : 0;
}

std::size_t default_a_ceiling(const MonomialIdeal& J, std::size_t level) {
  const auto g = lcm_gens(J, level);
  const std::size_t lcm_degree = g ? g->degree() : 0;
  return 2 * lcm_degree + (J.num_vars() - level);
}

LevelOracle a_def(const MonomialIdeal& J, std::size_t level, std::size_t ceiling) {
  if (level >= J.num_vars()) throw std::invalid_argument("a_def level out of range");
  if (ceiling < min_a_ceiling(J, level))
    throw std::invalid_argument("a_def ceiling below deg g_i - (n - i) + 1");
  const MonomialIdeal J_i = evaluate_zero(J, level);
  StandardMonomialCounter in_level(J_i);
  StandardMonomialCounter in_saturation(saturate_by_var(J_i, J_i.num_vars() - 1));

  LevelOracle out;
  out.level = level;
  out.ceiling = ceiling;
  const auto top = finite_ceiling(J, level);
  for (std::size_t r = 0; r <= ceiling; ++r) {
    const auto a = in_level.count(r);
    const auto b = in_saturation.count(r);
    if (a == b) continue;
    out.trace.emplace_back(r, a - b);
    if (top && static_cast<long>(r) > *top)
      out.infinite = true;
    else
      out.value = ExtendedDegree(static_cast<int>(r));
  }
  if (out.infinite) out.value = ExtendedDegree::minus_infinity();
  return out;
}

int r_def(const MonomialIdeal& J_d, std::size_t ceiling) {
  std::uint64_t lcm_degree = 0;
  if (!J_d.is_zero()) {
    ExponentVector g(J_d.num_vars());
    for (const auto& v : J_d.generators()) g = lcm(g, v);
    lcm_degree = g.degree();
  }
  if (ceiling < lcm_degree) throw std::invalid_argument("r_def ceiling below the lcm degree");
  if (J_d.num_vars() == 0) {
    if (J_d.is_unit()) throw std::invalid_argument("r_def of the unit ideal");
    return 0;
  }
  StandardMonomialCounter counter(J_d);
  if (counter.count(ceiling) != 0) throw NotArtinian();
  for (std::size_t r = ceiling; r-- > 0;)
    if (counter.count(r) != 0) return static_cast<int>(r);
  throw std::invalid_argument("r_def of the unit ideal");
}

std::size_t default_r_ceiling(const MonomialIdeal& J_d) {
  std::uint64_t lcm_degree = 0;
  ExponentVector g(J_d.num_vars());
  for (const auto& v : J_d.generators()) g = lcm(g, v);
  lcm_degree = g.degree();
  return 2 * lcm_degree + J_d.num_vars();
}

// ---------------------------------------------------------------------------
// Strongly stable ideals

MonomialIdeal borel_closure(std::size_t num_vars, std::span<const ExponentVector> monomials) {
  std::set<ExponentVector> closed(monomials.begin(), monomials.end());
  std::vector<ExponentVector> frontier(closed.begin(), closed.end());
  while (!frontier.empty()) {
    ExponentVector m = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t j = 0; j < num_vars; ++j) {
      if (m[j] == 0) continue;
      for (std::size_t h = 0; h < j; ++h) {
        ExponentVector moved = m;
        --moved[j];
        ++moved[h];
        if (closed.insert(moved).second) frontier.push_back(std::move(moved));
      }
    }
  }
  return minimalize(num_vars, std::vector<ExponentVector>(closed.begin(), closed.end()));
}

bool is_strongly_stable(const MonomialIdeal& J) {
  for (const auto& m : J.generators())
    for (std::size_t j = 0; j < J.num_vars(); ++j) {
      if (m[j] == 0) continue;
      for (std::size_t h = 0; h < j; ++h) {
        ExponentVector moved = m;
        --moved[j];
        ++moved[h];
        if (!contains(J, moved)) return false;
      }
    }
  return true;
}

MonomialIdeal gen_strongly_stable(std::uint64_t seed, std::size_t num_vars,
                                  std::size_t max_degree) {
  if (num_vars < 2 || max_degree < 1)
    throw std::invalid_argument("gen_strongly_stable needs n >= 2 and a positive degree");
  std::mt19937_64 engine(seed);
  const std::size_t count = 1 + engine() % 4;
  std::vector<ExponentVector> seeds;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t degree = 1 + engine() % max_degree;
    ExponentVector m(num_vars);
    for (std::size_t u = 0; u < degree; ++u) ++m[engine() % num_vars];
    seeds.push_back(std::move(m));
  }
  return borel_closure(num_vars, seeds);
}

// ---------------------------------------------------------------------------
// Cross check

CrossCheck cross_check(const MonomialIdeal& initial) {
  const int d = krull_dim(initial);
  if (d < 0) throw std::invalid_argument("the ideal is the whole ring");
  CrossCheck out;
  out.match = true;
  for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i) {
    LevelComparison level;
    level.level = i;
    const MonomialIdeal J_i = evaluate_zero(initial, i);
    const auto certificate = certify_finite(J_i);
    level.finite = certificate.has_value();
    if (certificate) level.c = c_value(J_i, *certificate);
    level.oracle = a_def(initial, i, default_a_ceiling(initial, i));
    level.match = level.finite ? (!level.oracle.infinite && level.oracle.value == level.c)
                               : level.oracle.infinite;
    out.match = out.match && level.match;
    out.levels.push_back(std::move(level));
  }
  const MonomialIdeal J_d = evaluate_zero(initial, static_cast<std::size_t>(d));
  if (J_d.is_artinian()) out.r = r_value(J_d);
  try {
    out.r_def = r_def(J_d, default_r_ceiling(J_d));
  } catch (const NotArtinian&) {
  }
  out.r_match = out.r == out.r_def;
  out.match = out.match && out.r_match;
  return out;
}

CrossCheck cross_check(std::span<const Polynomial> gens) {
  return cross_check(initial_ideal(buchberger(gens)));
}

}  // namespace cmreg
