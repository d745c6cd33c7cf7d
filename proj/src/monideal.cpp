#include "cmreg/monideal.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>

namespace cmreg {

MonomialIdeal::MonomialIdeal(std::size_t num_vars,
                             std::vector<ExponentVector> monomials)
    : MonomialIdeal(minimalize(num_vars, monomials)) {}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_.front().is_zero();
}

bool MonomialIdeal::is_artinian() const {
  if (num_vars_ == 0 || is_unit()) return true;
  std::vector<bool> has_power(num_vars_, false);
  for (const auto& g : gens_) {
    std::size_t support = 0, var = 0;
    for (std::size_t j = 0; j < num_vars_; ++j)
      if (g[j] != 0) ++support, var = j;
    if (support == 1) has_power[var] = true;
  }
  return std::all_of(has_power.begin(), has_power.end(),
                     [](bool b) { return b; });
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& J) {
  os << '{';
  for (std::size_t i = 0; i < J.size(); ++i)
    os << (i ? "," : "") << J.generators()[i];
  return os << '}';
}

MonomialIdeal minimalize(std::size_t num_vars,
                         std::span<const ExponentVector> monomials) {
  std::vector<ExponentVector> sorted(monomials.begin(), monomials.end());
  for (const auto& m : sorted)
    if (m.size() != num_vars)
      throw std::invalid_argument("monomial has wrong number of variables");
  // Ascending degree: a divisor always precedes its multiples.
  std::sort(sorted.begin(), sorted.end(),
            [](const ExponentVector& a, const ExponentVector& b) {
              return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
            });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  MonomialIdeal out(num_vars);
  for (auto& m : sorted) {
    bool redundant = std::any_of(out.gens_.begin(), out.gens_.end(),
                                 [&](const ExponentVector& g) { return divides(g, m); });
    if (!redundant) out.gens_.push_back(std::move(m));
  }
  std::sort(out.gens_.begin(), out.gens_.end(),
            [](const ExponentVector& a, const ExponentVector& b) {
              return revlex_compare(a, b) == std::strong_ordering::greater;
            });
  return out;
}

bool contains(const MonomialIdeal& J, const ExponentVector& m) {
  if (m.size() != J.num_vars())
    throw std::invalid_argument("monomial has wrong number of variables");
  return std::any_of(J.generators().begin(), J.generators().end(),
                     [&](const ExponentVector& g) { return divides(g, m); });
}

MonomialIdeal evaluate_zero(const MonomialIdeal& J, std::size_t i) {
  const auto s = J.num_vars();
  if (i > s) throw std::invalid_argument("evaluation level exceeds variable count");
  std::vector<ExponentVector> kept;
  for (const auto& g : J.generators()) {
    bool free = true;
    for (std::size_t j = s - i; j < s; ++j) free &= g[j] == 0;
    if (free) kept.push_back(g.prefix(s - i));
  }
  return minimalize(s - i, kept);
}

MonomialIdeal evaluate_one(const MonomialIdeal& J) {
  if (J.num_vars() == 0)
    throw std::invalid_argument("evaluate_one needs at least one variable");
  return saturate_by_var(J, J.num_vars() - 1);
}

MonomialIdeal colon_by_var(const MonomialIdeal& J, std::size_t var) {
  if (var >= J.num_vars()) throw std::out_of_range("variable index");
  std::vector<ExponentVector> out = J.generators();
  for (auto& g : out)
    if (g[var] > 0) --g[var];
  return minimalize(J.num_vars(), out);
}

MonomialIdeal saturate_by_var(const MonomialIdeal& J, std::size_t var) {
  if (var >= J.num_vars()) throw std::out_of_range("variable index");
  std::vector<ExponentVector> out = J.generators();
  for (auto& g : out) g[var] = 0;
  return minimalize(J.num_vars(), out);
}

// ---------------------------------------------------------------------------
// Counting

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return static_cast<std::uint64_t>(result);
}

StandardMonomialCounter::StandardMonomialCounter(MonomialIdeal J)
    : ideal_(std::move(J)) {}

std::uint64_t StandardMonomialCounter::count(std::size_t degree) {
  const auto s = ideal_.num_vars();
  if (s == 0) return (degree == 0 && ideal_.is_zero()) ? 1 : 0;
  Mask all((ideal_.size() + 63) / 64, 0);
  for (std::size_t g = 0; g < ideal_.size(); ++g)
    all[g / 64] |= std::uint64_t{1} << (g % 64);
  return count_from(0, all, degree);
}

std::uint64_t StandardMonomialCounter::count_from(std::size_t var,
                                                  const Mask& live,
                                                  std::size_t rem) {
  const auto s = ideal_.num_vars();
  const auto& gens = ideal_.generators();
  bool any_live = false;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (!(live[g / 64] >> (g % 64) & 1)) continue;
    any_live = true;
    bool divides_already = true;
    for (std::size_t j = var; j < s && divides_already; ++j)
      divides_already = gens[g][j] == 0;
    if (divides_already) return 0;
  }
  const auto remaining_vars = s - var;
  if (!any_live) return binomial(rem + remaining_vars - 1, remaining_vars - 1);
  if (remaining_vars == 1) {
    for (std::size_t g = 0; g < gens.size(); ++g)
      if ((live[g / 64] >> (g % 64) & 1) && gens[g][var] <= rem) return 0;
    return 1;
  }

  auto key = std::make_tuple(var, rem, live);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  std::uint64_t total = 0;
  Mask next(live.size());
  for (std::size_t e = 0; e <= rem; ++e) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t g = 0; g < gens.size(); ++g)
      if ((live[g / 64] >> (g % 64) & 1) && gens[g][var] <= e)
        next[g / 64] |= std::uint64_t{1} << (g % 64);
    total += count_from(var + 1, next, rem - e);
  }
  memo_.emplace(std::move(key), total);
  return total;
}

std::uint64_t graded_dim_quotient(const MonomialIdeal& J, std::size_t r) {
  return StandardMonomialCounter(J).count(r);
}

int krull_dim(const MonomialIdeal& J) {
  const auto s = J.num_vars();
  if (J.is_unit()) return -1;
  if (J.is_zero()) return static_cast<int>(s);
  if (s > 24) throw std::invalid_argument("krull_dim supports at most 24 variables");
  std::vector<std::uint32_t> supports;
  for (const auto& g : J.generators()) {
    std::uint32_t mask = 0;
    for (std::size_t j = 0; j < s; ++j)
      if (g[j]) mask |= 1u << j;
    supports.push_back(mask);
  }
  int best = static_cast<int>(s);
  for (std::uint32_t cover = 0; cover < (1u << s); ++cover) {
    const int size = std::popcount(cover);
    if (size >= best) continue;
    if (std::all_of(supports.begin(), supports.end(),
                    [cover](std::uint32_t m) { return (m & cover) != 0; }))
      best = size;
  }
  return static_cast<int>(s) - best;
}

std::optional<ExponentVector> lcm_gens(const MonomialIdeal& J, std::size_t i) {
  const auto level = evaluate_zero(J, i);
  if (level.is_zero()) return std::nullopt;
  ExponentVector out(level.num_vars());
  for (const auto& g : level.generators()) out = lcm(out, g);
  return out;
}

}  // namespace cmreg
