#include "cmreg/staircase.hpp"

#include <algorithm>

namespace cmreg {

PointSet::PointSet(std::size_t num_vars, std::vector<ExponentVector> points)
    : num_vars_(num_vars), points_(std::move(points)) {
  for (const auto& p : points_)
    if (p.size() != num_vars_)
      throw std::invalid_argument("point has wrong number of coordinates");
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSet::contains(const ExponentVector& v) const {
  return std::binary_search(points_.begin(), points_.end(), v);
}

ExponentSet exponent_set(const MonomialIdeal& J) {
  return ExponentSet(J.num_vars(), J.generators());
}

ExponentSet project(const ExponentSet& E, std::size_t j) {
  if (j >= E.num_vars()) throw std::out_of_range("projection coordinate");
  std::vector<ExponentVector> out;
  out.reserve(E.size());
  for (const auto& v : E.points()) out.push_back(v.without(j));
  return ExponentSet(E.num_vars() - 1, std::move(out));
}

bool is_c_finite(const ExponentSet& E_i, const ExponentSet& E_next) {
  const auto s = E_i.num_vars();
  if (s == 0 || E_next.num_vars() + 1 != s)
    throw std::invalid_argument("is_c_finite: E_next must have one coordinate fewer");
  const auto shadow = project(E_i, s - 1);
  for (const auto& a : shadow.points()) {
    if (E_next.contains(a)) continue;
    for (std::size_t j = 0; j + 1 < s; ++j) {
      const auto pa = a.without(j);
      bool found = std::any_of(E_next.points().begin(), E_next.points().end(),
                               [&](const ExponentVector& b) {
                                 return divides(b.without(j), pa);
                               });
      if (!found) return false;
    }
  }
  return true;
}

namespace {

void collect_corners(const MonomialIdeal& J, const ExponentVector& box,
                     ExponentVector& a, std::size_t var,
                     std::vector<ExponentVector>& out) {
  const auto s = J.num_vars();
  // Remaining coordinates are 0, so membership here rules out the subtree.
  if (contains(J, a)) return;
  if (var == s) {
    for (std::size_t j = 0; j < s; ++j) {
      ++a[j];
      const bool inside = contains(J, a);
      --a[j];
      if (!inside) return;
    }
    out.push_back(a);
    return;
  }
  for (Exponent e = 0; e < box[var]; ++e) {
    a[var] = e;
    collect_corners(J, box, a, var + 1, out);
    if (contains(J, a)) break;
  }
  a[var] = 0;
}

}  // namespace

CornerSet corners(const MonomialIdeal& J) {
  const auto s = J.num_vars();
  ExponentVector box(s);
  for (const auto& g : J.generators())
    for (std::size_t j = 0; j < s; ++j) box[j] = std::max(box[j], g[j]);
  // A variable absent from every generator never pushes a point into J.
  for (std::size_t j = 0; j < s; ++j)
    if (box[j] == 0) return CornerSet(s);
  std::vector<ExponentVector> out;
  ExponentVector a(s);
  collect_corners(J, box, a, 0, out);
  return CornerSet(s, std::move(out));
}

std::optional<FinitenessCertificate> certify_finite(const MonomialIdeal& J) {
  if (J.num_vars() == 0) return FinitenessCertificate(J);
  if (!is_c_finite(exponent_set(J), exponent_set(evaluate_zero(J, 1))))
    return std::nullopt;
  return FinitenessCertificate(J);
}

namespace {

ExtendedDegree max_degree(const CornerSet& F) {
  ExtendedDegree best;
  for (const auto& a : F.points())
    best = max(best, ExtendedDegree(static_cast<int>(a.degree())));
  return best;
}

}  // namespace

ExtendedDegree c_value(const MonomialIdeal& J_i,
                       const FinitenessCertificate& certificate) {
  if (!(certificate.ideal() == J_i))
    throw std::invalid_argument("finiteness certificate issued for another ideal");
  return max_degree(corners(J_i));
}

int r_value(const MonomialIdeal& J_d) {
  if (J_d.is_unit()) throw std::invalid_argument("r_value of the unit ideal");
  if (!J_d.is_artinian()) throw InfiniteReductionNumber();
  if (J_d.num_vars() == 0) return 0;
  return max_degree(corners(J_d)).value();
}

}  // namespace cmreg
