#include "cmreg/ring.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace cmreg {

// ---------------------------------------------------------------------------
// ExponentVector

std::uint64_t ExponentVector::degree() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0});
}

bool ExponentVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Exponent e) { return e == 0; });
}

ExponentVector ExponentVector::without(std::size_t j) const {
  if (j >= entries_.size()) throw std::out_of_range("coordinate out of range");
  std::vector<Exponent> out;
  out.reserve(entries_.size() - 1);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (k != j) out.push_back(entries_[k]);
  return ExponentVector(std::move(out));
}

ExponentVector ExponentVector::prefix(std::size_t k) const {
  if (k > entries_.size()) throw std::out_of_range("prefix longer than vector");
  return ExponentVector(std::vector<Exponent>(entries_.begin(),
                                              entries_.begin() + k));
}

namespace {

void require_same_length(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("exponent vectors of different length");
}

}  // namespace

bool divides(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) throw std::domain_error("exponent difference negative");
    out[i] = a[i] - b[i];
  }
  return out;
}

bool coprime(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const ExponentVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

std::strong_ordering revlex_compare(const ExponentVector& a,
                                    const ExponentVector& b) {
  require_same_length(a, b);
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da <=> db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i])
      // a - b negative here means a is larger.
      return a[i] < b[i] ? std::strong_ordering::greater
                         : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// PrimeField

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d)
    if (value % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw std::invalid_argument("modulus must be below 2^31");
  if (!is_prime(p))
    throw std::invalid_argument("modulus " + std::to_string(p) +
                                " is not prime");
}

Coefficient PrimeField::reduce(std::int64_t value) const {
  auto r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coefficient>(r);
}

Coefficient PrimeField::add(Coefficient a, Coefficient b) const {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Coefficient>(s >= p_ ? s - p_ : s);
}

Coefficient PrimeField::sub(Coefficient a, Coefficient b) const {
  return a >= b ? a - b : static_cast<Coefficient>(std::uint64_t{a} + p_ - b);
}

Coefficient PrimeField::mul(Coefficient a, Coefficient b) const {
  return static_cast<Coefficient>(std::uint64_t{a} * b % p_);
}

Coefficient PrimeField::inverse(Coefficient a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero");
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a % p_;
  for (std::uint64_t e = p_ - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
  }
  return static_cast<Coefficient>(result);
}

// ---------------------------------------------------------------------------
// Ring

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  if (!alpha(s[0])) return false;
  return std::all_of(s.begin(), s.end(), [&](char c) {
    return alpha(c) || (c >= '0' && c <= '9');
  });
}

}  // namespace

Ring::Ring(std::vector<std::string> names, std::uint32_t characteristic)
    : names_(std::move(names)), field_(characteristic) {
  if (names_.empty()) throw std::invalid_argument("ring needs a variable");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n))
      throw std::invalid_argument("bad variable name '" + n + "'");
    if (!seen.insert(n).second)
      throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
}

RingPtr Ring::make(std::size_t n, std::uint32_t characteristic) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return std::make_shared<const Ring>(std::move(names), characteristic);
}

RingPtr Ring::make(std::vector<std::string> names,
                   std::uint32_t characteristic) {
  return std::make_shared<const Ring>(std::move(names), characteristic);
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr Ring::prefix(std::size_t k) const {
  if (k == 0 || k > names_.size())
    throw std::invalid_argument("prefix ring size out of range");
  return make(std::vector<std::string>(names_.begin(), names_.begin() + k),
              characteristic());
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

bool revlex_greater(const ExponentVector& a, const ExponentVector& b) {
  return revlex_compare(a, b) == std::strong_ordering::greater;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("null ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("null ring");
  const auto& field = ring_->field();
  for (auto& t : terms) {
    if (t.exponent.size() != ring_->num_vars())
      throw std::invalid_argument("term has wrong number of variables");
    t.coefficient %= field.characteristic();
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return revlex_greater(a.exponent, b.exponent);
  });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().exponent == t.exponent)
      terms_.back().coefficient = field.add(terms_.back().coefficient,
                                            t.coefficient);
    else
      terms_.push_back(std::move(t));
  }
  std::erase_if(terms_, [](const Term& t) { return t.coefficient == 0; });
}

Polynomial Polynomial::monomial(RingPtr ring, ExponentVector exponent,
                                Coefficient coefficient) {
  std::vector<Term> t;
  t.push_back({std::move(exponent), coefficient});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  ExponentVector e(ring->num_vars());
  if (index >= e.size()) throw std::out_of_range("variable index");
  e[index] = 1;
  return monomial(std::move(ring), std::move(e));
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t value) {
  const auto c = ring->field().reduce(value);
  const auto n = ring->num_vars();
  return monomial(std::move(ring), ExponentVector(n), c);
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty())
    throw std::domain_error("the zero polynomial has no leading term");
  return terms_.front();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.front().exponent.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.exponent.degree() == d; });
}

std::uint64_t Polynomial::degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exponent.degree());
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_);
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coefficient = ring_->field().neg(t.coefficient);
  return out;
}

Polynomial Polynomial::scaled(Coefficient c) const {
  return shifted(ExponentVector(ring_->num_vars()), c);
}

Polynomial Polynomial::shifted(const ExponentVector& shift,
                               Coefficient c) const {
  Polynomial out(ring_);
  c %= ring_->characteristic();
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the order.
  for (const auto& t : terms_)
    out.terms_.push_back({t.exponent + shift, ring_->field().mul(t.coefficient, c)});
  return out;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inverse(leading_coefficient()));
}

void Polynomial::subtract_multiple(Coefficient c, const ExponentVector& shift,
                                   const Polynomial& g) {
  require_same_ring(*this, g);
  const auto& field = ring_->field();
  c %= field.characteristic();
  if (c == 0 || g.is_zero()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + g.terms_.size());
  auto it = terms_.begin();
  auto jt = g.terms_.begin();
  while (it != terms_.end() || jt != g.terms_.end()) {
    if (jt == g.terms_.end()) {
      merged.push_back(std::move(*it++));
      continue;
    }
    auto e = jt->exponent + shift;
    const auto neg = field.neg(field.mul(c, jt->coefficient));
    if (it == terms_.end()) {
      merged.push_back({std::move(e), neg});
      ++jt;
      continue;
    }
    const auto cmp = revlex_compare(it->exponent, e);
    if (cmp == std::strong_ordering::greater) {
      merged.push_back(std::move(*it++));
    } else if (cmp == std::strong_ordering::less) {
      merged.push_back({std::move(e), neg});
      ++jt;
    } else {
      const auto sum = field.add(it->coefficient, neg);
      if (sum != 0) merged.push_back({std::move(e), sum});
      ++it;
      ++jt;
    }
  }
  terms_ = std::move(merged);
}

Polynomial Polynomial::evaluate_last_zero(std::size_t k) const {
  const auto n = ring_->num_vars();
  if (k >= n) throw std::invalid_argument("cannot evaluate every variable");
  auto target = ring_->prefix(n - k);
  std::vector<Term> kept;
  for (const auto& t : terms_) {
    bool survives = true;
    for (std::size_t j = n - k; j < n; ++j) survives &= t.exponent[j] == 0;
    if (survives) kept.push_back({t.exponent.prefix(n - k), t.coefficient});
  }
  return Polynomial(std::move(target), std::move(kept));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return *a.ring_ == *b.ring_ && a.terms_ == b.terms_;
}

void require_same_ring(const Polynomial& f, const Polynomial& g) {
  if (f.ring() != g.ring() && !(*f.ring() == *g.ring()))
    throw std::invalid_argument("polynomials belong to different rings");
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  Polynomial out = f;
  out.subtract_multiple(f.ring()->field().neg(1), ExponentVector(f.ring()->num_vars()), g);
  return out;
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  Polynomial out = f;
  out.subtract_multiple(1, ExponentVector(f.ring()->num_vars()), g);
  return out;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  std::vector<Term> product;
  product.reserve(f.num_terms() * g.num_terms());
  const auto& field = f.ring()->field();
  for (const auto& a : f.terms())
    for (const auto& b : g.terms())
      product.push_back({a.exponent + b.exponent,
                         field.mul(a.coefficient, b.coefficient)});
  return Polynomial(f.ring(), std::move(product));
}

Polynomial operator*(Coefficient c, const Polynomial& f) { return f.scaled(c); }

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const auto p = f.ring()->characteristic();
  const auto& names = f.ring()->names();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool negative = t.coefficient > p / 2;
    Coefficient magnitude = negative ? p - t.coefficient : t.coefficient;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (magnitude != 1 || t.exponent.is_zero()) {
      os << magnitude;
      wrote = true;
    }
    for (std::size_t i = 0; i < t.exponent.size(); ++i) {
      if (t.exponent[i] == 0) continue;
      os << (wrote ? "*" : "") << names[i];
      if (t.exponent[i] > 1) os << '^' << t.exponent[i];
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
  return os << to_string(f);
}

}  // namespace cmreg
