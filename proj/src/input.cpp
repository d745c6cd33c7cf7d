#include "cmreg/input.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace cmreg {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error([&] {
        std::string where;
        if (line) where += "line " + std::to_string(line);
        if (column) where += (where.empty() ? "" : ", ") + std::string("column ") + std::to_string(column);
        return where.empty() ? message : where + ": " + message;
      }()),
      line_(line),
      column_(column) {}

namespace {

class PolynomialParser {
public:
  PolynomialParser(std::string_view text, const RingPtr& ring)
      : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    std::vector<Term> terms;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(negative));
    for (skip_space(); !at_end(); skip_space()) {
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
      terms.push_back(term(negative));
    }
    return Polynomial(ring_, std::move(terms));
  }

private:
  Term term(bool negative) {
    const auto& field = ring_->field();
    Term t{ExponentVector(ring_->num_vars()), negative ? field.neg(1) : 1};
    factor(t);
    for (skip_space(); !at_end() && peek() == '*'; skip_space()) {
      ++pos_;
      factor(t);
    }
    return t;
  }

  void factor(Term& t) {
    skip_space();
    if (at_end()) fail("expected a coefficient or variable");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const auto value = integer();
      t.coefficient = ring_->field().mul(t.coefficient, ring_->field().reduce(
                                                             static_cast<std::int64_t>(value % ring_->characteristic())));
      return;
    }
    const auto start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    if (start == pos_) fail("unexpected character '" + std::string(1, peek()) + "'");
    const auto name = text_.substr(start, pos_ - start);
    const auto index = ring_->index_of(name);
    if (!index) fail("unknown variable '" + std::string(name) + "'", start);
    std::uint64_t exponent = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        fail("bad exponent");
      exponent = integer();
      if (exponent > (1u << 20)) fail("exponent too large");
    }
    t.exponent[*index] += static_cast<Exponent>(exponent);
  }

  std::uint64_t integer() {
    const auto start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc()) fail("integer out of range", start);
    return value;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& message) { fail(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t at) {
    throw ParseError(0, at + 1, message);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split_words(std::string_view line) {
  std::istringstream is{std::string(line)};
  std::vector<std::string> words;
  for (std::string w; is >> w;) words.push_back(w);
  return words;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return PolynomialParser(text, ring).parse();
}

InputSpec parse_input(std::string_view text, std::optional<std::uint32_t> characteristic) {
  InputSpec spec;
  std::size_t line_number = 0;
  bool mode_allowed = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_number;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t indent = static_cast<std::size_t>(line.data() - raw.data());

    if (!spec.ring) {
      const auto words = split_words(line);
      if (words.empty() || words[0] != "ring")
        throw ParseError(line_number, indent + 1, "expected 'ring <p> <variables...>'");
      if (words.size() < 3)
        throw ParseError(line_number, 0, "ring line needs a modulus and at least one variable");
      std::uint64_t p = 0;
      auto [ptr, ec] = std::from_chars(words[1].data(), words[1].data() + words[1].size(), p);
      if (ec != std::errc() || ptr != words[1].data() + words[1].size())
        throw ParseError(line_number, 0, "bad modulus '" + words[1] + "'");
      if (characteristic) p = *characteristic;
      if (!is_prime(p)) throw ParseError(line_number, 0, "modulus " + std::to_string(p) + " is not prime");
      if (p >= (1u << 31)) throw ParseError(line_number, 0, "modulus must be below 2^31");
      try {
        spec.ring = Ring::make(std::vector<std::string>(words.begin() + 2, words.end()),
                               static_cast<std::uint32_t>(p));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_number, 0, e.what());
      }
      mode_allowed = true;
      continue;
    }

    if (mode_allowed && line.starts_with("mode")) {
      const auto words = split_words(line);
      if (words.size() == 2 && words[0] == "mode" && (words[1] == "monomial" || words[1] == "polynomial")) {
        spec.monomial_mode = words[1] == "monomial";
        mode_allowed = false;
        continue;
      }
      if (words[0] == "mode") throw ParseError(line_number, 0, "mode must be 'monomial' or 'polynomial'");
    }
    mode_allowed = false;

    Polynomial f(spec.ring);
    try {
      f = parse_polynomial(line, spec.ring);
    } catch (const ParseError& e) {
      // Rebase the column onto the full line.
      const std::string message = e.what();
      const auto colon = message.find(": ");
      throw ParseError(line_number, e.column() + indent,
                       colon == std::string::npos ? message : message.substr(colon + 2));
    }
    if (spec.monomial_mode) {
      if (f.num_terms() != 1)
        throw ParseError(line_number, 0, "monomial mode admits exactly one nonzero term per line");
      f = Polynomial::monomial(spec.ring, f.leading_exponent());
    } else if (!f.is_homogeneous()) {
      throw ParseError(line_number, 0, "non-homogeneous generator '" + std::string(line) + "'");
    }
    spec.generators.push_back(std::move(f));
  }
  if (!spec.ring) throw ParseError(0, 0, "missing 'ring' line");
  if (spec.generators.empty()) throw ParseError(0, 0, "no generators");
  return spec;
}

std::string format_input(const InputSpec& spec) {
  std::ostringstream os;
  os << "ring " << spec.ring->characteristic();
  for (const auto& name : spec.ring->names()) os << ' ' << name;
  os << '\n';
  if (spec.monomial_mode) os << "mode monomial\n";
  for (const auto& g : spec.generators) os << to_string(g) << '\n';
  return os.str();
}

MonomialIdeal monomial_ideal(const InputSpec& spec) {
  std::vector<ExponentVector> monomials;
  for (const auto& g : spec.generators) {
    if (g.num_terms() != 1) throw std::invalid_argument("generator is not a monomial");
    monomials.push_back(g.leading_exponent());
  }
  return minimalize(spec.ring->num_vars(), monomials);
}

}  // namespace cmreg
