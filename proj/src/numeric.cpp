#include "paracut/numeric.hpp"

#include <stdexcept>

#include "paracut/errors.hpp"

namespace paracut {

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";  // U+2212

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) : value_(num, den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (s.starts_with(kUnicodeMinus)) {
    negative = true;
    s.remove_prefix(kUnicodeMinus.size());
  } else if (s.starts_with('-')) {
    negative = true;
    s.remove_prefix(1);
  } else if (s.starts_with('+')) {
    s.remove_prefix(1);
  }
  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  return Rational(n, d);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

const Rational& min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}

const Rational& max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

Rational midpoint(const Rational& a, const Rational& b) {
  return (a + b) / Rational(2);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    out.push_back(Rational::parse(text.substr(pos, comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_rational_list(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += values[i].to_string();
  }
  return out;
}

std::strong_ordering lex_compare(const LexValue& a, const LexValue& b) {
  return a <=> b;
}

std::ostream& operator<<(std::ostream& os, const AffineLine& l) {
  return os << l.intercept << " + " << l.slope << "*lambda";
}

std::optional<Rational> line_intersection(const AffineLine& a,
                                          const AffineLine& b) {
  if (a.slope == b.slope) return std::nullopt;
  return (b.intercept - a.intercept) / (a.slope - b.slope);
}

}  // namespace paracut
