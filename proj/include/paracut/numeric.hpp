#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace paracut {

using BigInt = mpz_class;

// Exact rational number, always kept in lowest terms with a positive
// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(const BigInt& value) : value_(value) {}                 // NOLINT
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(mpq_class value);

  // Accepts "p", "p/q", with an optional leading '-' or U+2212.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }

  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_;
};

Rational abs(const Rational& x);
const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);
Rational midpoint(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Parses a comma-separated list of rationals ("1/2,-3,0").
std::vector<Rational> parse_rational_list(std::string_view text);
std::string format_rational_list(const std::vector<Rational>& values);

// Value and one-sided slope of an affine function at a common point. Ordered
// lexicographically, which realizes the comparison of the two functions at
// point + eps for an infinitesimal eps > 0.
struct LexValue {
  Rational value;
  Rational slope;

  LexValue& operator+=(const LexValue& o) {
    value += o.value;
    slope += o.slope;
    return *this;
  }
  friend LexValue operator+(LexValue a, const LexValue& b) { return a += b; }
  friend bool operator==(const LexValue&, const LexValue&) = default;
  friend std::strong_ordering operator<=>(const LexValue& a,
                                          const LexValue& b) {
    if (auto c = a.value <=> b.value; c != 0) return c;
    return a.slope <=> b.slope;
  }
  int sign() const { return value.sign() != 0 ? value.sign() : slope.sign(); }
};

std::strong_ordering lex_compare(const LexValue& a, const LexValue& b);

// intercept + slope * lambda.
struct AffineLine {
  Rational intercept;
  Rational slope;

  Rational at(const Rational& lambda) const {
    return intercept + slope * lambda;
  }
  // Value at `lambda` paired with the slope seen in direction `dir` (+1/-1).
  LexValue lex_at(const Rational& lambda, int dir = 1) const {
    return {at(lambda), dir >= 0 ? slope : -slope};
  }
  bool is_zero() const { return intercept.is_zero() && slope.is_zero(); }

  AffineLine& operator+=(const AffineLine& o) {
    intercept += o.intercept;
    slope += o.slope;
    return *this;
  }
  AffineLine& operator-=(const AffineLine& o) {
    intercept -= o.intercept;
    slope -= o.slope;
    return *this;
  }
  friend AffineLine operator+(AffineLine a, const AffineLine& b) {
    return a += b;
  }
  friend AffineLine operator-(AffineLine a, const AffineLine& b) {
    return a -= b;
  }
  AffineLine scaled(const Rational& k) const {
    return {intercept * k, slope * k};
  }
  // The same function written in the coordinate t = lambda - origin.
  AffineLine shifted(const Rational& origin) const {
    return {at(origin), slope};
  }
  friend bool operator==(const AffineLine&, const AffineLine&) = default;
};

std::ostream& operator<<(std::ostream& os, const AffineLine& l);

// The lambda where a(lambda) = b(lambda); empty when the slopes coincide.
std::optional<Rational> line_intersection(const AffineLine& a,
                                          const AffineLine& b);

}  // namespace paracut
