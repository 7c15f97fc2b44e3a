#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ktree {

using BigInt = boost::multiprecision::cpp_int;

/// Reduced fraction with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& numerator, const BigInt& denominator);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  /// Exact form "p/q"; integers keep the "/1".
  std::string str() const;
  /// Fixed-point rendering with round-half-even at the last digit.
  std::string decimal(int digits = 6) const;
  /// "p/q (d.dddddd)".
  std::string display() const { return str() + " (" + decimal() + ")"; }
  /// Accepts "p/q" or "p".
  static Rational parse(std::string_view text);

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(BigInt(0)) - a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  using Value = boost::multiprecision::cpp_rational;
  explicit Rational(Value v) : value_(std::move(v)) {}

  Value value_;
};

/// Polynomial with arbitrary-precision integer coefficients; coeffs()[i] is
/// the coefficient of x^i. Trailing zeros are always trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial monomial(std::size_t degree, const BigInt& coeff = 1);
  static IntPolynomial x() { return monomial(1); }
  static IntPolynomial constant(const BigInt& c) { return monomial(0, c); }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Smallest exponent with a nonzero coefficient; -1 for zero.
  int lowest_degree() const;

  BigInt value_at_one() const;
  BigInt derivative_at_one() const;
  /// p'(1) / p(1): the mean exponent under the coefficient weights.
  Rational mean_order() const;

  /// Multiplies by x^m.
  IntPolynomial shifted(std::size_t m) const;
  /// *this * (1 + other), the step of the rooted subtree product.
  void multiply_one_plus(const IntPolynomial& other);

  IntPolynomial& operator+=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// "x^2 + 3x^3" in ascending degree; "0" for zero.
  std::string str() const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

}  // namespace ktree
