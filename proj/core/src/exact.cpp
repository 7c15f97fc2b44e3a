#include "ktree/exact.hpp"

#include <charconv>

#include "ktree/error.hpp"

namespace ktree {

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw Error(ErrorCode::BadConfig, "rational with zero denominator");
  value_ = Value(numerator, denominator);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw Error(ErrorCode::BadConfig, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const { return numerator().str() + "/" + denominator().str(); }

std::string Rational::decimal(int digits) const {
  BigInt num = numerator();
  const BigInt den = denominator();
  const bool negative = num < 0;
  if (negative) num = -num;

  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;

  BigInt scaled = num * scale;
  BigInt q = scaled / den;
  const BigInt r = scaled % den;
  const BigInt twice = 2 * r;
  if (twice > den || (twice == den && (q % 2) != 0)) q += 1;

  std::string body = BigInt(q / scale).str();
  if (digits > 0) {
    std::string frac = BigInt(q % scale).str();
    body += '.';
    body += std::string(static_cast<std::size_t>(digits) - frac.size(), '0');
    body += frac;
  }
  const bool zero = q == 0;
  return (negative && !zero) ? "-" + body : body;
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw Error(ErrorCode::Parse, "empty integer in rational");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw Error(ErrorCode::Parse, "bad integer in rational");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw Error(ErrorCode::Parse, "bad integer '" + std::string(part) + "'");
      }
    }
    return BigInt(std::string(part));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(std::size_t degree, const BigInt& coeff) {
  std::vector<BigInt> c(degree + 1);
  c[degree] = coeff;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int IntPolynomial::lowest_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

BigInt IntPolynomial::value_at_one() const {
  BigInt s = 0;
  for (const BigInt& c : coeffs_) s += c;
  return s;
}

BigInt IntPolynomial::derivative_at_one() const {
  BigInt s = 0;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) s += coeffs_[i] * static_cast<unsigned>(i);
  return s;
}

Rational IntPolynomial::mean_order() const {
  const BigInt v = value_at_one();
  if (v == 0) throw Error(ErrorCode::BadConfig, "mean order of a polynomial summing to zero");
  return Rational(derivative_at_one(), v);
}

IntPolynomial IntPolynomial::shifted(std::size_t m) const {
  if (is_zero()) return {};
  IntPolynomial out;
  out.coeffs_.assign(m, BigInt(0));
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

void IntPolynomial::multiply_one_plus(const IntPolynomial& other) {
  if (is_zero() || other.is_zero()) return;
  const std::size_t a = coeffs_.size();
  const std::size_t b = other.coeffs_.size();
  coeffs_.resize(a + b - 1, BigInt(0));
  // Walk downward so each source coefficient is read before it is overwritten.
  for (std::size_t i = a; i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 1; j < b; ++j) coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    if (other.coeffs_[0] != 0) coeffs_[i] += coeffs_[i] * other.coeffs_[0];
  }
  trim();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    if (i == 0 || mag != 1) out += mag.str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace ktree
