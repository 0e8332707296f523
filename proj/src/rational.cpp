#include "hypcover/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "hypcover/errors.hpp"

namespace hypcover {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = mp::gcd(mp::abs(num_), den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("malformed integer '" + std::string(s) + "'");
  BigInt value{std::string(s)};
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) throw ParseError("malformed denominator in '" + std::string(text) + "'");
  BigInt den(std::string{den_text});
  if (den.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash)), den);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw std::domain_error("rational from non-finite double");
  int exponent = 0;
  double mantissa = std::frexp(value, &exponent);
  // 53-bit integer mantissa times 2^(exponent - 53).
  auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  if (exponent >= 0) return Rational(BigInt(scaled) << exponent);
  return Rational(BigInt(scaled), BigInt(1) << -exponent);
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

double ratio_to_double(const BigInt& num, const BigInt& den) {
  if (num.is_zero()) return 0.0;
  BigInt n = mp::abs(num);
  BigInt d = mp::abs(den);
  // Scale so the integer quotient carries about 64 significant bits.
  long shift = 64 - (static_cast<long>(mp::msb(n)) - static_cast<long>(mp::msb(d)));
  BigInt q = shift >= 0 ? BigInt((n << shift) / d) : BigInt(n / (d << -shift));
  double value = std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
  return (num.sign() < 0) != (den.sign() < 0) ? -value : value;
}

double Rational::to_double() const { return ratio_to_double(num_, den_); }

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  BigInt n = num_ * rhs.den_;
  BigInt d = den_ * rhs.num_;
  num_ = std::move(n);
  den_ = std::move(d);
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  BigInt l = lhs.num_ * rhs.den_;
  BigInt r = rhs.num_ * lhs.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw std::domain_error("zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  auto e = static_cast<unsigned>(exponent);
  return Rational(mp::pow(base.num(), e), mp::pow(base.den(), e));
}

bool exact_sqrt(const Rational& r, Rational& root) {
  if (r.sign() < 0) return false;
  BigInt n = mp::sqrt(r.num());
  BigInt d = mp::sqrt(r.den());
  if (n * n != r.num() || d * d != r.den()) return false;
  root = Rational(n, d);
  return true;
}

}  // namespace hypcover
