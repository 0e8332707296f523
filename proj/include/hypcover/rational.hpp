#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

namespace hypcover {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Exact rational number over arbitrary-precision integers.
 *
 * Always normalized: the denominator is positive and coprime to the
 * numerator, zero is 0/1. Equality is therefore structural.
 */
class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  template <std::integral T>
  Rational(T value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)

  explicit Rational(BigInt num) : num_(std::move(num)), den_(1) {}
  Rational(BigInt num, BigInt den);

  /// Exact value of a finite double.
  static Rational from_double(double value);

  /// Parses "p/q" or "p" (optional leading minus, decimal digits only).
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  /// Nearest-ish double; exact ratios of huge integers do not overflow.
  double to_double() const;
  explicit operator double() const { return to_double(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

Rational abs(const Rational& r);

/// Integer power; negative exponents invert (throws std::domain_error on 0^-k).
Rational pow(const Rational& base, long exponent);

/// Exact square root when r is the square of a rational, else false.
bool exact_sqrt(const Rational& r, Rational& root);

/// Converts a ratio of big integers to double without intermediate overflow.
double ratio_to_double(const BigInt& num, const BigInt& den);

}  // namespace hypcover

namespace Eigen {

template <>
struct NumTraits<hypcover::Rational> : GenericNumTraits<hypcover::Rational> {
  using Real = hypcover::Rational;
  using NonInteger = hypcover::Rational;
  using Nested = hypcover::Rational;
  using Literal = hypcover::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 32,
    MulCost = 64
  };
};

}  // namespace Eigen
