#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <vector>

#include <Eigen/Core>

#include "hypcover/rational.hpp"

namespace hypcover {

template <typename Scalar>
using Mat2 = Eigen::Matrix<Scalar, 2, 2>;

using RatMat2 = Mat2<Rational>;
using Mod2Mat = Mat2<int>;

template <typename Derived>
typename Derived::Scalar det2(const Eigen::MatrixBase<Derived>& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

/**
 * Exact element of SL2(Q).
 *
 * Construction from arbitrary entries verifies a*d - b*c == 1 and throws
 * NotUnimodular otherwise. Products and inverses of valid matrices skip
 * the check since the determinant is multiplicative.
 */
class UniMat {
 public:
  UniMat() : m_(RatMat2::Identity()) {}
  explicit UniMat(RatMat2 m);
  UniMat(Rational a, Rational b, Rational c, Rational d);

  static UniMat identity() { return UniMat(); }

  const RatMat2& matrix() const { return m_; }
  const Rational& operator()(Eigen::Index row, Eigen::Index col) const { return m_(row, col); }

  Mat2<double> to_double() const { return m_.cast<double>(); }
  bool is_integral() const;

  friend bool operator==(const UniMat& x, const UniMat& y) { return x.m_ == y.m_; }
  /// Lexicographic over (a, b, c, d); only meant for ordered containers.
  friend std::strong_ordering operator<=>(const UniMat& x, const UniMat& y);

  friend std::ostream& operator<<(std::ostream& os, const UniMat& m);

 private:
  struct Trusted {};
  UniMat(RatMat2 m, Trusted) : m_(std::move(m)) {}

  friend UniMat mat_mul(const UniMat& x, const UniMat& y);
  friend UniMat mat_inv(const UniMat& x);

  RatMat2 m_;
};

UniMat mat_mul(const UniMat& x, const UniMat& y);
inline UniMat operator*(const UniMat& x, const UniMat& y) { return mat_mul(x, y); }

/// Adjugate [[d, -b], [-c, a]].
UniMat mat_inv(const UniMat& x);

/// Binary powering; negative exponents go through the inverse.
UniMat mat_pow(const UniMat& x, long k);

/// The two generators of the dense pair.
enum class Generator { A, B };

/// A = [[2, 1], [0, 1/2]].
const UniMat& dense_a();
/// B = [[3, 0], [1, 1/3]].
const UniMat& dense_b();
/// U = [[1, 2], [0, 1]], generator of Gamma(2).
const UniMat& gamma2_u();
/// V = [[1, 0], [2, 1]], generator of Gamma(2).
const UniMat& gamma2_v();
/// C = [[1, 2/3], [1/8, 13/12]], the claimed accumulation matrix.
const UniMat& limit_c();

const UniMat& generator_matrix(Generator g);

/**
 * Closed-form powers valid for every integer k:
 *   A^k = [[2^k, (4^k - 1) / (2^(k-1) * 3)], [0, 2^-k]]
 *   B^k = [[3^k, 0], [(9^k - 1) / (3^(k-1) * 8), 3^-k]]
 */
UniMat closed_power(Generator g, long k);

/// Primitive integer vector, first nonzero coordinate positive.
struct IntPair {
  BigInt p;
  BigInt q;

  friend bool operator==(const IntPair&, const IntPair&) = default;
  friend std::ostream& operator<<(std::ostream& os, const IntPair& v) {
    return os << '(' << v.p << ',' << v.q << ')';
  }
};

struct EigenPair {
  Rational value;
  IntPair vector;

  friend bool operator==(const EigenPair&, const EigenPair&) = default;
};

/// Rational eigenpairs, sorted by decreasing eigenvalue.
using RatEigen = std::vector<EigenPair>;

/// Scales a nonzero rational vector to its canonical primitive integer form.
IntPair canonical_vector(const Rational& x, const Rational& y);

/// True when m * v is a rational multiple of v.
bool maps_parallel(const UniMat& m, const IntPair& v);

/**
 * All rational eigenvalues with a primitive eigenvector each. Empty when
 * tr^2 - 4 is not the square of a rational. For m = +-I the standard basis
 * is returned.
 */
RatEigen eigen_rational(const UniMat& m);

/// A rational common eigenvector of g and h, if one exists.
std::optional<IntPair> common_eigenvector(const UniMat& g, const UniMat& h);

/// Entrywise reduction mod 2; throws NonIntegerEntry for non-integral input.
Mod2Mat mod2_residue(const UniMat& m);

/// Max-norm distance max |x_ij - y_ij|.
Rational sup_dist(const UniMat& x, const UniMat& y);

}  // namespace hypcover
