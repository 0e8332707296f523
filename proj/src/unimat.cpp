#include "hypcover/unimat.hpp"

#include <algorithm>
#include <sstream>

#include "hypcover/errors.hpp"

namespace hypcover {

namespace mp = boost::multiprecision;

UniMat::UniMat(RatMat2 m) : m_(std::move(m)) {
  if (det2(m_) != Rational(1)) {
    throw NotUnimodular("matrix determinant is " + det2(m_).to_string() + ", expected 1");
  }
}

UniMat::UniMat(Rational a, Rational b, Rational c, Rational d) {
  RatMat2 m;
  m << a, b, c, d;
  *this = UniMat(std::move(m));
}

bool UniMat::is_integral() const {
  return m_(0, 0).is_integer() && m_(0, 1).is_integer() && m_(1, 0).is_integer() &&
         m_(1, 1).is_integer();
}

std::strong_ordering operator<=>(const UniMat& x, const UniMat& y) {
  for (Eigen::Index i = 0; i < 4; ++i) {
    auto cmp = x.m_(i / 2, i % 2) <=> y.m_(i / 2, i % 2);
    if (cmp != 0) return cmp;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const UniMat& m) {
  return os << "[[" << m(0, 0) << ',' << m(0, 1) << "],[" << m(1, 0) << ',' << m(1, 1) << "]]";
}

UniMat mat_mul(const UniMat& x, const UniMat& y) {
  return UniMat(RatMat2(x.m_ * y.m_), UniMat::Trusted{});
}

UniMat mat_inv(const UniMat& x) {
  RatMat2 adj;
  adj << x.m_(1, 1), -x.m_(0, 1), -x.m_(1, 0), x.m_(0, 0);
  return UniMat(std::move(adj), UniMat::Trusted{});
}

UniMat mat_pow(const UniMat& x, long k) {
  UniMat base = k < 0 ? mat_inv(x) : x;
  unsigned long e = k < 0 ? -static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
  UniMat result;
  while (e != 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

const UniMat& dense_a() {
  static const UniMat m(2, 1, 0, Rational(1, 2));
  return m;
}

const UniMat& dense_b() {
  static const UniMat m(3, 0, 1, Rational(1, 3));
  return m;
}

const UniMat& gamma2_u() {
  static const UniMat m(1, 2, 0, 1);
  return m;
}

const UniMat& gamma2_v() {
  static const UniMat m(1, 0, 2, 1);
  return m;
}

const UniMat& limit_c() {
  static const UniMat m(1, Rational(2, 3), Rational(1, 8), Rational(13, 12));
  return m;
}

const UniMat& generator_matrix(Generator g) { return g == Generator::A ? dense_a() : dense_b(); }

UniMat closed_power(Generator g, long k) {
  if (g == Generator::A) {
    Rational top_right = (pow(Rational(4), k) - 1) / (pow(Rational(2), k - 1) * 3);
    return UniMat(pow(Rational(2), k), top_right, 0, pow(Rational(2), -k));
  }
  Rational bottom_left = (pow(Rational(9), k) - 1) / (pow(Rational(3), k - 1) * 8);
  return UniMat(pow(Rational(3), k), 0, bottom_left, pow(Rational(3), -k));
}

IntPair canonical_vector(const Rational& x, const Rational& y) {
  BigInt l = mp::lcm(x.den(), y.den());
  BigInt p = x.num() * (l / x.den());
  BigInt q = y.num() * (l / y.den());
  BigInt g = mp::gcd(mp::abs(p), mp::abs(q));
  if (g.is_zero()) throw std::domain_error("zero vector has no canonical form");
  p /= g;
  q /= g;
  if (p.sign() < 0 || (p.is_zero() && q.sign() < 0)) {
    p = -p;
    q = -q;
  }
  return {std::move(p), std::move(q)};
}

bool maps_parallel(const UniMat& m, const IntPair& v) {
  Rational p(v.p), q(v.q);
  Rational mp_ = m(0, 0) * p + m(0, 1) * q;
  Rational mq = m(1, 0) * p + m(1, 1) * q;
  return mp_ * q - mq * p == Rational(0);
}

namespace {

bool is_scalar(const UniMat& m) { return m(0, 1).is_zero() && m(1, 0).is_zero() && m(0, 0) == m(1, 1); }

IntPair kernel_vector(const UniMat& m, const Rational& lambda) {
  // One row of m - lambda*I is nonzero unless m is scalar.
  Rational r00 = m(0, 0) - lambda;
  Rational r11 = m(1, 1) - lambda;
  if (!r00.is_zero() || !m(0, 1).is_zero()) return canonical_vector(m(0, 1), -r00);
  return canonical_vector(-r11, m(1, 0));
}

}  // namespace

RatEigen eigen_rational(const UniMat& m) {
  if (is_scalar(m)) {
    return {{m(0, 0), {1, 0}}, {m(0, 0), {0, 1}}};
  }
  Rational trace = m(0, 0) + m(1, 1);
  Rational root;
  if (!exact_sqrt(trace * trace - 4, root)) return {};
  RatEigen out;
  if (root.is_zero()) {
    Rational lambda = trace / 2;
    out.push_back({lambda, kernel_vector(m, lambda)});
    return out;
  }
  for (const Rational& lambda : {(trace + root) / 2, (trace - root) / 2}) {
    out.push_back({lambda, kernel_vector(m, lambda)});
  }
  return out;
}

std::optional<IntPair> common_eigenvector(const UniMat& g, const UniMat& h) {
  if (is_scalar(g)) {
    RatEigen eh = eigen_rational(h);
    if (eh.empty()) return std::nullopt;
    return eh.front().vector;
  }
  for (const EigenPair& e : eigen_rational(g)) {
    if (maps_parallel(h, e.vector)) return e.vector;
  }
  return std::nullopt;
}

Mod2Mat mod2_residue(const UniMat& m) {
  if (!m.is_integral()) throw NonIntegerEntry("mod 2 residue needs integer entries, got " + [&] {
    std::ostringstream os;
    os << m;
    return os.str();
  }());
  Mod2Mat out;
  for (Eigen::Index i = 0; i < 2; ++i) {
    for (Eigen::Index j = 0; j < 2; ++j) {
      BigInt r = m(i, j).num() % 2;
      out(i, j) = r.is_zero() ? 0 : 1;
    }
  }
  return out;
}

Rational sup_dist(const UniMat& x, const UniMat& y) {
  Rational best;
  for (Eigen::Index i = 0; i < 2; ++i) {
    for (Eigen::Index j = 0; j < 2; ++j) best = std::max(best, abs(x(i, j) - y(i, j)));
  }
  return best;
}

}  // namespace hypcover
