#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "hypcover/covering.hpp"
#include "hypcover/serialize.hpp"
#include "support.hpp"

using namespace hypcover;

namespace {

const XPoint kP{HPoint(0.0, 1.0), UniMat{}};
const XPoint kQ{HPoint(0.0, 2.0), UniMat{}};

// Floating-point brute force: generator images as Matrix2d, Mobius by complex division.
OrbitMin double_oracle(const XPoint& p, const XPoint& q, int max_len) {
  const Eigen::Matrix2d images[4] = {dense_a().to_double(), mat_inv(dense_a()).to_double(), dense_b().to_double(),
                                     mat_inv(dense_b()).to_double()};
  OrbitMin best{std::numeric_limits<double>::infinity(), Word{}};
  for (const Word& w : enumerate_words(max_len)) {
    Eigen::Matrix2d m = Eigen::Matrix2d::Identity();
    for (Letter x : w.letters()) m = m * images[static_cast<int>(x)];
    Complex z = q.base.complex();
    Complex gz = (m(0, 0) * z + m(0, 1)) / (m(1, 0) * z + m(1, 1));
    Complex x = p.base.complex();
    double value = std::acosh(1.0 + std::norm(x - gz) / (2.0 * x.imag() * gz.imag()));
    if (value < best.value) best = {value, w};
  }
  return best;
}

XPoint random_xpoint(std::mt19937_64& rng) {
  return {testing::random_point(rng), hom_eval(discrete_hom(), testing::random_word(rng, 3))};
}

}  // namespace

TEST_CASE("deck_apply") {
  XPoint same = deck_apply(Word{}, kP);
  CHECK(same.base == kP.base);
  CHECK(same.frame == kP.frame);

  XPoint moved = deck_apply(Word::parse("a"), kP);
  CHECK(std::abs(moved.base.complex() - Complex(2.0, 4.0)) <= 1e-15);
  CHECK(moved.frame == gamma2_u());
}

TEST_CASE("deck_apply respects the group law") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    Word w1 = testing::random_word(rng, 4), w2 = testing::random_word(rng, 4);
    XPoint p = random_xpoint(rng);
    XPoint lhs = deck_apply(w1, deck_apply(w2, p));
    XPoint rhs = deck_apply(word_mul(w1, w2), p);
    CHECK(lhs.frame == rhs.frame);
    CHECK(std::abs(lhs.base.complex() - rhs.base.complex()) <= 1e-9 * std::max(1.0, std::abs(rhs.base.complex())));
  }
}

TEST_CASE("deck action is free on frames") {
  XPoint origin{HPoint(0.0, 1.0), UniMat{}};
  for_each_image(discrete_hom(), 8, [&](const Word& w, const UniMat&) {
    if (w.empty()) return;
    CHECK(deck_apply(w, origin).frame != UniMat{});
  });
}

TEST_CASE("dist_x ignores frames") {
  CHECK(dist_x(kP, kP) == 0.0);
  CHECK(std::abs(dist_x(kP, XPoint{HPoint(0.0, 2.0), gamma2_u()}) - std::numbers::ln2) <= 1e-15);
  CHECK(dist_x(XPoint{HPoint(0.0, 1.0), dense_a()}, XPoint{HPoint(0.0, 1.0), gamma2_v()}) == 0.0);
}

TEST_CASE("orbit_search configuration is validated") {
  CHECK_THROWS_AS(orbit_search(kP, kQ, {0, 4, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(orbit_search(kP, kQ, {10, 0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(orbit_search(kP, kQ, {10, 4, -1.0}), std::invalid_argument);
}

TEST_CASE("orbit_search stops at once when p == q") {
  CurveReport r = orbit_search(kP, kP, {100, 5, 0.0});
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].expansions == 0);
  CHECK(r.records[0].best_value == 0.0);
  CHECK(r.best_word.empty());
  CHECK(r.expansions == 0);
}

TEST_CASE("length-one search keeps the empty word") {
  CurveReport r = orbit_search(kP, kQ, {5, 1, 0.0});
  CHECK(r.best_value == dist_h(kP.base, kQ.base));
  CHECK(r.best_word.empty());
  CHECK(r.exhausted);
  CHECK(r.evaluated == 5);
  // The four one-letter candidates, in canonical order a, A, b, B.
  const double expected[] = {2.141, 0.9624, 3.00, 1.88};
  int k = 0;
  for (const Word& w : enumerate_words(1)) {
    if (w.empty()) continue;
    CHECK(dist_x(kP, deck_apply(w, kQ)) == doctest::Approx(expected[k++]).epsilon(2e-3));
  }
}

TEST_CASE("exhaustive_orbit_min") {
  OrbitMin self = exhaustive_orbit_min(kP, kP, 3);
  CHECK(self.value == 0.0);
  CHECK(self.witness.empty());

  OrbitMin one = exhaustive_orbit_min(kP, kQ, 1);
  CHECK(one.value == dist_h(kP.base, kQ.base));
  CHECK(one.witness.empty());

  // Regression pins, cross-checked against an independent rational brute force.
  OrbitMin four = exhaustive_orbit_min(kP, kQ, 4);
  CHECK(std::abs(four.value - 0.6931471805599453) <= 1e-15);
  CHECK(four.witness.empty());

  XPoint p{HPoint(0.3, 0.7), UniMat{}}, q{HPoint(2.0, 0.5), UniMat{}};
  OrbitMin other = exhaustive_orbit_min(p, q, 4);
  CHECK(std::abs(other.value - 0.3528408431305929) <= 1e-12);
  CHECK(other.witness == Word::parse("bA"));
  CHECK(exhaustive_orbit_min(p, q, 5).value == doctest::Approx(0.3528408431305929).epsilon(1e-12));
}

TEST_CASE("exhaustive minimum agrees with a floating-point oracle") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    XPoint p = random_xpoint(rng), q = random_xpoint(rng);
    OrbitMin exact = exhaustive_orbit_min(p, q, 3);
    OrbitMin oracle = double_oracle(p, q, 3);
    CHECK(std::abs(exact.value - oracle.value) <= 1e-9);
  }
}

TEST_CASE("exhaustive minimum is non-increasing in the length bound") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    XPoint p = random_xpoint(rng), q = random_xpoint(rng);
    double prev = std::numeric_limits<double>::infinity();
    for (int len = 0; len <= 5; ++len) {
      double v = exhaustive_orbit_min(p, q, len).value;
      CHECK(v <= prev);
      prev = v;
    }
  }
}

TEST_CASE("complete searches reproduce the brute-force optimum exactly") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    XPoint p = random_xpoint(rng), q = random_xpoint(rng);
    const int len = 1 + trial % 4;
    CurveReport r = orbit_search(p, q, {static_cast<long>(word_count(len)), len, 0.0});
    OrbitMin best = exhaustive_orbit_min(p, q, len);
    CHECK(r.exhausted);
    CHECK(r.best_value == best.value);
    CHECK(r.best_word == best.witness);
    CHECK(std::abs(dist_x(p, deck_apply(r.best_word, q)) - r.best_value) <= 1e-12);
  }
}

TEST_CASE("search curves are non-increasing and witnesses re-evaluate") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    XPoint p = random_xpoint(rng), q = random_xpoint(rng);
    CurveReport r = orbit_search(p, q, {2000, 20, 0.0});
    REQUIRE_FALSE(r.records.empty());
    for (std::size_t k = 1; k < r.records.size(); ++k) {
      CHECK(r.records[k].best_value <= r.records[k - 1].best_value);
      CHECK(r.records[k].expansions >= r.records[k - 1].expansions);
    }
    for (const CurveRecord& rec : r.records) {
      CHECK(std::abs(dist_x(p, deck_apply(rec.best_word, q)) - rec.best_value) <= 1e-9);
    }
    CHECK(r.records.back().best_value == r.best_value);
    CHECK(r.expansions <= 2000);
  }
}

TEST_CASE("search is deterministic and honours the target") {
  CurveReport a = orbit_search(kP, kQ, {3000, 30, 0.0});
  CurveReport b = orbit_search(kP, kQ, {3000, 30, 0.0});
  CHECK(curve_csv(a) == curve_csv(b));
  CHECK(a.best_value < std::numbers::ln2);

  CurveReport stop = orbit_search(kP, kQ, {100000, 40, 0.5});
  CHECK(stop.best_value <= 0.5);
  CHECK(stop.expansions < 100000);
}

TEST_CASE("curve CSV layout") {
  CurveReport r = orbit_search(kP, kQ, {5, 1, 0.0});
  CHECK(curve_csv(r) == "expansions,best_value,best_word\n0,0.6931471805599453,\n");
}
