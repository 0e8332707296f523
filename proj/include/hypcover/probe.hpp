#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "hypcover/curve.hpp"
#include "hypcover/unimat.hpp"
#include "hypcover/word.hpp"

namespace hypcover {

/// A pair (n, m) != (0, 0) with 2^n 3^m close to 1.
struct DioPair {
  long n = 0;
  long m = 0;
  double ratio = 1.0;      ///< 2^n 3^m
  double log_error = 0.0;  ///< |n ln 2 + m ln 3|

  friend bool operator==(const DioPair& x, const DioPair& y) { return x.n == y.n && x.m == y.m; }
};

DioPair make_dio_pair(long n, long m);

enum class DioMethod { brute, convergents };

/// Convergents p/q of the simple continued fraction of x, in order.
std::vector<std::pair<long, long>> convergents(double x, int count);

/**
 * All (n, m) with |n| <= bound, |m| <= ceil(bound ln2 / ln3) + 1 and
 * |2^n 3^m - 1| < eps (exact comparison), sorted by (log_error, n, m).
 *
 * `brute` scans the box. `convergents` only tries (+-t p, -+t q) for
 * convergents and intermediate fractions p/q of ln3/ln2 and their
 * multiples t, then applies the same filter.
 */
std::vector<DioPair> dio_pairs(double eps, long bound, DioMethod method);

enum class ProductOrder { AB, BA };

struct ProbeRow {
  DioPair pair;
  ProductOrder order = ProductOrder::AB;
  UniMat matrix;
  Rational exact_dist_to_c;
  double dist_to_c = 0.0;
};

/**
 * For each pair: A^n B^m (order AB) or B^n A^m (order BA) from the closed
 * forms, and its exact sup distance to C. Rows follow the input order.
 */
std::vector<ProbeRow> probe_accumulation(const std::vector<DioPair>& pairs, ProductOrder order);

struct GapReport {
  CurveReport curve;     ///< running float minimum of sup_dist(h(w), I)
  Rational exact_min;    ///< exact minimum over the same words
  Word exact_witness;
};

/// Scans nonempty reduced words of length <= max_len in canonical order.
GapReport identity_gap(const Hom& h, int max_len);

struct Gamma2Report {
  int max_len = 0;
  long words = 0;
  long integral = 0;
  long congruent = 0;  ///< images congruent to I mod 2
  long distinct_images = 0;
  long nontrivial = 0;
  long gap_ok = 0;     ///< nonempty words with sup_dist(image, I) >= 2
  Rational min_gap;

  bool congruence_pass() const { return integral == words && congruent == words; }
  bool distinct_pass() const { return distinct_images == words; }
  bool gap_pass() const { return gap_ok == nontrivial; }
  bool pass() const { return congruence_pass() && distinct_pass() && gap_pass(); }
};

/// Checks Gamma(2) congruence, injectivity and the identity gap on all words up to max_len.
Gamma2Report gamma2_certify(int max_len);

std::string_view to_string(ProductOrder order);
std::string_view to_string(DioMethod method);

}  // namespace hypcover
