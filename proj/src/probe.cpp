#include "hypcover/probe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace hypcover {

namespace {

const double kLn2 = std::numbers::ln2;
const double kLn3 = std::log(3.0);

long m_bound(long bound) { return static_cast<long>(std::ceil(static_cast<double>(bound) * kLn2 / kLn3)) + 1; }

Rational power_ratio(long n, long m) { return pow(Rational(2), n) * pow(Rational(3), m); }

}  // namespace

DioPair make_dio_pair(long n, long m) {
  DioPair p;
  p.n = n;
  p.m = m;
  p.ratio = std::pow(2.0, static_cast<double>(n)) * std::pow(3.0, static_cast<double>(m));
  p.log_error = std::abs(static_cast<double>(n) * kLn2 + static_cast<double>(m) * kLn3);
  return p;
}

std::vector<std::pair<long, long>> convergents(double x, int count) {
  std::vector<std::pair<long, long>> out;
  long p_prev = 1, q_prev = 0, p = static_cast<long>(std::floor(x)), q = 1;
  double rest = x - std::floor(x);
  for (int k = 0; k < count; ++k) {
    out.emplace_back(p, q);
    if (rest == 0.0) break;
    double inv = 1.0 / rest;
    long a = static_cast<long>(std::floor(inv));
    rest = inv - std::floor(inv);
    long p_next = a * p + p_prev;
    long q_next = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
  }
  return out;
}

std::vector<DioPair> dio_pairs(double eps, long bound, DioMethod method) {
  if (!(eps > 0.0)) throw std::invalid_argument("dio_pairs needs eps > 0");
  if (bound < 1) throw std::invalid_argument("dio_pairs needs bound >= 1");
  const long mb = m_bound(bound);
  const Rational tol = Rational::from_double(eps);

  std::set<std::pair<long, long>> found;
  auto consider = [&](long n, long m) {
    if ((n == 0 && m == 0) || std::abs(n) > bound || std::abs(m) > mb) return;
    if (abs(power_ratio(n, m) - 1) < tol) found.emplace(n, m);
  };

  if (method == DioMethod::brute) {
    for (long n = -bound; n <= bound; ++n) {
      for (long m = -mb; m <= mb; ++m) consider(n, m);
    }
  } else {
    // p/q ~ ln3/ln2 gives 2^p 3^-q ~ 1. Seeds 0/1 and 1/0 start the recurrence.
    std::vector<std::pair<long, long>> fractions{{0, 1}, {1, 0}};
    long p_prev = 1, q_prev = 0;
    for (auto [p, q] : convergents(kLn3 / kLn2, 40)) {
      if (p > bound && q > mb) break;
      fractions.emplace_back(p, q);
      // Intermediate fractions between this convergent and the next one.
      for (long j = 1; j * p + p_prev <= bound; ++j) fractions.emplace_back(p_prev + j * p, q_prev + j * q);
      p_prev = p;
      q_prev = q;
    }
    for (auto [p, q] : fractions) {
      for (long t = 1; t * std::max(p, 1L) <= bound && t * q <= mb + 1; ++t) {
        consider(t * p, -t * q);
        consider(-t * p, t * q);
      }
    }
  }

  std::vector<DioPair> out;
  out.reserve(found.size());
  for (auto [n, m] : found) out.push_back(make_dio_pair(n, m));
  std::sort(out.begin(), out.end(), [](const DioPair& x, const DioPair& y) {
    if (x.log_error != y.log_error) return x.log_error < y.log_error;
    return std::pair(x.n, x.m) < std::pair(y.n, y.m);
  });
  return out;
}

std::vector<ProbeRow> probe_accumulation(const std::vector<DioPair>& pairs, ProductOrder order) {
  if (pairs.empty()) throw std::invalid_argument("probe_accumulation needs at least one pair");
  std::vector<ProbeRow> rows;
  rows.reserve(pairs.size());
  for (const DioPair& pair : pairs) {
    ProbeRow row;
    row.pair = pair;
    row.order = order;
    row.matrix = order == ProductOrder::AB ? closed_power(Generator::A, pair.n) * closed_power(Generator::B, pair.m)
                                           : closed_power(Generator::B, pair.n) * closed_power(Generator::A, pair.m);
    row.exact_dist_to_c = sup_dist(row.matrix, limit_c());
    row.dist_to_c = row.exact_dist_to_c.to_double();
    rows.push_back(std::move(row));
  }
  return rows;
}

GapReport identity_gap(const Hom& h, int max_len) {
  if (max_len < 1) throw std::invalid_argument("identity_gap needs max_len >= 1");
  GapReport out;
  const UniMat id;
  bool first = true;
  for_each_image(h, max_len, [&](const Word& w, const UniMat& m) {
    if (w.empty()) return;
    CurveReport& curve = out.curve;
    ++curve.evaluated;
    ++curve.expansions;
    Rational gap = sup_dist(m, id);
    double value = gap.to_double();
    if (first || gap < out.exact_min) {
      out.exact_min = gap;
      out.exact_witness = w;
    }
    if (first || value < curve.best_value) {
      curve.best_value = value;
      curve.best_word = w;
      curve.records.push_back({curve.expansions, value, w});
    }
    first = false;
  });
  out.curve.exhausted = true;
  return out;
}

Gamma2Report gamma2_certify(int max_len) {
  if (max_len < 1) throw std::invalid_argument("gamma2_certify needs max_len >= 1");
  Gamma2Report r;
  r.max_len = max_len;
  const UniMat id;
  const Mod2Mat identity_mod2 = Mod2Mat::Identity();
  std::set<UniMat> images;
  bool first_gap = true;
  for_each_image(discrete_hom(), max_len, [&](const Word& w, const UniMat& m) {
    ++r.words;
    if (m.is_integral()) {
      ++r.integral;
      if (mod2_residue(m) == identity_mod2) ++r.congruent;
    }
    images.insert(m);
    if (w.empty()) return;
    ++r.nontrivial;
    Rational gap = sup_dist(m, id);
    if (gap >= Rational(2)) ++r.gap_ok;
    if (first_gap || gap < r.min_gap) r.min_gap = gap;
    first_gap = false;
  });
  r.distinct_images = static_cast<long>(images.size());
  return r;
}

std::string_view to_string(ProductOrder order) { return order == ProductOrder::AB ? "AB" : "BA"; }
std::string_view to_string(DioMethod method) { return method == DioMethod::brute ? "brute" : "convergents"; }

}  // namespace hypcover
