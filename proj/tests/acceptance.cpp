// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "hypcover/covering.hpp"
#include "hypcover/finite_cover.hpp"
#include "hypcover/hyperbolic.hpp"
#include "hypcover/probe.hpp"
#include "support.hpp"

using namespace hypcover;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

// Parallel as integer vectors: cross product zero.
bool same_line(const IntPair& u, const IntPair& v) { return u.p * v.q == u.q * v.p; }

bool has_pair(const RatEigen& e, const Rational& value, const IntPair& v) {
  for (const EigenPair& p : e) {
    if (p.value == value && same_line(p.vector, v)) return true;
  }
  return false;
}

Outcome closed_powers() {
  Outcome o;
  for (Generator g : {Generator::A, Generator::B}) {
    const UniMat& m = generator_matrix(g);
    const UniMat inv = mat_inv(m);
    UniMat up, down;
    for (long k = 0; k <= 30; ++k) {
      o.require(closed_power(g, k) == up, "mismatch at k = " + std::to_string(k));
      o.require(closed_power(g, -k) == down, "mismatch at k = " + std::to_string(-k));
      up = up * m;
      down = down * inv;
    }
  }
  if (o.pass) o.detail = "A and B, |k| <= 30";
  return o;
}

Outcome eigen_ledger() {
  Outcome o;
  RatEigen a = eigen_rational(dense_a()), b = eigen_rational(dense_b());
  o.require(a.size() == 2 && b.size() == 2, "expected two rational eigenpairs each");
  o.require(has_pair(a, Rational(2), {1, 0}), "A: (1,0) -> 2");
  o.require(has_pair(a, Rational(1, 2), {2, -3}), "A: (2,-3) -> 1/2");
  o.require(has_pair(b, Rational(1, 3), {0, 1}), "B: (0,1) -> 1/3");
  o.require(has_pair(b, Rational(3), {8, 3}), "B: (8,3) -> 3");
  o.require(!common_eigenvector(dense_a(), dense_b()).has_value(), "A and B share an eigenvector");
  if (o.pass) o.detail = "4 eigenpairs, no common eigenvector";
  return o;
}

Outcome distance_oracle() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    HPoint z = testing::random_point(rng), w = testing::random_point(rng);
    worst = std::max(worst, std::abs(dist_h(z, w) - dist_by_integration(z, w)));
  }
  double ln2_err = std::abs(dist_h(HPoint(0, 1), HPoint(0, 2)) - std::numbers::ln2);
  o.require(worst <= 1e-9, "closed form and quadrature disagree");
  o.require(ln2_err <= 1e-12, "dist(i, 2i) != ln 2");
  std::ostringstream s;
  s << "max |diff| = " << worst << ", |dist(i,2i) - ln 2| = " << ln2_err;
  o.detail = o.pass ? s.str() : o.detail + "; " + s.str();
  return o;
}

Outcome metric_axioms() {
  Outcome o;
  std::mt19937_64 rng(7);
  double worst_triangle = 0.0;
  for (int k = 0; k < 1000; ++k) {
    HPoint x = testing::random_point(rng), y = testing::random_point(rng), z = testing::random_point(rng);
    o.require(dist_h(x, y) == dist_h(y, x), "asymmetric distance");
    worst_triangle = std::max(worst_triangle, dist_h(x, z) - dist_h(x, y) - dist_h(y, z));
  }
  o.require(worst_triangle <= 1e-12, "triangle inequality violated");
  double worst_invariance = 0.0;
  const Hom h = dense_hom();
  for (int k = 0; k < 100; ++k) {
    Word w = testing::random_word(rng, 6);
    UniMat m = hom_eval(h, w);
    HPoint z = testing::random_point(rng), u = testing::random_point(rng);
    double d = dist_h(z, u);
    double moved = dist_h(mobius_apply(m, z), mobius_apply(m, u));
    worst_invariance = std::max(worst_invariance, std::abs(moved - d));
  }
  o.require(worst_invariance <= 1e-9, "Mobius invariance violated");
  std::ostringstream s;
  s << "triangle excess " << worst_triangle << ", invariance error " << worst_invariance;
  o.detail = o.pass ? s.str() : o.detail + "; " + s.str();
  return o;
}

Outcome gamma2() {
  Outcome o;
  Gamma2Report r = gamma2_certify(8);
  o.require(r.words == word_count(8), "word count");
  o.require(r.congruence_pass(), "congruence to I mod 2");
  o.require(r.distinct_pass(), "pairwise distinct images");
  o.require(r.gap_pass(), "identity gap >= 2");

  // Recount the three clauses directly over the word list.
  const Hom h = discrete_hom();
  std::set<UniMat> seen;
  long congruent = 0, gapped = 0;
  for (const Word& w : enumerate_words(8)) {
    UniMat m = hom_eval(h, w);
    seen.insert(m);
    bool integral = m.is_integral();
    if (integral && mod2_residue(m) == Mod2Mat::Identity()) ++congruent;
    if (w.empty() || sup_dist(m, UniMat{}) >= Rational(2)) ++gapped;
  }
  const long n = word_count(8);
  o.require(congruent == n && static_cast<long>(seen.size()) == n && gapped == n, "direct recount disagrees");
  if (o.pass) o.detail = std::to_string(n) + " words, min gap " + r.min_gap.to_string();
  return o;
}

Outcome diophantine() {
  Outcome o;
  auto brute = dio_pairs(0.06, 20, DioMethod::brute);
  auto conv = dio_pairs(0.06, 20, DioMethod::convergents);
  std::set<std::pair<long, long>> got_b, got_c;
  for (const auto& p : brute) got_b.insert({p.n, p.m});
  for (const auto& p : conv) got_c.insert({p.n, p.m});
  const std::set<std::pair<long, long>> expected{{8, -5}, {-8, 5}, {19, -12}, {-19, 12}};
  o.require(got_b == expected, "brute force set");
  o.require(got_c == expected, "convergents set");
  // Along the convergent pairs, ordered by |n|, the error shrinks.
  for (int sign : {1, -1}) {
    o.require(make_dio_pair(sign * 19, sign * -12).log_error < make_dio_pair(sign * 8, sign * -5).log_error,
              "log_error not decreasing");
  }
  if (o.pass) o.detail = "{(+-8,-+5), (+-19,-+12)} from both methods";
  return o;
}

Outcome orbit_soundness() {
  Outcome o;
  const XPoint p{HPoint(0, 1), UniMat{}}, q{HPoint(0, 2), UniMat{}};
  CurveReport r = orbit_search(p, q, {161, 4, 0.0});
  OrbitMin exact = exhaustive_orbit_min(p, q, 4);
  o.require(r.best_value == exact.value, "terminal value differs from exhaustive minimum");
  o.require(r.best_word == exact.witness, "witness differs from exhaustive minimum");
  o.require(r.exhausted, "search did not exhaust the length-4 ball");
  for (std::size_t k = 1; k < r.records.size(); ++k) {
    o.require(r.records[k].best_value <= r.records[k - 1].best_value, "curve increases");
  }
  // Pin: the identity already attains the length-4 minimum.
  o.require(exact.value == 0.6931471805599453, "pinned value");
  o.require(exact.witness.empty(), "pinned witness");
  std::ostringstream s;
  s << "value " << r.best_value << ", witness '" << r.best_word.to_string() << "', " << r.expansions
    << " expansions";
  o.detail = o.pass ? s.str() : o.detail + "; " + s.str();
  return o;
}

Outcome identity_gaps() {
  Outcome o;
  GapReport disc = identity_gap(discrete_hom(), 8);
  o.require(disc.exact_min >= Rational(2), "discrete gap below 2");
  std::string trail;
  Rational prev;
  for (int len = 1; len <= 8; ++len) {
    GapReport dense = identity_gap(dense_hom(), len);
    if (len > 1) o.require(dense.exact_min <= prev, "dense gap increased at L = " + std::to_string(len));
    for (std::size_t k = 1; k < dense.curve.records.size(); ++k) {
      o.require(dense.curve.records[k].best_value <= dense.curve.records[k - 1].best_value, "curve increases");
    }
    prev = dense.exact_min;
    trail += (len > 1 ? " " : "") + prev.to_string();
  }
  o.require(prev < Rational(1), "dense gap not below 1 at L = 8");
  if (o.pass) o.detail = "discrete " + disc.exact_min.to_string() + "; dense L=1..8: " + trail;
  return o;
}

Outcome accumulation_probe() {
  Outcome o;
  auto pairs = dio_pairs(0.06, 20, DioMethod::brute);
  auto ab = probe_accumulation(pairs, ProductOrder::AB);
  auto ba = probe_accumulation(pairs, ProductOrder::BA);
  o.require(ab.size() == pairs.size() && ba.size() == pairs.size(), "row count");
  for (const auto* rows : {&ab, &ba}) {
    for (const ProbeRow& row : *rows) {
      o.require(det2(row.matrix.matrix()) == Rational(1), "product not unimodular");
      o.require(std::isfinite(row.dist_to_c), "dist_to_C not finite");
    }
  }
  const char* pins_ab[] = {"148074416821849093/1417176", "146081389743170575/786432", "15116207/648",
                           "15924749/384"};
  const char* pins_ba[] = {"5533088635588963012937/3099363912", "19499510518078501/6144", "1377497227/17496",
                           "6711935/48"};
  for (std::size_t k = 0; k < 4 && k < ab.size() && k < ba.size(); ++k) {
    o.require(ab[k].exact_dist_to_c == Rational::parse(pins_ab[k]), "AB pin " + std::to_string(k));
    o.require(ba[k].exact_dist_to_c == Rational::parse(pins_ba[k]), "BA pin " + std::to_string(k));
  }
  if (o.pass) o.detail = std::to_string(ab.size() + ba.size()) + " rows, all pins match";
  return o;
}

Outcome finite_covers() {
  Outcome o;
  int vanishing = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::string tag = " (seed " + std::to_string(seed) + ")";
    FiniteModel m = random_model(seed);
    o.require(m.space.size() <= 12 && m.action.perms.size() <= 4, "model too large" + tag);
    o.require(validate(m.space, m.action).ok(), "invalid model" + tag);
    Quotient q = quotient_metric(m.space, m.action);
    o.require(validate_metric(q.metric).ok(), "quotient is not a pseudo-metric" + tag);
    const auto k = q.metric.size();
    for (Eigen::Index a = 0; a < k; ++a) {
      for (Eigen::Index b = 0; b < k; ++b) {
        const Permutation& g = m.action.perms.at(q.witness(a, b));
        o.require(m.space(q.representatives[a], g[q.representatives[b]]) == q.metric(a, b), "witness" + tag);
        for (const Permutation& h : m.action.perms) {
          o.require(m.space(q.representatives[a], h[q.representatives[b]]) >= q.metric(a, b), "not a minimum" + tag);
        }
      }
    }
    o.require(q.metric.identically_zero() == m.space.identically_zero(), "vanishing equivalence" + tag);
    vanishing += m.space.identically_zero();
  }
  if (o.pass) o.detail = "100 models, " + std::to_string(vanishing) + " vanishing";
  return o;
}

Outcome cli_determinism() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "hypcover_acceptance";
  fs::create_directories(dir);
  auto csv = [&](const std::string& name) { return (dir / name).string(); };
  auto slurp = [](const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  };
  const std::vector<std::pair<std::vector<std::string>, std::string>> runs = {
      {{"power"}, ""},
      {{"power", "--gen", "B", "--range", "30"}, ""},
      {{"eigen"}, ""},
      {{"common-eig"}, ""},
      {{"dist"}, ""},
      {{"orbit", "--csv", csv("orbit.csv")}, csv("orbit.csv")},
      {{"orbit-exact"}, ""},
      {{"dio", "--csv", csv("dio.csv")}, csv("dio.csv")},
      {{"probe-c", "--csv", csv("probe.csv")}, csv("probe.csv")},
      {{"gap", "--csv", csv("gap.csv")}, csv("gap.csv")},
      {{"gap", "--hom", "disc", "--csv", csv("gap_disc.csv")}, csv("gap_disc.csv")},
      {{"gamma2"}, ""},
      {{"finite-cover"}, ""},
      {{"finite-cover", "--random", "42"}, ""},
  };
  for (const auto& [args, file] : runs) {
    std::string outputs[2], files[2];
    for (int rep = 0; rep < 2; ++rep) {
      std::ostringstream out, err;
      int code = cli::run(args, out, err);
      o.require(code == cli::kExitOk, args.front() + " failed: " + err.str());
      outputs[rep] = out.str();
      if (!file.empty()) files[rep] = slurp(file);
    }
    o.require(!outputs[0].empty() && outputs[0] == outputs[1], args.front() + " JSON differs between runs");
    o.require(file.empty() || (!files[0].empty() && files[0] == files[1]), args.front() + " CSV differs between runs");
  }
  if (o.pass) o.detail = std::to_string(runs.size()) + " invocations, JSON and CSV identical";
  return o;
}

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"Closed-form powers", 1, closed_powers},
      {"Eigenvector ledger", 1, eigen_ledger},
      {"Distance oracle agreement", 5, distance_oracle},
      {"Metric axioms and invariance", 5, metric_axioms},
      {"Gamma(2) certificate", 10, gamma2},
      {"Diophantine pairs", 1, diophantine},
      {"Covering-formula search soundness", 5, orbit_soundness},
      {"Identity-gap contrast", 30, identity_gaps},
      {"Accumulation probe", 5, accumulation_probe},
      {"Finite covers", 5, finite_covers},
      {"CLI determinism", 10, cli_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      o.pass = false;
      o.detail += "; exceeded " + std::to_string(c.limit_seconds) + " s";
    }
    failures += !o.pass;
    std::printf("[%s] %zu. %s (%.3f s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, c.name.c_str(), secs,
                o.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
  return failures == 0 ? 0 : 1;
}
