#include "hypcover/finite_cover.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "hypcover/errors.hpp"

namespace hypcover {

FinitePseudoMetric::FinitePseudoMetric(Eigen::MatrixXd d) : d_(std::move(d)) {
  if (d_.rows() != d_.cols() || d_.rows() == 0) throw InvalidModel("distance matrix must be square and nonempty");
}

namespace {

Permutation compose(const Permutation& g, const Permutation& h) {
  Permutation out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) out[i] = g[h[i]];
  return out;
}

Permutation invert(const Permutation& g) {
  Permutation out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[g[i]] = static_cast<int>(i);
  return out;
}

bool is_identity(const Permutation& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] != static_cast<int>(i)) return false;
  }
  return true;
}

void fail(ValidationReport& r, bool ValidationReport::*clause, std::string what) {
  if (r.*clause) r.failures.push_back(std::move(what));
  r.*clause = false;
}

}  // namespace

ValidationReport validate_metric(const FinitePseudoMetric& space) {
  ValidationReport r;
  const auto& d = space.d();
  const Eigen::Index n = space.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (d(i, i) != 0.0) fail(r, &ValidationReport::pseudo_metric, "nonzero diagonal");
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!(d(i, j) >= 0.0) || !std::isfinite(d(i, j))) fail(r, &ValidationReport::pseudo_metric, "negative or non-finite distance");
      if (d(i, j) != d(j, i)) fail(r, &ValidationReport::pseudo_metric, "asymmetric distance");
      for (Eigen::Index k = 0; k < n; ++k) {
        if (d(i, k) > d(i, j) + d(j, k) + kTriangleSlack) fail(r, &ValidationReport::triangle, "triangle inequality violated");
      }
    }
  }
  return r;
}

ValidationReport validate(const FinitePseudoMetric& space, const FreeIsometricAction& action) {
  ValidationReport r = validate_metric(space);
  const auto n = static_cast<std::size_t>(space.size());
  if (action.perms.empty()) fail(r, &ValidationReport::shapes, "group has no elements");
  for (const Permutation& g : action.perms) {
    std::vector<int> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expected(n);
    std::iota(expected.begin(), expected.end(), 0);
    if (sorted != expected) fail(r, &ValidationReport::shapes, "element is not a permutation of the point set");
  }
  if (!r.shapes) return r;

  std::set<Permutation> elements(action.perms.begin(), action.perms.end());
  Permutation id(n);
  std::iota(id.begin(), id.end(), 0);
  if (!elements.contains(id)) fail(r, &ValidationReport::group, "identity missing");
  for (const Permutation& g : action.perms) {
    if (!elements.contains(invert(g))) fail(r, &ValidationReport::group, "not closed under inverse");
    for (const Permutation& h : action.perms) {
      if (!elements.contains(compose(g, h))) fail(r, &ValidationReport::group, "not closed under composition");
    }
  }

  const auto& d = space.d();
  for (const Permutation& g : action.perms) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d(g[i], g[j]) != d(i, j)) fail(r, &ValidationReport::isometric, "element is not an isometry");
      }
    }
    if (is_identity(g)) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] == static_cast<int>(i)) fail(r, &ValidationReport::free, "non-identity element has a fixed point");
    }
  }
  return r;
}

Quotient quotient_metric(const FinitePseudoMetric& space, const FreeIsometricAction& action) {
  ValidationReport check = validate(space, action);
  if (!check.ok()) throw InvalidModel("invalid finite model: " + check.failures.front());

  const auto n = static_cast<std::size_t>(space.size());
  std::vector<int> orbit_of(n, -1);
  std::vector<int> reps;
  for (std::size_t i = 0; i < n; ++i) {
    if (orbit_of[i] >= 0) continue;
    const int orbit = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(i));
    for (const Permutation& g : action.perms) orbit_of[g[i]] = orbit;
  }

  const auto k = static_cast<Eigen::Index>(reps.size());
  Eigen::MatrixXd q(k, k);
  Eigen::MatrixXi witness(k, k);
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = 0; b < k; ++b) {
      double best = 0.0;
      int arg = -1;
      for (std::size_t g = 0; g < action.perms.size(); ++g) {
        double v = space(reps[a], action.perms[g][reps[b]]);
        if (arg < 0 || v < best) {
          best = v;
          arg = static_cast<int>(g);
        }
      }
      q(a, b) = best;
      witness(a, b) = arg;
    }
  }

  Quotient out{FinitePseudoMetric(std::move(q)), std::move(reps), std::move(orbit_of), std::move(witness)};
  ValidationReport recheck = validate_metric(out.metric);
  if (!recheck.ok()) throw InvalidModel("quotient failed the pseudo-metric check: " + recheck.failures.front());
  return out;
}

std::vector<std::vector<int>> zero_classes(const FinitePseudoMetric& space) {
  const auto n = static_cast<int>(space.size());
  std::vector<int> class_of(n, -1);
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < n; ++i) {
    if (class_of[i] >= 0) continue;
    // Closure under d == 0; a valid pseudo-metric makes this transitive already.
    std::vector<int> members{i};
    class_of[i] = static_cast<int>(classes.size());
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (int j = 0; j < n; ++j) {
        if (class_of[j] < 0 && space(members[head], j) == 0.0) {
          class_of[j] = class_of[i];
          members.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  return classes;
}

bool zero_classes_surject(const FinitePseudoMetric& space, const FreeIsometricAction& action) {
  const auto n = static_cast<std::size_t>(space.size());
  std::vector<int> orbit_of(n, -1);
  int orbits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (orbit_of[i] >= 0) continue;
    for (const Permutation& g : action.perms) orbit_of[g[i]] = orbits;
    ++orbits;
  }
  for (const auto& cls : zero_classes(space)) {
    std::set<int> hit;
    for (int x : cls) hit.insert(orbit_of[x]);
    if (static_cast<int>(hit.size()) != orbits) return false;
  }
  return true;
}

FiniteModel demo_model() {
  Eigen::MatrixXd d(4, 4);
  d << 0, 1, 2, 1,
       1, 0, 1, 2,
       2, 1, 0, 1,
       1, 2, 1, 0;
  return {FinitePseudoMetric(d), {{{0, 1, 2, 3}, {2, 3, 0, 1}}}};
}

namespace {

// Elements of Z_k (k <= 4) or Z_2 x Z_2 as permutations of themselves under left multiplication.
std::vector<std::vector<int>> regular_representation(int order, bool klein) {
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int g = 0; g < order; ++g) {
    for (int h = 0; h < order; ++h) table[g][h] = klein ? (g ^ h) : (g + h) % order;
  }
  return table;
}

FiniteModel sample_model(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> order_dist(1, 4);
  const int order = order_dist(rng);
  const bool klein = order == 4 && std::bernoulli_distribution(0.5)(rng);
  std::uniform_int_distribution<int> orbit_dist(1, 12 / order);
  const int orbits = orbit_dist(rng);
  const int n = order * orbits;

  std::vector<int> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);

  const auto table = regular_representation(order, klein);
  std::vector<Permutation> perms(order, Permutation(n));
  for (int g = 0; g < order; ++g) {
    for (int o = 0; o < orbits; ++o) {
      for (int h = 0; h < order; ++h) perms[g][label[o * order + h]] = label[o * order + table[g][h]];
    }
  }

  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  if (!std::bernoulli_distribution(0.25)(rng)) {
    std::bernoulli_distribution zero_edge(0.15);
    std::uniform_real_distribution<double> weight(0.1, 5.0);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) w(i, j) = w(j, i) = zero_edge(rng) ? 0.0 : weight(rng);
    }
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w(i, j) = std::min(w(i, j), w(i, k) + w(k, j));
      }
    }
  }

  // Group average; the sorted multiset of terms is shared by a whole pair orbit,
  // so every element preserves the result exactly.
  Eigen::MatrixXd d(n, n);
  std::vector<double> terms(order);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int g = 0; g < order; ++g) terms[g] = w(perms[g][i], perms[g][j]);
      std::sort(terms.begin(), terms.end());
      d(i, j) = std::accumulate(terms.begin(), terms.end(), 0.0) / order;
    }
  }
  return {FinitePseudoMetric(std::move(d)), {std::move(perms)}};
}

}  // namespace

FiniteModel random_model(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    FiniteModel model = sample_model(rng);
    Quotient q = quotient_metric(model.space, model.action);
    // A vanishing quotient over a non-vanishing total space means X falls apart
    // into several sheets, the finite picture of a disconnected cover.
    if (q.metric.identically_zero() && !model.space.identically_zero()) continue;
    return model;
  }
}

}  // namespace hypcover
