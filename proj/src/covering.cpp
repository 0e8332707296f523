#include "hypcover/covering.hpp"

#include <queue>
#include <stdexcept>

namespace hypcover {

XPoint deck_apply(const Word& w, const XPoint& p, const DeckAction& action) {
  return {mobius_apply(hom_eval(action.base_hom, w), p.base), hom_eval(action.frame_hom, w) * p.frame};
}

double dist_x(const XPoint& p, const XPoint& q) { return dist_h(p.base, q.base); }

void OrbitSearchConfig::validate() const {
  if (budget < 1) throw std::invalid_argument("orbit search budget must be at least 1");
  if (max_word_len < 1) throw std::invalid_argument("orbit search max_word_len must be at least 1");
  if (!(target_eps >= 0.0)) throw std::invalid_argument("orbit search target_eps must be nonnegative");
}

namespace {

// Shared by the search and the brute-force oracle so both see identical doubles.
double orbit_value(const XPoint& p, const XPoint& q, const UniMat& base_matrix) {
  return dist_h(p.base, mobius_apply(base_matrix, q.base));
}

struct Node {
  double value;
  Word word;
  UniMat matrix;
};

struct NodeAfter {
  bool operator()(const Node& x, const Node& y) const {
    if (x.value != y.value) return x.value > y.value;
    return x.word > y.word;
  }
};

constexpr Letter kLetters[] = {Letter::a, Letter::a_inv, Letter::b, Letter::b_inv};

}  // namespace

CurveReport orbit_search(const XPoint& p, const XPoint& q, const OrbitSearchConfig& cfg,
                         const DeckAction& action) {
  cfg.validate();
  CurveReport report;
  std::priority_queue<Node, std::vector<Node>, NodeAfter> frontier;

  auto offer = [&](const Word& w, double value) {
    ++report.evaluated;
    bool improves = report.records.empty() || value < report.best_value ||
                    (value == report.best_value && w < report.best_word);
    if (!improves) return;
    report.best_value = value;
    report.best_word = w;
    report.records.push_back({report.expansions, value, w});
  };

  {
    UniMat root;
    double value = orbit_value(p, q, root);
    offer(Word{}, value);
    frontier.push({value, Word{}, std::move(root)});
  }

  while (report.best_value > cfg.target_eps && report.expansions < cfg.budget && !frontier.empty()) {
    Node node = frontier.top();
    frontier.pop();
    ++report.expansions;
    for (Letter x : kLetters) {
      if (!node.word.empty() && cancels(node.word.back(), x)) continue;
      Word child = node.word.extended(x);
      UniMat matrix = node.matrix * action.base_hom.image(x);
      double value = orbit_value(p, q, matrix);
      offer(child, value);
      if (static_cast<int>(child.size()) < cfg.max_word_len) {
        frontier.push({value, std::move(child), std::move(matrix)});
      }
    }
  }
  report.exhausted = static_cast<std::size_t>(report.evaluated) == word_count(cfg.max_word_len);
  return report;
}

OrbitMin exhaustive_orbit_min(const XPoint& p, const XPoint& q, int max_len, const DeckAction& action) {
  OrbitMin best{orbit_value(p, q, UniMat{}), Word{}};
  for_each_image(action.base_hom, max_len, [&](const Word& w, const UniMat& m) {
    double value = orbit_value(p, q, m);
    if (value < best.value) best = {value, w};
  });
  return best;
}

}  // namespace hypcover
