#pragma once

#include "hypcover/curve.hpp"
#include "hypcover/hyperbolic.hpp"
#include "hypcover/unimat.hpp"
#include "hypcover/word.hpp"

namespace hypcover {

/// Point of X = H x SL2; the frame stays exact.
struct XPoint {
  HPoint base;
  UniMat frame;
};

/**
 * Deck action of F2 on X: a word w sends (z, M) to
 * (phi(base_hom(w)) z, frame_hom(w) * M).
 */
struct DeckAction {
  Hom base_hom = dense_hom();
  Hom frame_hom = discrete_hom();
};

XPoint deck_apply(const Word& w, const XPoint& p, const DeckAction& action = {});

/// Distance on X: the SL2 factor has vanishing pseudodistance, so only the bases count.
double dist_x(const XPoint& p, const XPoint& q);

struct OrbitSearchConfig {
  long budget = 1;
  int max_word_len = 1;
  double target_eps = 0.0;

  /// Throws std::invalid_argument when budget < 1 or max_word_len < 1.
  void validate() const;
};

/**
 * Best-first search over the deck orbit of q for small dist_x(p, w.q).
 *
 * Frontier nodes are ordered by (value, length, canonical word order);
 * expanding a node evaluates its non-cancelling one-letter extensions with
 * the base matrix updated exactly. Every reported value is an upper bound
 * for the quotient distance between the images of p and q.
 */
CurveReport orbit_search(const XPoint& p, const XPoint& q, const OrbitSearchConfig& cfg,
                         const DeckAction& action = {});

struct OrbitMin {
  double value = 0.0;
  Word witness;
};

/// Brute-force minimum over all reduced words of length <= max_len; ties go to the first word.
OrbitMin exhaustive_orbit_min(const XPoint& p, const XPoint& q, int max_len,
                              const DeckAction& action = {});

}  // namespace hypcover
