#pragma once

#include <string>
#include <vector>

#include "hypcover/word.hpp"

namespace hypcover {

struct CurveRecord {
  long expansions = 0;
  double best_value = 0.0;
  Word best_word;
};

/**
 * Best-so-far record of a search or probe. `records` holds one entry per
 * change of the incumbent, so best_value is non-increasing along it.
 */
struct CurveReport {
  std::vector<CurveRecord> records;
  double best_value = 0.0;
  Word best_word;
  long expansions = 0;
  long evaluated = 0;
  /// Every candidate within the length bound was evaluated.
  bool exhausted = false;
};

/// CSV with header "expansions,best_value,best_word".
std::string curve_csv(const CurveReport& report);

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

}  // namespace hypcover
