#pragma once

#include <random>

#include "hypcover/hyperbolic.hpp"
#include "hypcover/word.hpp"

namespace hypcover::testing {

inline Word random_word(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(0, 3);
  const int len = len_dist(rng);
  std::vector<Letter> letters;
  while (static_cast<int>(letters.size()) < len) {
    auto x = static_cast<Letter>(letter_dist(rng));
    if (!letters.empty() && cancels(letters.back(), x)) continue;
    letters.push_back(x);
  }
  return Word::from_letters(letters);
}

/// Re in [-10, 10], Im in [0.1, 10].
inline HPoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> re(-10.0, 10.0);
  std::uniform_real_distribution<double> im(0.1, 10.0);
  double x = re(rng);
  return HPoint(x, im(rng));
}

}  // namespace hypcover::testing
