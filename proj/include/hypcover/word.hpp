#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hypcover/unimat.hpp"

namespace hypcover {

/// Letters in canonical order a < a^-1 < b < b^-1; inversion flips the low bit.
enum class Letter : std::uint8_t { a = 0, a_inv = 1, b = 2, b_inv = 3 };

constexpr Letter inverse(Letter x) { return static_cast<Letter>(static_cast<std::uint8_t>(x) ^ 1U); }
constexpr bool cancels(Letter x, Letter y) { return inverse(x) == y; }

char letter_char(Letter x);

/**
 * Freely reduced word in F2. The empty word is the identity.
 *
 * Ordering is the canonical one used for every tie-break: shorter words
 * first, then lexicographic in letter order.
 */
class Word {
 public:
  Word() = default;
  /// Freely reduces the given letters.
  Word(std::initializer_list<Letter> letters);
  static Word from_letters(const std::vector<Letter>& letters);

  /// Compact form over {a, A, b, B}; capitals are inverses. Input is reduced.
  static Word parse(std::string_view text);
  std::string to_string() const;

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter back() const { return letters_.back(); }

  /// Appends x; x must not cancel the last letter.
  Word extended(Letter x) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& x, const Word& y);
  friend std::ostream& operator<<(std::ostream& os, const Word& w) { return os << '"' << w.to_string() << '"'; }

 private:
  friend Word word_mul(const Word& x, const Word& y);
  void push_reduced(Letter x);

  std::vector<Letter> letters_;
};

Word word_mul(const Word& x, const Word& y);
Word word_inv(const Word& x);

/// Number of reduced words of length <= max_len: 1 + 2 (3^L - 1).
std::size_t word_count(int max_len);

/// All reduced words of length <= max_len in canonical order.
std::vector<Word> enumerate_words(int max_len);

/// Homomorphism F2 -> SL2(Q) given by the images of a and b.
class Hom {
 public:
  Hom(UniMat image_a, UniMat image_b);

  const UniMat& image_a() const { return images_[0]; }
  const UniMat& image_b() const { return images_[2]; }
  /// Image of a single letter, inverses included.
  const UniMat& image(Letter x) const { return images_[static_cast<std::uint8_t>(x)]; }

 private:
  std::array<UniMat, 4> images_;
};

/// a -> A, b -> B: the pair whose image is dense in SL2(R).
Hom dense_hom();
/// a -> U, b -> V: the free discrete Gamma(2) pair.
Hom discrete_hom();

/// Left-to-right product of generator images; eval(empty) = I.
UniMat hom_eval(const Hom& h, const Word& w);

/**
 * Visits every reduced word of length <= max_len in canonical order
 * together with its exact image, each child computed as parent * generator.
 */
void for_each_image(const Hom& h, int max_len,
                    const std::function<void(const Word&, const UniMat&)>& visit);

}  // namespace hypcover
