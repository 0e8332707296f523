#include "hypcover/word.hpp"

#include "hypcover/errors.hpp"

namespace hypcover {

char letter_char(Letter x) {
  static constexpr char chars[] = {'a', 'A', 'b', 'B'};
  return chars[static_cast<std::uint8_t>(x)];
}

Word::Word(std::initializer_list<Letter> letters) {
  for (Letter x : letters) push_reduced(x);
}

Word Word::from_letters(const std::vector<Letter>& letters) {
  Word w;
  for (Letter x : letters) w.push_reduced(x);
  return w;
}

void Word::push_reduced(Letter x) {
  if (!letters_.empty() && cancels(letters_.back(), x)) {
    letters_.pop_back();
  } else {
    letters_.push_back(x);
  }
}

Word Word::parse(std::string_view text) {
  Word w;
  for (char c : text) {
    Letter x;
    switch (c) {
      case 'a': x = Letter::a; break;
      case 'A': x = Letter::a_inv; break;
      case 'b': x = Letter::b; break;
      case 'B': x = Letter::b_inv; break;
      default: throw ParseError("invalid letter '" + std::string(1, c) + "' in word");
    }
    if (!w.letters_.empty() && cancels(w.letters_.back(), x)) {
      throw ParseError("word '" + std::string(text) + "' is not reduced");
    }
    w.letters_.push_back(x);
  }
  return w;
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter x : letters_) s.push_back(letter_char(x));
  return s;
}

Word Word::extended(Letter x) const {
  Word w = *this;
  w.letters_.push_back(x);
  return w;
}

std::strong_ordering operator<=>(const Word& x, const Word& y) {
  if (auto cmp = x.size() <=> y.size(); cmp != 0) return cmp;
  return x.letters_ <=> y.letters_;
}

Word word_mul(const Word& x, const Word& y) {
  Word out = x;
  for (Letter l : y.letters()) out.push_reduced(l);
  return out;
}

Word word_inv(const Word& x) {
  std::vector<Letter> rev(x.letters().rbegin(), x.letters().rend());
  for (Letter& l : rev) l = inverse(l);
  return Word::from_letters(rev);
}

std::size_t word_count(int max_len) {
  std::size_t total = 1;
  std::size_t level = 4;
  for (int k = 1; k <= max_len; ++k, level *= 3) total += level;
  return total;
}

namespace {

constexpr Letter kLetters[] = {Letter::a, Letter::a_inv, Letter::b, Letter::b_inv};

}  // namespace

std::vector<Word> enumerate_words(int max_len) {
  std::vector<Word> out{Word{}};
  out.reserve(word_count(max_len));
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (Letter x : kLetters) {
        if (!out[i].empty() && cancels(out[i].back(), x)) continue;
        out.push_back(out[i].extended(x));
      }
    }
    level_begin = level_end;
  }
  return out;
}

Hom::Hom(UniMat image_a, UniMat image_b)
    : images_{image_a, mat_inv(image_a), image_b, mat_inv(image_b)} {}

Hom dense_hom() { return Hom{dense_a(), dense_b()}; }
Hom discrete_hom() { return Hom{gamma2_u(), gamma2_v()}; }

UniMat hom_eval(const Hom& h, const Word& w) {
  UniMat m;
  for (Letter x : w.letters()) m = m * h.image(x);
  return m;
}

void for_each_image(const Hom& h, int max_len,
                    const std::function<void(const Word&, const UniMat&)>& visit) {
  std::vector<std::pair<Word, UniMat>> level{{Word{}, UniMat{}}};
  visit(level.front().first, level.front().second);
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::pair<Word, UniMat>> next;
    next.reserve(level.size() * 4);
    for (const auto& [w, m] : level) {
      for (Letter x : kLetters) {
        if (!w.empty() && cancels(w.back(), x)) continue;
        next.emplace_back(w.extended(x), m * h.image(x));
        visit(next.back().first, next.back().second);
      }
    }
    level = std::move(next);
  }
}

}  // namespace hypcover
