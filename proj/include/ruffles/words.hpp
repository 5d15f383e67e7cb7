#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ruffles {

// A length-n list of digits in a fixed radix a >= 1. Words multiply
// entrywise; the product of a radix-a digit x and a radix-b digit y is a
// two-digit number in the hybrid radix (a,b), giving radix ab overall.
struct RadixWord {
  int radix = 1;
  std::vector<int> digits;

  int size() const { return static_cast<int>(digits.size()); }
  auto operator<=>(const RadixWord&) const = default;
};

inline RadixWord make_word(int radix, std::vector<int> digits) {
  if (radix < 1) throw std::invalid_argument("RadixWord: radix must be >= 1");
  if (digits.empty()) throw std::invalid_argument("RadixWord: empty digit list");
  for (int d : digits)
    if (d < 0 || d >= radix)
      throw std::invalid_argument("RadixWord: digit " + std::to_string(d) + " outside [0," +
                                  std::to_string(radix) + ")");
  return RadixWord{radix, std::move(digits)};
}

// The radix-1 all-zero word: two-sided identity of both products.
inline RadixWord unit_word(int n) {
  if (n < 1) throw std::invalid_argument("unit_word: n must be >= 1");
  return RadixWord{1, std::vector<int>(static_cast<std::size_t>(n), 0)};
}

namespace detail {
inline void check_word_sizes(const RadixWord& m, const RadixWord& w, const char* op) {
  if (m.size() != w.size())
    throw std::invalid_argument(std::string(op) + ": size mismatch (" + std::to_string(m.size()) +
                                " vs " + std::to_string(w.size()) + ")");
}
}  // namespace detail

// Positional product: digit -> b*x + y, radix -> a*b. Per digit this is the
// natural-order composite of the linear maps X -> aX + x and X -> bX + y.
inline RadixWord radix_mul(const RadixWord& m, const RadixWord& w) {
  detail::check_word_sizes(m, w, "radix_mul");
  RadixWord out;
  out.radix = m.radix * w.radix;
  out.digits.resize(m.digits.size());
  const int b = w.radix;
  for (std::size_t i = 0; i < m.digits.size(); ++i)
    out.digits[i] = b * m.digits[i] + w.digits[i];
  return out;
}

// Gray product: the low-order digit runs alternately up and down, so
// digit -> b*x + (y if x even else b-1-y).
inline RadixWord gray_mul(const RadixWord& m, const RadixWord& w) {
  detail::check_word_sizes(m, w, "gray_mul");
  RadixWord out;
  out.radix = m.radix * w.radix;
  out.digits.resize(m.digits.size());
  const int b = w.radix;
  for (std::size_t i = 0; i < m.digits.size(); ++i) {
    const int x = m.digits[i];
    const int y = w.digits[i];
    out.digits[i] = b * x + (x % 2 == 0 ? y : b - 1 - y);
  }
  return out;
}

enum class Direction : int { up = 0, down = 1 };

inline Direction opposite(Direction d) { return d == Direction::up ? Direction::down : Direction::up; }

struct DirectedWord {
  Direction dir = Direction::up;
  RadixWord word;

  int size() const { return word.size(); }
  auto operator<=>(const DirectedWord&) const = default;
};

// Product on {up,down} x Gray_n. The second word's digit is Gray-reflected
// iff the card is face-down after the first directed shuffle, i.e. iff
// (first digit + first direction) is odd. The output direction is
//   d_out = d2 XOR (d1 AND (b odd)),   b = second radix;
// this is the unique choice consistent with the directed-ruffle reaction law,
// which the test suite checks exhaustively.
inline DirectedWord directed_mul(const DirectedWord& m, const DirectedWord& w) {
  detail::check_word_sizes(m.word, w.word, "directed_mul");
  const int b = w.word.radix;
  const int d1 = static_cast<int>(m.dir);
  const int d2 = static_cast<int>(w.dir);
  DirectedWord out;
  out.dir = static_cast<Direction>((d2 + (b % 2 == 1 ? d1 : 0)) % 2);
  out.word.radix = m.word.radix * b;
  out.word.digits.resize(m.word.digits.size());
  for (std::size_t i = 0; i < m.word.digits.size(); ++i) {
    const int x = m.word.digits[i];
    const int y = w.word.digits[i];
    out.word.digits[i] = b * x + ((x + d1) % 2 == 0 ? y : b - 1 - y);
  }
  return out;
}

// Counts through all tuples in the hybrid Gray order for the given bases
// (most significant first): consecutive tuples differ in exactly one digit,
// by exactly one.
inline std::vector<std::vector<int>> gray_count(const std::vector<int>& bases) {
  if (bases.empty()) throw std::invalid_argument("gray_count: empty base list");
  std::int64_t total = 1;
  for (int b : bases) {
    if (b < 1) throw std::invalid_argument("gray_count: base must be >= 1");
    total *= b;
  }
  std::vector<std::int64_t> suffix(bases.size(), 1);
  for (std::size_t k = bases.size() - 1; k-- > 0;)
    suffix[k] = suffix[k + 1] * bases[k + 1];
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(total));
  for (std::int64_t v = 0; v < total; ++v) {
    std::vector<int> tup(bases.size());
    std::int64_t r = v;
    for (std::size_t k = 0; k < bases.size(); ++k) {
      const std::int64_t x = r / suffix[k];
      r %= suffix[k];
      if (x % 2 == 1) r = suffix[k] - 1 - r;  // reflect the remaining digits
      tup[k] = static_cast<int>(x);
    }
    out.push_back(std::move(tup));
  }
  return out;
}

// All radix^n words of length n in lexicographic digit order.
inline std::vector<RadixWord> enumerate_words(int n, int radix) {
  if (n < 1) throw std::invalid_argument("enumerate_words: n must be >= 1");
  if (radix < 1) throw std::invalid_argument("enumerate_words: radix must be >= 1");
  std::vector<RadixWord> out;
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  for (;;) {
    out.push_back(RadixWord{radix, digits});
    int k = n - 1;
    while (k >= 0 && digits[static_cast<std::size_t>(k)] == radix - 1)
      digits[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
    ++digits[static_cast<std::size_t>(k)];
  }
  return out;
}

// Both directions of every radix^n word; up before down, then lexicographic.
inline std::vector<DirectedWord> enumerate_directed_words(int n, int radix) {
  std::vector<DirectedWord> out;
  for (Direction d : {Direction::up, Direction::down})
    for (const RadixWord& w : enumerate_words(n, radix)) out.push_back(DirectedWord{d, w});
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const RadixWord& w) {
  os << w.radix << ':';
  for (int i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w.digits[static_cast<std::size_t>(i)];
  }
  return os;
}

inline std::ostream& operator<<(std::ostream& os, const DirectedWord& w) {
  return os << (w.dir == Direction::up ? "up:" : "down:") << w.word;
}

}  // namespace ruffles
