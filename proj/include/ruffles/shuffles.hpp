#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ruffles/oriented.hpp"
#include "ruffles/perm.hpp"
#include "ruffles/words.hpp"

namespace ruffles {

namespace detail {

// Shared dealing core. The deck is cut into w.radix consecutive piles whose
// sizes are the digit counts (pile 0 topmost). Digit w_i names the pile that
// supplies final position i; a turned-over pile supplies its cards in
// reversed relative order and face-down.
template <class TurnOver>
OrientedPermutation deal(const RadixWord& w, TurnOver&& turned) {
  const int n = w.size();
  const int a = w.radix;
  std::vector<int> counts(static_cast<std::size_t>(a), 0);
  for (int d : w.digits) ++counts[static_cast<std::size_t>(d)];
  std::vector<int> next(static_cast<std::size_t>(a));
  std::vector<int> step(static_cast<std::size_t>(a));
  int start = 0;
  for (int k = 0; k < a; ++k) {
    const bool rev = turned(k);
    next[static_cast<std::size_t>(k)] = rev ? start + counts[static_cast<std::size_t>(k)] - 1 : start;
    step[static_cast<std::size_t>(k)] = rev ? -1 : 1;
    start += counts[static_cast<std::size_t>(k)];
  }
  std::vector<int> positions(static_cast<std::size_t>(n));
  std::vector<std::uint8_t> flips(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const int k = w.digits[static_cast<std::size_t>(i)];
    const int card = next[static_cast<std::size_t>(k)];  // 0-based
    next[static_cast<std::size_t>(k)] += step[static_cast<std::size_t>(k)];
    positions[static_cast<std::size_t>(card)] = i + 1;
    flips[static_cast<std::size_t>(card)] = turned(k) ? 1 : 0;
  }
  return OrientedPermutation(Permutation::from_positions(positions), std::move(flips));
}

}  // namespace detail

// a-handed riffle: every pile stays face-up and order-preserving.
inline Permutation riffle(const RadixWord& w) {
  return detail::deal(w, [](int) { return false; }).perm();
}

// a-handed ruffle: odd-indexed piles are turned over.
inline OrientedPermutation oriented_ruffle(const RadixWord& w) {
  return detail::deal(w, [](int k) { return k % 2 == 1; });
}

inline Permutation ruffle(const RadixWord& w) { return oriented_ruffle(w).perm(); }

// Directed ruffle: direction up turns over the odd piles, down the even ones.
inline OrientedPermutation oriented_directed_ruffle(const DirectedWord& d) {
  const int offset = static_cast<int>(d.dir);
  return detail::deal(d.word, [offset](int k) { return (k + offset) % 2 == 1; });
}

inline Permutation directed_ruffle(const DirectedWord& d) {
  return oriented_directed_ruffle(d).perm();
}

// Lumping statistics on words: the number of hands, and the way the deck is
// cut and distributed among them.
inline int hand_class(const RadixWord& w) { return w.radix; }

struct CutClassLabel {
  int radix = 1;
  std::vector<int> counts;  // counts[k] = number of digits equal to k
  auto operator<=>(const CutClassLabel&) const = default;
};

inline CutClassLabel cut_class(const RadixWord& w) {
  CutClassLabel label;
  label.radix = w.radix;
  label.counts.assign(static_cast<std::size_t>(w.radix), 0);
  for (int d : w.digits) ++label.counts[static_cast<std::size_t>(d)];
  return label;
}

// The digit-permuting right action of S_n on words, and the four reactions,
// packaged for the generic checkers.
inline RadixWord act_word(const RadixWord& w, const Permutation& g) {
  return RadixWord{w.radix, act_on_list(g, w.digits)};
}

inline DirectedWord act_directed_word(const DirectedWord& w, const Permutation& g) {
  return DirectedWord{w.dir, act_word(w.word, g)};
}

// Shuffle composition: the twisted product m *_gamma w = m^{gamma[w]} w in
// the appropriate monoid.
inline RadixWord riffle_product(const RadixWord& m, const RadixWord& w) {
  return radix_mul(act_word(m, riffle(w)), w);
}

inline RadixWord ruffle_product(const RadixWord& m, const RadixWord& w) {
  return gray_mul(act_word(m, ruffle(w)), w);
}

inline DirectedWord directed_ruffle_product(const DirectedWord& m, const DirectedWord& w) {
  return directed_mul(act_directed_word(m, directed_ruffle(w)), w);
}

}  // namespace ruffles
