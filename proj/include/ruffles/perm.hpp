#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ruffles {

// Permutation of {1..n} in function form: p(card) = final position of the
// card. Composition is written in natural, left-to-right order throughout:
//
//   (p * q)(i) = q(p(i))        -- p acts first, then q.
//
// The deck word (which card occupies each position) is the inverse tuple and
// is exposed as a derived view; the function form is the stored canonical
// representation. All tuples crossing the public API are 1-based.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n) {
    check_size(n);
    Permutation p;
    p.pos_.resize(static_cast<std::size_t>(n));
    std::iota(p.pos_.begin(), p.pos_.end(), 0);
    return p;
  }

  static Permutation reversal(int n) {
    check_size(n);
    Permutation p;
    p.pos_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p.pos_[static_cast<std::size_t>(i)] = n - 1 - i;
    return p;
  }

  // Function form from a 1-based tuple: positions[i-1] = where card i goes.
  static Permutation from_positions(const std::vector<int>& positions) {
    Permutation p;
    p.pos_.resize(positions.size());
    std::vector<char> seen(positions.size(), 0);
    const int n = static_cast<int>(positions.size());
    check_size(n);
    for (int i = 0; i < n; ++i) {
      const int v = positions[static_cast<std::size_t>(i)];
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
        throw std::invalid_argument("Permutation: tuple is not a bijection of 1.." +
                                    std::to_string(n));
      seen[static_cast<std::size_t>(v - 1)] = 1;
      p.pos_[static_cast<std::size_t>(i)] = v - 1;
    }
    return p;
  }

  // Deck-word form: deck[j-1] = the card found at position j.
  static Permutation from_deck(const std::vector<int>& deck) {
    return from_positions(deck).inverse();
  }

  // The transposition <i j>; a 1-cycle or empty cycle gives the identity.
  static Permutation transposition(int n, int i, int j) {
    Permutation p = identity(n);
    check_index(n, i);
    check_index(n, j);
    std::swap(p.pos_[static_cast<std::size_t>(i - 1)], p.pos_[static_cast<std::size_t>(j - 1)]);
    return p;
  }

  // Cycle <i1 i2 ... ik>, built by the recursion
  //   <i1 ... ik> = <i(k-1) ik> <i1 ... i(k-1)>
  // with natural-order composition.
  static Permutation from_cycle(int n, const std::vector<int>& items) {
    check_size(n);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : items) {
      check_index(n, v);
      if (seen[static_cast<std::size_t>(v - 1)])
        throw std::invalid_argument("from_cycle: repeated entry " + std::to_string(v));
      seen[static_cast<std::size_t>(v - 1)] = 1;
    }
    Permutation acc = identity(n);
    for (std::size_t k = 1; k < items.size(); ++k)
      acc = compose(transposition(n, items[k - 1], items[k]), acc);
    return acc;
  }

  // The fraction top/bottom = perm(top) * perm(bottom)^-1.
  static Permutation from_fraction(const std::vector<int>& top, const std::vector<int>& bottom) {
    return compose(from_positions(top), from_positions(bottom).inverse());
  }

  int size() const { return static_cast<int>(pos_.size()); }

  // 1-based: final position of `card`.
  int operator()(int card) const { return pos_[static_cast<std::size_t>(card - 1)] + 1; }

  // 0-based variant for inner loops.
  int pos0(int card0) const { return pos_[static_cast<std::size_t>(card0)]; }

  std::vector<int> positions() const {
    std::vector<int> out(pos_.size());
    for (std::size_t i = 0; i < pos_.size(); ++i) out[i] = pos_[i] + 1;
    return out;
  }

  std::vector<int> deck_word() const {
    std::vector<int> out(pos_.size());
    for (std::size_t i = 0; i < pos_.size(); ++i)
      out[static_cast<std::size_t>(pos_[i])] = static_cast<int>(i) + 1;
    return out;
  }

  Permutation inverse() const {
    Permutation q;
    q.pos_.resize(pos_.size());
    for (std::size_t i = 0; i < pos_.size(); ++i)
      q.pos_[static_cast<std::size_t>(pos_[i])] = static_cast<int>(i);
    return q;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < pos_.size(); ++i)
      if (pos_[i] != static_cast<int>(i)) return false;
    return true;
  }

  friend Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size())
      throw std::invalid_argument("compose: size mismatch (" + std::to_string(p.size()) + " vs " +
                                  std::to_string(q.size()) + ")");
    Permutation r;
    r.pos_.resize(p.pos_.size());
    for (std::size_t i = 0; i < p.pos_.size(); ++i)
      r.pos_[i] = q.pos_[static_cast<std::size_t>(p.pos_[i])];
    return r;
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  static void check_size(int n) {
    if (n < 1) throw std::invalid_argument("Permutation: n must be >= 1");
  }
  static void check_index(int n, int i) {
    if (i < 1 || i > n)
      throw std::invalid_argument("Permutation: index " + std::to_string(i) + " outside 1.." +
                                  std::to_string(n));
  }

  std::vector<int> pos_;  // pos_[i] = 0-based final position of card i+1
};

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

// Applies p to a list of per-position markers: the entry initially at
// position i moves to position p(i). Agrees with row-vector times
// perm_matrix(p).
template <class T>
std::vector<T> act_on_list(const Permutation& p, const std::vector<T>& xs) {
  if (static_cast<int>(xs.size()) != p.size())
    throw std::invalid_argument("act_on_list: length mismatch");
  std::vector<T> out(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j)
    out[static_cast<std::size_t>(p.pos0(static_cast<int>(j)))] = xs[j];
  return out;
}

// 0/1 matrix with entry (i,j) = 1 iff p(i) = j. Row vectors compose on the
// right: perm_matrix(p*q) = perm_matrix(p) * perm_matrix(q).
inline std::vector<std::vector<int>> perm_matrix(const Permutation& p) {
  const int n = p.size();
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(p.pos0(i))] = 1;
  return m;
}

// Maximal ascending runs of the position tuple. A cut at i (1 <= i <= n-1)
// separates positions i and i+1 whenever p(i+1) < p(i); the rising number is
// the number of runs, i.e. cuts + 1.
struct RisingDecomposition {
  std::vector<int> cuts;
  int count = 1;
};

inline RisingDecomposition rising(const Permutation& p) {
  RisingDecomposition r;
  for (int i = 1; i < p.size(); ++i)
    if (p(i + 1) < p(i)) r.cuts.push_back(i);
  r.count = static_cast<int>(r.cuts.size()) + 1;
  return r;
}

// Strict local extrema of the position tuple extended by p(0) = 0, scanned
// over i = 1..n-1 (n is never a turning point). The reduced count ignores a
// turning point at index 1.
struct TurningSet {
  std::vector<int> points;
  int count = 0;
  int reduced_count = 0;
};

inline TurningSet turning(const Permutation& p) {
  TurningSet t;
  const int n = p.size();
  int prev = 0;
  for (int i = 1; i <= n - 1; ++i) {
    const int cur = p(i);
    const int next = p(i + 1);
    if ((cur > prev && cur > next) || (cur < prev && cur < next)) t.points.push_back(i);
    prev = cur;
  }
  t.count = static_cast<int>(t.points.size());
  t.reduced_count = t.count - ((!t.points.empty() && t.points.front() == 1) ? 1 : 0);
  return t;
}

inline int fixed_point_count(const Permutation& p) {
  int c = 0;
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) == i) ++c;
  return c;
}

// All of S_n in ascending (lexicographic position-tuple) order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> tuple(static_cast<std::size_t>(n));
  std::iota(tuple.begin(), tuple.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_positions(tuple));
  } while (std::next_permutation(tuple.begin(), tuple.end()));
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  os << '(';
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) os << ',';
    os << p(i);
  }
  return os << ')';
}

}  // namespace ruffles
