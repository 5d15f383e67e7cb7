#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ruffles/perm.hpp"
#include "ruffles/words.hpp"

namespace ruffles {

// Oriented (signed) permutation: a permutation plus a face-up/face-down sign
// per card. Signs are indexed by card label, not by deck position. In the
// natural-order product, signs compose by XOR along the card's trajectory:
// q's flip is looked up at the position where p has put the card.
class OrientedPermutation {
 public:
  OrientedPermutation() = default;

  OrientedPermutation(Permutation perm, std::vector<std::uint8_t> flipped)
      : perm_(std::move(perm)), flipped_(std::move(flipped)) {
    if (static_cast<int>(flipped_.size()) != perm_.size())
      throw std::invalid_argument("OrientedPermutation: sign vector length mismatch");
    for (auto f : flipped_)
      if (f > 1) throw std::invalid_argument("OrientedPermutation: signs must be 0 or 1");
  }

  static OrientedPermutation identity(int n) {
    return OrientedPermutation(Permutation::identity(n),
                               std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
  }

  // Lift of p with signs taken from the mask: bit i-1 flips card i.
  static OrientedPermutation lift(const Permutation& p, std::uint32_t flip_mask) {
    std::vector<std::uint8_t> f(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i)
      f[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((flip_mask >> i) & 1u);
    return OrientedPermutation(p, std::move(f));
  }

  int size() const { return perm_.size(); }
  const Permutation& perm() const { return perm_; }
  bool flipped(int card) const { return flipped_[static_cast<std::size_t>(card - 1)] != 0; }
  const std::vector<std::uint8_t>& flip_vector() const { return flipped_; }

  auto operator<=>(const OrientedPermutation&) const = default;

 private:
  Permutation perm_;
  std::vector<std::uint8_t> flipped_;
};

inline OrientedPermutation o_compose(const OrientedPermutation& p, const OrientedPermutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("o_compose: size mismatch");
  const int n = p.size();
  std::vector<std::uint8_t> f(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    f[static_cast<std::size_t>(i - 1)] =
        static_cast<std::uint8_t>(p.flipped(i) ^ q.flipped(p.perm()(i)));
  return OrientedPermutation(compose(p.perm(), q.perm()), std::move(f));
}

inline OrientedPermutation o_inverse(const OrientedPermutation& p) {
  const Permutation inv = p.perm().inverse();
  const int n = p.size();
  std::vector<std::uint8_t> f(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j)
    f[static_cast<std::size_t>(j - 1)] = static_cast<std::uint8_t>(p.flipped(inv(j)) ? 1 : 0);
  return OrientedPermutation(inv, std::move(f));
}

// Forgets the signs.
inline const Permutation& project(const OrientedPermutation& p) { return p.perm(); }

// All 2^n oriented permutations over p, in ascending mask order.
inline std::vector<OrientedPermutation> lifts(const Permutation& p) {
  if (p.size() > 20) throw std::invalid_argument("lifts: n too large to enumerate");
  std::vector<OrientedPermutation> out;
  out.reserve(std::size_t{1} << p.size());
  for (std::uint32_t mask = 0; mask < (1u << p.size()); ++mask)
    out.push_back(OrientedPermutation::lift(p, mask));
  return out;
}

// The whole group, ascending: permutations in tuple order, signs in mask
// order within each permutation. |result| = 2^n n!.
inline std::vector<OrientedPermutation> all_oriented_permutations(int n) {
  std::vector<OrientedPermutation> out;
  for (const Permutation& p : all_permutations(n))
    for (const OrientedPermutation& q : lifts(p)) out.push_back(q);
  return out;
}

// Decomposition of 1..n into the blocks a minimal single ruffle would need:
// even-indexed blocks are face-up with increasing positions, odd-indexed
// blocks face-down with decreasing positions. Blocks may be empty, but never
// two in a row. The count (number of blocks, = minimum number of hands) is
// at most 2n.
struct OrientedRisingDecomposition {
  std::vector<int> block_sizes;
  int count = 0;
};

// `first` selects the parity of block 0: up = face-up first (the plain
// ruffle convention), down = face-down first (the reversed directed ruffle).
inline OrientedRisingDecomposition oriented_rising(const OrientedPermutation& p,
                                                   Direction first = Direction::up) {
  const int n = p.size();
  const int offset = static_cast<int>(first);
  OrientedRisingDecomposition d;
  int block = 0;          // current block index
  int block_size = 0;     // cards in the current block
  int last_position = 0;  // last position placed in the current block
  auto close_through = [&](int next_block) {
    d.block_sizes.push_back(block_size);
    for (int k = block + 1; k < next_block; ++k) d.block_sizes.push_back(0);
    block = next_block;
    block_size = 0;
  };
  for (int card = 1; card <= n; ++card) {
    const int pos = p.perm()(card);
    const int face = p.flipped(card) ? 1 : 0;
    const int want = (block + offset) % 2;
    const bool fits = face == want && (block_size == 0 ||
                                       (want == 0 ? pos > last_position : pos < last_position));
    if (!fits) close_through(face == (block + 1 + offset) % 2 ? block + 1 : block + 2);
    ++block_size;
    last_position = pos;
  }
  d.block_sizes.push_back(block_size);
  d.count = static_cast<int>(d.block_sizes.size());
  return d;
}

inline int oriented_rising_count(const OrientedPermutation& p) {
  return oriented_rising(p).count;
}

// Minimum hands over both directed-ruffle directions.
inline int directed_rising_count(const OrientedPermutation& p) {
  return std::min(oriented_rising(p, Direction::up).count,
                  oriented_rising(p, Direction::down).count);
}

inline std::ostream& operator<<(std::ostream& os, const OrientedPermutation& p) {
  os << '(';
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) os << ',';
    os << (p.flipped(i) ? "-" : "") << p.perm()(i);
  }
  return os << ')';
}

}  // namespace ruffles
