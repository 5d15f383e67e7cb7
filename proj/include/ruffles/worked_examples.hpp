#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ruffles/io.hpp"
#include "ruffles/monoid.hpp"
#include "ruffles/perm.hpp"
#include "ruffles/shuffles.hpp"
#include "ruffles/words.hpp"

namespace ruffles {

namespace detail {

class ExampleChecker {
 public:
  explicit ExampleChecker(std::ostream& out) : out_(out) {}

  template <class T>
  void eq(const std::string& name, const T& got, const T& want) {
    if (got == want) {
      out_ << "ok    " << name << "\n";
    } else {
      ++failures_;
      std::ostringstream g, w;
      g << got;
      w << want;
      out_ << "FAIL  " << name << ": got " << g.str() << ", want " << w.str() << "\n";
    }
  }

  void eq_tuple(const std::string& name, const std::vector<int>& got,
                const std::vector<int>& want) {
    if (got == want) {
      out_ << "ok    " << name << "\n";
    } else {
      ++failures_;
      out_ << "FAIL  " << name << ": got " << format_tuple(got) << ", want " << format_tuple(want)
           << "\n";
    }
  }

  int failures() const { return failures_; }

 private:
  std::ostream& out_;
  int failures_ = 0;
};

}  // namespace detail

// Replays the built-in worked examples (braid products, the five-card riffle
// and ruffle chains, hybrid Gray counting, the directed up/down pair, and
// the statistic anchor values) and checks every value bit-exactly. Returns
// the number of failing checks. With sabotage set, one expected value is
// deliberately perturbed; the run must then report a failure (self-test of
// the harness).
inline int run_worked_examples(std::ostream& out, bool sabotage = false) {
  detail::ExampleChecker check(out);

  // Braid generators and their product, in all three representations.
  const Permutation a = Permutation::from_cycle(3, {1, 2});
  const Permutation b = Permutation::from_cycle(3, {2, 3});
  const Permutation ab = compose(a, b);
  check.eq_tuple("a = <1 2>", a.positions(), {2, 1, 3});
  check.eq_tuple("b = <2 3>", b.positions(), {1, 3, 2});
  check.eq_tuple("ab = <1 2><2 3>", ab.positions(), {3, 1, 2});
  check.eq("ab = <1 3 2>", Permutation::from_cycle(3, {1, 3, 2}), ab);
  check.eq("a = (1,2,3)/(2,1,3)", Permutation::from_fraction({1, 2, 3}, {2, 1, 3}), a);
  check.eq("b = (2,1,3)/(2,3,1)", Permutation::from_fraction({2, 1, 3}, {2, 3, 1}), b);
  check.eq("ab = (1,2,3)/(2,3,1)", Permutation::from_fraction({1, 2, 3}, {2, 3, 1}), ab);

  // permmatrix[a] permmatrix[b] = permmatrix[ab], entry by entry.
  {
    const auto ma = perm_matrix(a);
    const auto mb = perm_matrix(b);
    std::vector<std::vector<int>> prod(3, std::vector<int>(3, 0));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
              ma[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
              mb[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    const std::vector<std::vector<int>> want = {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
    bool same = prod == want && perm_matrix(ab) == want;
    check.eq("permmatrix[a] permmatrix[b] = permmatrix[ab]", same, true);
  }

  // Two-handed and three-handed riffles on five cards, and their composite.
  const RadixWord w2 = make_word(2, {1, 1, 0, 1, 0});
  const RadixWord m3 = make_word(3, {2, 2, 1, 0, 1});
  check.eq_tuple("riffle 2:1,1,0,1,0 deck word", riffle(w2).deck_word(),
                 sabotage ? std::vector<int>{3, 4, 1, 2, 5} : std::vector<int>{3, 4, 1, 5, 2});
  check.eq_tuple("riffle 3:2,2,1,0,1 deck word", riffle(m3).deck_word(), {4, 5, 2, 1, 3});
  check.eq_tuple("digits 2,2,1,0,1 after the 2-riffle", act_on_list(riffle(w2), m3.digits),
                 {1, 0, 2, 1, 2});
  const RadixWord riffle_prod = riffle_product(m3, w2);
  check.eq("3:2,2,1,0,1 *riffle 2:1,1,0,1,0", riffle_prod, make_word(6, {3, 1, 4, 3, 4}));
  check.eq_tuple("riffle 6:3,1,4,3,4 deck word", riffle(riffle_prod).deck_word(), {2, 1, 4, 3, 5});
  check.eq("riffle reaction on the worked pair", compose(riffle(m3), riffle(w2)),
           riffle(riffle_prod));

  // Counting in hybrid Gray base (3,2).
  {
    const std::vector<std::vector<int>> want = {{0, 0}, {0, 1}, {1, 1}, {1, 0}, {2, 0}, {2, 1}};
    check.eq("Gray count in base (3,2)", gray_count({3, 2}) == want, true);
  }

  // The matching ruffle chain.
  const RadixWord r3 = make_word(3, {1, 1, 2, 0, 1});
  check.eq_tuple("ruffle 2:1,1,0,1,0 deck word", ruffle(w2).deck_word(), {5, 4, 1, 3, 2});
  check.eq_tuple("ruffle 3:1,1,2,0,1 deck word", ruffle(r3).deck_word(), {4, 3, 5, 1, 2});
  check.eq_tuple("digits 1,1,2,0,1 after the 2-ruffle", act_on_list(ruffle(w2), r3.digits),
                 {1, 0, 1, 2, 1});
  const RadixWord ruffle_prod = ruffle_product(r3, w2);
  check.eq("3:1,1,2,0,1 *ruffle 2:1,1,0,1,0", ruffle_prod, make_word(6, {2, 1, 3, 5, 3}));
  check.eq_tuple("ruffle 6:2,1,3,5,3 deck word", ruffle(ruffle_prod).deck_word(), {2, 1, 4, 5, 3});
  check.eq("ruffle reaction on the worked pair", compose(ruffle(r3), ruffle(w2)),
           ruffle(ruffle_prod));

  // Directed ruffles: up reproduces the plain ruffle, down turns over the
  // even piles.
  check.eq_tuple("up-directed ruffle of 2:1,1,0,1,0",
                 directed_ruffle({Direction::up, w2}).deck_word(), {5, 4, 1, 3, 2});
  check.eq_tuple("down-directed ruffle of 2:1,1,0,1,0",
                 directed_ruffle({Direction::down, w2}).deck_word(), {3, 4, 2, 5, 1});

  // Statistic anchors.
  check.eq("rising number of the identity", rising(Permutation::identity(5)).count, 1);
  check.eq("turning number of the identity", turning(Permutation::identity(5)).count, 0);
  check.eq("turning number of the reversal", turning(Permutation::reversal(5)).count, 1);
  check.eq("reduced turning number of the reversal", turning(Permutation::reversal(5)).reduced_count,
           0);
  check.eq("rising number of the reversal", rising(Permutation::reversal(5)).count, 5);

  return check.failures();
}

}  // namespace ruffles
