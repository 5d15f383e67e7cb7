#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "ruffles/perm.hpp"
#include "ruffles/verify.hpp"

using namespace ruffles;

namespace {

std::vector<std::vector<int>> matmul(const std::vector<std::vector<int>>& x,
                                     const std::vector<std::vector<int>>& y) {
  const std::size_t n = x.size();
  std::vector<std::vector<int>> out(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += x[i][k] * y[k][j];
  return out;
}

}  // namespace

TEST_CASE("natural-order composition") {
  const Permutation a = Permutation::from_positions({2, 1, 3});
  const Permutation b = Permutation::from_positions({1, 3, 2});
  CHECK(compose(a, b) == Permutation::from_positions({3, 1, 2}));

  for (const Permutation& p : all_permutations(4)) {
    CHECK(compose(p, Permutation::identity(4)) == p);
    CHECK(compose(Permutation::identity(4), p) == p);
    CHECK(compose(p, p.inverse()) == Permutation::identity(4));
    CHECK(compose(p.inverse(), p) == Permutation::identity(4));
  }

  CHECK_THROWS_AS(compose(a, Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("natural-order law holds pointwise, exhaustive n <= 5") {
  for (int n : {1, 2, 3, 4, 5}) {
    const auto sym = all_permutations(n);
    for (const Permutation& p : sym)
      for (const Permutation& q : sym) {
        const Permutation pq = compose(p, q);
        for (int i = 1; i <= n; ++i) REQUIRE(pq(i) == q(p(i)));
      }
  }
}

TEST_CASE("identity, inverse, reversal") {
  CHECK(Permutation::reversal(3).positions() == std::vector<int>{3, 2, 1});
  CHECK(Permutation::from_positions({3, 1, 2}).inverse().positions() ==
        std::vector<int>{2, 3, 1});
  CHECK(Permutation::identity(5).inverse() == Permutation::identity(5));
  CHECK_THROWS_AS(Permutation::identity(0), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::reversal(-2), std::invalid_argument);
}

TEST_CASE("cycle notation") {
  CHECK(Permutation::from_cycle(3, {1, 3, 2}).positions() == std::vector<int>{3, 1, 2});
  CHECK(Permutation::from_cycle(3, {1, 2}).positions() == std::vector<int>{2, 1, 3});
  for (int k = 1; k <= 4; ++k) CHECK(Permutation::from_cycle(4, {k}) == Permutation::identity(4));
  CHECK(Permutation::from_cycle(4, {}) == Permutation::identity(4));
  CHECK_THROWS_AS(Permutation::from_cycle(3, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_cycle(3, {1, 4}), std::invalid_argument);
}

TEST_CASE("fractions") {
  CHECK(Permutation::from_fraction({1, 2, 3}, {2, 3, 1}).positions() == std::vector<int>{3, 1, 2});
  CHECK(Permutation::from_fraction({2, 1, 3}, {2, 3, 1}).positions() == std::vector<int>{1, 3, 2});
  for (const Permutation& p : all_permutations(4))
    CHECK(Permutation::from_fraction(p.positions(), p.positions()) == Permutation::identity(4));
  CHECK_THROWS_AS(Permutation::from_fraction({1, 1, 3}, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("fraction is invariant under simultaneous value relabeling") {
  // sigma/tau = (sigma rho)/(tau rho): relabeling every entry of both tuples
  // by the same permutation fixes the quotient. (This subsumes the rewriting
  // b = (1,2,3)/(1,3,2) = (2,1,3)/(2,3,1).)
  const std::vector<int> top = {2, 1, 3};
  const std::vector<int> bottom = {2, 3, 1};
  const Permutation expect = Permutation::from_fraction(top, bottom);
  for (const Permutation& rho : all_permutations(3)) {
    std::vector<int> t2(3), b2(3);
    for (int i = 0; i < 3; ++i) {
      t2[static_cast<std::size_t>(i)] = rho(top[static_cast<std::size_t>(i)]);
      b2[static_cast<std::size_t>(i)] = rho(bottom[static_cast<std::size_t>(i)]);
    }
    CHECK(Permutation::from_fraction(t2, b2) == expect);
  }
}

TEST_CASE("deck words") {
  CHECK(Permutation::from_deck({3, 4, 1, 5, 2}).positions() == std::vector<int>{3, 5, 1, 2, 4});
  CHECK(Permutation::identity(5).deck_word() == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(Permutation::reversal(4).deck_word() == std::vector<int>{4, 3, 2, 1});
  for (const Permutation& p : all_permutations(4)) {
    CHECK(Permutation::from_deck(p.deck_word()) == p);
    CHECK(Permutation::from_deck(p.positions()).deck_word() == p.positions());
    // function form and deck word are mutually inverse
    const auto deck = p.deck_word();
    for (int i = 1; i <= 4; ++i) REQUIRE(deck[static_cast<std::size_t>(p(i) - 1)] == i);
  }
}

TEST_CASE("permutation matrices") {
  const Permutation a = Permutation::from_positions({2, 1, 3});
  const Permutation b = Permutation::from_positions({1, 3, 2});
  CHECK(matmul(perm_matrix(a), perm_matrix(b)) == perm_matrix(compose(a, b)));
  CHECK(perm_matrix(compose(a, b)) ==
        std::vector<std::vector<int>>{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});

  const auto id_matrix = perm_matrix(Permutation::identity(3));
  CHECK(id_matrix == std::vector<std::vector<int>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});

  for (const Permutation& p : all_permutations(5)) {
    const auto m = perm_matrix(p);
    for (int i = 0; i < 5; ++i) {
      int row = 0, col = 0;
      for (int j = 0; j < 5; ++j) {
        row += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        col += m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      }
      REQUIRE(row == 1);
      REQUIRE(col == 1);
    }
  }
}

TEST_CASE("matrix homomorphism, exhaustive n <= 4") {
  for (int n : {1, 2, 3, 4}) {
    const auto sym = all_permutations(n);
    for (const Permutation& p : sym)
      for (const Permutation& q : sym)
        REQUIRE(matmul(perm_matrix(p), perm_matrix(q)) == perm_matrix(compose(p, q)));
  }
}

TEST_CASE("act_on_list") {
  const std::vector<int> xs = {10, 20, 30, 40};
  CHECK(act_on_list(Permutation::identity(4), xs) == xs);
  CHECK_THROWS_AS(act_on_list(Permutation::identity(3), xs), std::invalid_argument);

  // moving entry i to position p(i) agrees with row-vector times matrix
  for (const Permutation& p : all_permutations(4)) {
    const auto moved = act_on_list(p, xs);
    const auto m = perm_matrix(p);
    for (int j = 0; j < 4; ++j) {
      int entry = 0;
      for (int i = 0; i < 4; ++i)
        entry += xs[static_cast<std::size_t>(i)] *
                 m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      REQUIRE(moved[static_cast<std::size_t>(j)] == entry);
    }
  }
}

TEST_CASE("action axioms for lists, exhaustive n <= 4") {
  const std::vector<int> markers = {7, 11, 13, 17};
  for (int n : {1, 2, 3, 4}) {
    const std::vector<int> xs(markers.begin(), markers.begin() + n);
    const auto sym = all_permutations(n);
    for (const Permutation& p : sym) {
      for (const Permutation& q : sym)
        REQUIRE(act_on_list(q, act_on_list(p, xs)) == act_on_list(compose(p, q), xs));
      // entrywise products are preserved
      std::vector<int> squares(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i) squares[i] = xs[i] * xs[i];
      const auto lhs = act_on_list(p, squares);
      const auto moved = act_on_list(p, xs);
      for (std::size_t i = 0; i < xs.size(); ++i) REQUIRE(lhs[i] == moved[i] * moved[i]);
    }
  }
}

TEST_CASE("rising decompositions") {
  CHECK(rising(Permutation::identity(6)).count == 1);
  CHECK(rising(Permutation::identity(6)).cuts.empty());

  const auto r = rising(Permutation::from_positions({3, 5, 1, 2, 4}));
  CHECK(r.count == 2);
  CHECK(r.cuts == std::vector<int>{2});

  CHECK(rising(Permutation::reversal(5)).count == 5);

  for (const Permutation& p : all_permutations(5)) {
    const auto d = rising(p);
    REQUIRE(d.count == static_cast<int>(d.cuts.size()) + 1);
    REQUIRE(d.count >= 1);
    REQUIRE(d.count <= 5);
    REQUIRE((d.count == 1) == p.is_identity());
    for (int cut : d.cuts) REQUIRE(p(cut + 1) < p(cut));
  }
}

TEST_CASE("turning sets") {
  CHECK(turning(Permutation::identity(5)).count == 0);
  for (int n = 2; n <= 6; ++n) {
    CHECK(turning(Permutation::reversal(n)).count == 1);
    CHECK(turning(Permutation::reversal(n)).points == std::vector<int>{1});
    CHECK(turning(Permutation::reversal(n)).reduced_count == 0);
  }
  CHECK(turning(Permutation::identity(1)).count == 0);

  const auto t = turning(Permutation::from_positions({3, 5, 4, 2, 1}));
  CHECK(t.count == 1);
  CHECK(t.points == std::vector<int>{2});
  CHECK(t.reduced_count == 1);

  for (const Permutation& p : all_permutations(5)) {
    const auto s = turning(p);
    REQUIRE(s.count >= 0);
    REQUIRE(s.count <= 4);
    int at1 = std::count(s.points.begin(), s.points.end(), 1);
    REQUIRE(s.reduced_count == s.count - at1);
  }
}

TEST_CASE("turning-set partition equals cut-set partition, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const auto by_turning = classify_sym(n, "turningset");
    const auto by_cuts = classify_sym(n, "risingsequence");
    REQUIRE(by_turning.elements == by_cuts.elements);
    auto groups = [](const ClassTable<Permutation>& t) {
      std::set<std::vector<int>> out;
      for (const auto& m : t.members) out.insert(m);
      return out;
    };
    REQUIRE(groups(by_turning) == groups(by_cuts));
  }
}
