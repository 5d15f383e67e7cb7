#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "ruffles/monoid.hpp"
#include "ruffles/perm.hpp"
#include "ruffles/shuffles.hpp"
#include "ruffles/verify.hpp"
#include "ruffles/words.hpp"

using namespace ruffles;

namespace {

const auto gmul = [](const Permutation& g, const Permutation& h) { return compose(g, h); };
const auto act = [](const RadixWord& m, const Permutation& g) { return act_word(m, g); };
const auto rmul = [](const RadixWord& m, const RadixWord& w) { return radix_mul(m, w); };
const auto graymul = [](const RadixWord& m, const RadixWord& w) { return gray_mul(m, w); };

}  // namespace

TEST_CASE("semidirect product composition") {
  using Elem = SemidirectElement<Permutation, RadixWord>;
  const Permutation id4 = Permutation::identity(4);
  const RadixWord m = make_word(3, {1, 0, 2, 1});
  const RadixWord n = make_word(2, {1, 1, 0, 1});

  // trivial group part multiplies the monoid parts
  const Elem r1 = semidirect_compose(gmul, act, rmul, Elem{id4, m}, Elem{id4, n});
  CHECK(r1.g == id4);
  CHECK(r1.m == radix_mul(m, n));

  // trivial monoid part multiplies the group parts
  const Permutation g = Permutation::from_positions({2, 3, 1, 4});
  const Permutation h = Permutation::from_positions({4, 1, 2, 3});
  const Elem r2 =
      semidirect_compose(gmul, act, rmul, Elem{g, unit_word(4)}, Elem{h, unit_word(4)});
  CHECK(r2.g == compose(g, h));
  CHECK(r2.m == unit_word(4));
}

TEST_CASE("semidirect product associativity on random triples") {
  std::mt19937 rng(123457);
  const auto sym = all_permutations(4);
  const auto words = enumerate_words(4, 4);
  auto pick_g = [&] { return sym[rng() % sym.size()]; };
  auto pick_m = [&] {
    RadixWord w = words[rng() % words.size()];
    return w;
  };
  using Elem = SemidirectElement<Permutation, RadixWord>;
  for (int trial = 0; trial < 500; ++trial) {
    const Elem x{pick_g(), pick_m()}, y{pick_g(), pick_m()}, z{pick_g(), pick_m()};
    const Elem left = semidirect_compose(gmul, act, rmul,
                                         semidirect_compose(gmul, act, rmul, x, y), z);
    const Elem right = semidirect_compose(gmul, act, rmul, x,
                                          semidirect_compose(gmul, act, rmul, y, z));
    REQUIRE(left.g == right.g);
    REQUIRE(left.m == right.m);
    // the three-way expansion (ghi, m^{hi} n^i o)
    const Permutation hi = compose(y.g, z.g);
    REQUIRE(left.g == compose(x.g, hi));
    REQUIRE(left.m == radix_mul(radix_mul(act_word(x.m, hi), act_word(y.m, z.g)), z.m));
  }
}

TEST_CASE("twisted products reproduce the worked chains") {
  auto riffle_gamma = [](const RadixWord& w) { return riffle(w); };
  auto ruffle_gamma = [](const RadixWord& w) { return ruffle(w); };

  CHECK(twisted_product(act, rmul, riffle_gamma, make_word(3, {2, 2, 1, 0, 1}),
                        make_word(2, {1, 1, 0, 1, 0})) == make_word(6, {3, 1, 4, 3, 4}));
  CHECK(twisted_product(act, graymul, ruffle_gamma, make_word(3, {1, 1, 2, 0, 1}),
                        make_word(2, {1, 1, 0, 1, 0})) == make_word(6, {2, 1, 3, 5, 3}));

  // gamma of the radix-1 word is the identity permutation, so the unit word
  // is right-neutral
  const RadixWord m = make_word(3, {1, 0, 2, 1, 2});
  CHECK(twisted_product(act, rmul, riffle_gamma, m, unit_word(5)) == m);
  CHECK(twisted_product(act, graymul, ruffle_gamma, m, unit_word(5)) == m);
}

TEST_CASE("reaction law for riffle and ruffle over radix pairs (2,3), n = 5") {
  for (const char* map : {"riffle", "ruffle"}) {
    const auto res = run_reaction_suite(map, 5, 2, 3);
    INFO(map);
    CHECK(res.pass);
    CHECK(res.pairs == 32 * 243);
  }
}

TEST_CASE("corrupted gamma is caught") {
  const auto res = run_reaction_suite("riffle", 3, 2, 3, /*corrupt=*/true);
  CHECK_FALSE(res.pass);
  CHECK_FALSE(res.witness_m.empty());

  // same corruption through check_reaction directly, swapping the outputs of
  // two words with distinct images
  const auto left = enumerate_words(3, 2);
  REQUIRE(riffle(left[0]) != riffle(left[2]));
  auto corrupted = [&](const RadixWord& w) {
    if (w == left[0]) return riffle(left[2]);
    if (w == left[2]) return riffle(left[0]);
    return riffle(w);
  };
  const auto bad = check_reaction(gmul, act, rmul, corrupted, left, enumerate_words(3, 3));
  REQUIRE(bad.has_value());
}

TEST_CASE("reaction counterexample is the least pair for every worker count") {
  const auto left = enumerate_words(3, 2);
  auto corrupted = [&](const RadixWord& w) {
    if (w == left[0]) return riffle(left[2]);
    if (w == left[2]) return riffle(left[0]);
    return riffle(w);
  };
  const auto right = enumerate_words(3, 3);
  const auto base = check_reaction(gmul, act, rmul, corrupted, left, right, 1);
  REQUIRE(base.has_value());
  for (int workers : {2, 3, 7}) {
    const auto again = check_reaction(gmul, act, rmul, corrupted, left, right, workers);
    REQUIRE(again.has_value());
    CHECK(again->m == base->m);
    CHECK(again->n == base->n);
  }
}

TEST_CASE("action axioms") {
  const auto sym = all_permutations(4);
  const auto words = enumerate_words(4, 3);

  CHECK_FALSE(check_action_axioms(gmul, act, rmul, sym, Permutation::identity(4), words)
                  .has_value());

  // identity fixes every word
  for (const RadixWord& w : words) CHECK(act_word(w, Permutation::identity(4)) == w);

  // off-by-one corruption: act through a fixed extra rotation
  const Permutation rot = Permutation::from_cycle(4, {1, 2, 3, 4});
  auto broken = [&](const RadixWord& m, const Permutation& g) {
    return act_word(m, compose(rot, g));
  };
  const auto bad = check_action_axioms(gmul, broken, rmul, sym, Permutation::identity(4), words);
  REQUIRE(bad.has_value());
}

TEST_CASE("twisted product is associative on closed domains, n <= 4") {
  auto riffle_gamma = [](const RadixWord& w) { return riffle(w); };
  auto ruffle_gamma = [](const RadixWord& w) { return ruffle(w); };
  for (int n : {2, 3, 4}) {
    std::vector<RadixWord> domain;
    for (int a : {1, 2, 3})
      for (const RadixWord& w : enumerate_words(n, a)) domain.push_back(w);
    const auto bad = check_twisted_associativity(act, rmul, riffle_gamma, domain, domain, domain);
    REQUIRE_FALSE(bad.has_value());
    const auto bad2 =
        check_twisted_associativity(act, graymul, ruffle_gamma, domain, domain, domain);
    REQUIRE_FALSE(bad2.has_value());
  }
}

TEST_CASE("gamma is a monoid map from the twisted monoid to the group") {
  auto ruffle_gamma = [](const RadixWord& w) { return ruffle(w); };
  for (int a : {1, 2, 3})
    for (int b : {1, 2, 3})
      for (const RadixWord& m : enumerate_words(3, a))
        for (const RadixWord& w : enumerate_words(3, b))
          REQUIRE(ruffle(twisted_product(act, graymul, ruffle_gamma, m, w)) ==
                  compose(ruffle(m), ruffle(w)));
}
