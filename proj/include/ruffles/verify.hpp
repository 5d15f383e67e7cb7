#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ruffles/lumping.hpp"
#include "ruffles/monoid.hpp"
#include "ruffles/oriented.hpp"
#include "ruffles/perm.hpp"
#include "ruffles/shuffles.hpp"
#include "ruffles/words.hpp"

namespace ruffles {

// Named statistics over the three element universes. Unknown names throw,
// so the CLI can map them to usage errors.

inline ClassTable<Permutation> classify_sym(int n, const std::string& stat) {
  auto elements = all_permutations(n);
  if (stat == "rising")
    return classify(std::move(elements), stat,
                    [](const Permutation& p) { return std::vector<int>{rising(p).count}; },
                    scalar_label);
  if (stat == "risingsequence")
    return classify(std::move(elements), stat,
                    [](const Permutation& p) { return rising(p).cuts; }, set_label);
  if (stat == "turning")
    return classify(std::move(elements), stat,
                    [](const Permutation& p) { return std::vector<int>{turning(p).count}; },
                    scalar_label);
  if (stat == "turningset")
    return classify(std::move(elements), stat,
                    [](const Permutation& p) { return turning(p).points; }, set_label);
  if (stat == "reducedturning")
    return classify(std::move(elements), stat,
                    [](const Permutation& p) { return std::vector<int>{turning(p).reduced_count}; },
                    scalar_label);
  if (stat == "fixedpoints")
    return classify(std::move(elements), stat,
                    [](const Permutation& p) { return std::vector<int>{fixed_point_count(p)}; },
                    scalar_label);
  throw std::invalid_argument("unknown statistic for sym: " + stat);
}

inline ClassTable<OrientedPermutation> classify_oriented(int n, const std::string& stat) {
  auto elements = all_oriented_permutations(n);
  if (stat == "orientedrising")
    return classify(
        std::move(elements), stat,
        [](const OrientedPermutation& p) { return std::vector<int>{oriented_rising_count(p)}; },
        scalar_label);
  if (stat == "directedrising")
    return classify(
        std::move(elements), stat,
        [](const OrientedPermutation& p) { return std::vector<int>{directed_rising_count(p)}; },
        scalar_label);
  throw std::invalid_argument("unknown statistic for oriented: " + stat);
}

namespace detail {

inline std::vector<int> hand_key(const RadixWord& w) { return {w.radix}; }

inline std::vector<int> cut_key(const RadixWord& w) {
  const CutClassLabel c = cut_class(w);
  std::vector<int> key{c.radix};
  key.insert(key.end(), c.counts.begin(), c.counts.end());
  return key;
}

}  // namespace detail

inline ClassTable<RadixWord> classify_words(std::vector<RadixWord> elements,
                                            const std::string& stat) {
  if (stat == "hand") return classify(std::move(elements), stat, detail::hand_key, scalar_label);
  if (stat == "cut") return classify(std::move(elements), stat, detail::cut_key, cut_label);
  throw std::invalid_argument("unknown statistic for words: " + stat);
}

inline ClassTable<DirectedWord> classify_directed_words(std::vector<DirectedWord> elements,
                                                        const std::string& stat) {
  if (stat == "hand")
    return classify(std::move(elements), stat,
                    [](const DirectedWord& w) { return detail::hand_key(w.word); }, scalar_label);
  throw std::invalid_argument("unknown statistic for directed words: " + stat);
}

inline std::vector<RadixWord> words_up_to_radix(int n, int max_radix) {
  std::vector<RadixWord> out;
  for (int a = 1; a <= max_radix; ++a)
    for (RadixWord& w : enumerate_words(n, a)) out.push_back(std::move(w));
  return out;
}

inline std::vector<DirectedWord> directed_words_up_to_radix(int n, int max_radix) {
  std::vector<DirectedWord> out;
  for (int a = 1; a <= max_radix; ++a)
    for (DirectedWord& w : enumerate_directed_words(n, a)) out.push_back(std::move(w));
  return out;
}

// One reaction-law scan for a named map over all (radix-a, radix-b) word
// pairs. With corrupt set, the outputs of two words in the left domain are
// swapped first, which must surface as a counterexample.
struct ReactionSuiteResult {
  bool pass = true;
  std::int64_t pairs = 0;
  std::string witness_m, witness_n;
};

namespace detail {

template <class M, class G, class Gamma>
auto make_corrupted(const std::vector<M>& left, Gamma gamma) {
  const M w0 = left.at(0);
  const G g0 = gamma(w0);
  std::optional<M> other;
  for (const M& w : left)
    if (!(gamma(w) == g0)) {
      other = w;
      break;
    }
  if (!other)
    throw std::invalid_argument("corrupt: every left-domain word has the same image");
  const M w1 = *other;
  return [gamma, w0, w1](const M& m) {
    if (m == w0) return gamma(w1);
    if (m == w1) return gamma(w0);
    return gamma(m);
  };
}

template <class M, class G, class GMul, class Act, class MMul, class Gamma>
ReactionSuiteResult reaction_scan(GMul gmul, Act act, MMul mmul, Gamma gamma,
                                  const std::vector<M>& left, const std::vector<M>& right,
                                  bool corrupt, int workers) {
  ReactionSuiteResult res;
  res.pairs = static_cast<std::int64_t>(left.size()) * static_cast<std::int64_t>(right.size());
  std::optional<ReactionCounterexample<M>> bad;
  if (corrupt)
    bad = check_reaction(gmul, act, mmul, make_corrupted<M, G>(left, gamma), left, right, workers);
  else
    bad = check_reaction(gmul, act, mmul, gamma, left, right, workers);
  if (bad) {
    res.pass = false;
    std::ostringstream m, n;
    m << bad->m;
    n << bad->n;
    res.witness_m = m.str();
    res.witness_n = n.str();
  }
  return res;
}

}  // namespace detail

inline ReactionSuiteResult run_reaction_suite(const std::string& map, int n, int a, int b,
                                              bool corrupt = false, int workers = 1) {
  auto gmul = [](const Permutation& g, const Permutation& h) { return compose(g, h); };
  auto ogmul = [](const OrientedPermutation& g, const OrientedPermutation& h) {
    return o_compose(g, h);
  };
  if (map == "riffle")
    return detail::reaction_scan<RadixWord, Permutation>(
        gmul, [](const RadixWord& m, const Permutation& g) { return act_word(m, g); },
        [](const RadixWord& m, const RadixWord& w) { return radix_mul(m, w); },
        [](const RadixWord& w) { return riffle(w); }, enumerate_words(n, a),
        enumerate_words(n, b), corrupt, workers);
  if (map == "ruffle")
    return detail::reaction_scan<RadixWord, Permutation>(
        gmul, [](const RadixWord& m, const Permutation& g) { return act_word(m, g); },
        [](const RadixWord& m, const RadixWord& w) { return gray_mul(m, w); },
        [](const RadixWord& w) { return ruffle(w); }, enumerate_words(n, a),
        enumerate_words(n, b), corrupt, workers);
  if (map == "orientedruffle")
    return detail::reaction_scan<RadixWord, OrientedPermutation>(
        ogmul,
        [](const RadixWord& m, const OrientedPermutation& g) { return act_word(m, project(g)); },
        [](const RadixWord& m, const RadixWord& w) { return gray_mul(m, w); },
        [](const RadixWord& w) { return oriented_ruffle(w); }, enumerate_words(n, a),
        enumerate_words(n, b), corrupt, workers);
  if (map == "directedruffle")
    return detail::reaction_scan<DirectedWord, Permutation>(
        gmul,
        [](const DirectedWord& m, const Permutation& g) { return act_directed_word(m, g); },
        [](const DirectedWord& m, const DirectedWord& w) { return directed_mul(m, w); },
        [](const DirectedWord& w) { return directed_ruffle(w); }, enumerate_directed_words(n, a),
        enumerate_directed_words(n, b), corrupt, workers);
  if (map == "orienteddirectedruffle")
    return detail::reaction_scan<DirectedWord, OrientedPermutation>(
        ogmul,
        [](const DirectedWord& m, const OrientedPermutation& g) {
          return act_directed_word(m, project(g));
        },
        [](const DirectedWord& m, const DirectedWord& w) { return directed_mul(m, w); },
        [](const DirectedWord& w) { return oriented_directed_ruffle(w); },
        enumerate_directed_words(n, a), enumerate_directed_words(n, b), corrupt, workers);
  throw std::invalid_argument("unknown map: " + map);
}

// Unique-factorization check: (u, v) -> u *_gamma v must be a bijection from
// radix-a x radix-b words onto radix-ab words. Together with the analogous
// statement for (b, a) this makes the hand subalgebra a copy of the monoid
// algebra of the natural numbers under multiplication of radices.
struct FactorizationReport {
  bool ok = true;
  int a = 0, b = 0;
  std::int64_t checked = 0;
  std::string collision_first, collision_second, product;
};

template <class Twist>
FactorizationReport unique_factorization_check(int n, int a, int b, Twist&& twist) {
  FactorizationReport rep;
  rep.a = a;
  rep.b = b;
  const auto left = enumerate_words(n, a);
  const auto right = enumerate_words(n, b);
  std::vector<std::pair<RadixWord, std::int64_t>> images;
  images.reserve(left.size() * right.size());
  std::int64_t k = 0;
  for (const RadixWord& u : left)
    for (const RadixWord& v : right) images.emplace_back(twist(u, v), k++);
  std::sort(images.begin(), images.end());
  rep.checked = k;
  for (std::size_t i = 1; i < images.size(); ++i) {
    if (images[i - 1].first == images[i].first) {
      rep.ok = false;
      const auto cols = static_cast<std::int64_t>(right.size());
      auto fmt = [&](std::int64_t pair_index) {
        std::ostringstream os;
        os << left[static_cast<std::size_t>(pair_index / cols)] << " * "
           << right[static_cast<std::size_t>(pair_index % cols)];
        return os.str();
      };
      rep.collision_first = fmt(images[i - 1].second);
      rep.collision_second = fmt(images[i].second);
      std::ostringstream os;
      os << images[i].first;
      rep.product = os.str();
      return rep;
    }
  }
  // all distinct; the codomain has exactly (a*b)^n words, so counting wins
  std::int64_t codomain = 1;
  for (int i = 0; i < n; ++i) codomain *= a * b;
  if (rep.checked != codomain) {
    rep.ok = false;
    rep.product = "image count " + std::to_string(rep.checked) + " != " + std::to_string(codomain);
  }
  return rep;
}

inline FactorizationReport hand_algebra_check(int n, int max_radix, const std::string& map) {
  auto twist = [&map](const RadixWord& u, const RadixWord& v) {
    if (map == "riffle") return riffle_product(u, v);
    if (map == "ruffle") return ruffle_product(u, v);
    throw std::invalid_argument("hand_algebra_check: unknown map " + map);
  };
  for (int a = 1; a <= max_radix; ++a)
    for (int b = 1; b <= max_radix; ++b) {
      FactorizationReport rep = unique_factorization_check(n, a, b, twist);
      if (!rep.ok) return rep;
    }
  FactorizationReport rep;
  rep.a = max_radix;
  rep.b = max_radix;
  return rep;
}

}  // namespace ruffles
