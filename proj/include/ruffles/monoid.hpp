#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ruffles/parallel.hpp"

namespace ruffles {

// Machinery for a group G acting on a monoid M on the right by
// automorphisms, and for maps gamma: M -> G reacting to that action.
// Everything is passed as plain function objects:
//
//   act(m, g)  -> M    the action
//   mmul(m, n) -> M    the monoid product
//   gmul(g, h) -> G    the group product (natural order)
//   gamma(m)   -> G    the reaction candidate
//
// The same checkers serve every concrete instantiation (riffle, ruffle,
// oriented ruffle, directed ruffle).

template <class G, class M>
struct SemidirectElement {
  G g;
  M m;
  auto operator<=>(const SemidirectElement&) const = default;
};

// (g,m)(h,n) = (gh, m^h n).
template <class G, class M, class GMul, class Act, class MMul>
SemidirectElement<G, M> semidirect_compose(GMul&& gmul, Act&& act, MMul&& mmul,
                                           const SemidirectElement<G, M>& x,
                                           const SemidirectElement<G, M>& y) {
  return {gmul(x.g, y.g), mmul(act(x.m, y.g), y.m)};
}

// m *_gamma n = m^{gamma[n]} n.
template <class M, class Act, class MMul, class Gamma>
M twisted_product(Act&& act, MMul&& mmul, Gamma&& gamma, const M& m, const M& n) {
  return mmul(act(m, gamma(n)), n);
}

template <class M>
struct ReactionCounterexample {
  M m;
  M n;
};

// Verifies gamma[m] gamma[n] = gamma[m^{gamma[n]} n] for every ordered pair
// (m, n) in left x right. Returns the counterexample least in enumeration
// order (row-major over the two lists), independent of the worker count.
template <class M, class GMul, class Act, class MMul, class Gamma>
std::optional<ReactionCounterexample<M>> check_reaction(GMul gmul, Act act, MMul mmul, Gamma gamma,
                                                        const std::vector<M>& left,
                                                        const std::vector<M>& right,
                                                        int workers = 1) {
  const std::int64_t total = static_cast<std::int64_t>(left.size()) *
                             static_cast<std::int64_t>(right.size());
  if (total == 0) return std::nullopt;
  const std::int64_t cols = static_cast<std::int64_t>(right.size());
  std::vector<std::int64_t> first_bad(static_cast<std::size_t>(workers > 1 ? workers : 1), total);
  run_partitioned(total, workers, [&](int w, std::int64_t begin, std::int64_t end) {
    for (std::int64_t k = begin; k < end; ++k) {
      const M& m = left[static_cast<std::size_t>(k / cols)];
      const M& n = right[static_cast<std::size_t>(k % cols)];
      const auto gn = gamma(n);
      if (!(gmul(gamma(m), gn) == gamma(mmul(act(m, gn), n)))) {
        first_bad[static_cast<std::size_t>(w)] = k;
        break;  // chunk scans ascending, so this is the chunk minimum
      }
    }
  });
  std::int64_t best = total;
  for (std::int64_t k : first_bad) best = std::min(best, k);
  if (best == total) return std::nullopt;
  return ReactionCounterexample<M>{left[static_cast<std::size_t>(best / cols)],
                                   right[static_cast<std::size_t>(best % cols)]};
}

enum class ActionAxiom { identity_fixes, compatibility, automorphism };

template <class M, class G>
struct ActionCounterexample {
  ActionAxiom axiom{};
  M m{};
  M n{};  // automorphism law only
  G g{};
  G h{};  // compatibility law only
};

// Checks m^e = m, (m^g)^h = m^{gh} and (mn)^g = m^g n^g over the supplied
// samples, in a fixed deterministic order.
template <class M, class G, class GMul, class Act, class MMul>
std::optional<ActionCounterexample<M, G>> check_action_axioms(GMul gmul, Act act, MMul mmul,
                                                              const std::vector<G>& group_elems,
                                                              const G& group_identity,
                                                              const std::vector<M>& monoid_elems) {
  for (const M& m : monoid_elems)
    if (!(act(m, group_identity) == m))
      return ActionCounterexample<M, G>{ActionAxiom::identity_fixes, m, m, group_identity,
                                        group_identity};
  for (const M& m : monoid_elems)
    for (const G& g : group_elems)
      for (const G& h : group_elems)
        if (!(act(act(m, g), h) == act(m, gmul(g, h))))
          return ActionCounterexample<M, G>{ActionAxiom::compatibility, m, m, g, h};
  for (const M& m : monoid_elems)
    for (const M& n : monoid_elems)
      for (const G& g : group_elems)
        if (!(act(mmul(m, n), g) == mmul(act(m, g), act(n, g))))
          return ActionCounterexample<M, G>{ActionAxiom::automorphism, m, n, g, g};
  return std::nullopt;
}

// Direct associativity scan of the twisted product over three element lists.
template <class M, class Act, class MMul, class Gamma>
std::optional<std::array<M, 3>> check_twisted_associativity(Act act, MMul mmul, Gamma gamma,
                                                            const std::vector<M>& as,
                                                            const std::vector<M>& bs,
                                                            const std::vector<M>& cs) {
  auto star = [&](const M& x, const M& y) { return twisted_product(act, mmul, gamma, x, y); };
  for (const M& a : as)
    for (const M& b : bs) {
      const M ab = star(a, b);
      for (const M& c : cs)
        if (!(star(ab, c) == star(a, star(b, c)))) return std::array<M, 3>{a, b, c};
    }
  return std::nullopt;
}

}  // namespace ruffles
