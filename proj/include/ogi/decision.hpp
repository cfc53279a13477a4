#pragma once

// Deciding whether L(A) ← L(A) ⊆ L(A) for a DFA A.
//
// B = ogi_nfa(A, A) has 3·n² + 2·n states, the complement of A has at most
// n + 1, and emptiness of L(B) ∩ L(Ā) is a reachability question on their
// product. Nothing on this path is determinised, so the whole check is
// polynomial in n.

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ogi/alphabet.hpp"
#include "ogi/closure.hpp"
#include "ogi/constructions.hpp"
#include "ogi/error.hpp"
#include "ogi/nfa.hpp"
#include "ogi/string_ops.hpp"

namespace ogi {

struct ClosureVerdict {
  bool closed = true;
  /// A shortest (then least) string of (L ← L) \ L.
  std::optional<SymbolString> witness;
  std::optional<SymbolString> target;    // x ∈ L
  std::optional<SymbolString> inserted;  // y ∈ L
  std::optional<Decomposition> decomposition;

  std::size_t dfa_states = 0;
  std::size_t insertion_states = 0;  // emitted states of ogi_nfa(A, A)
  std::size_t insertion_formula_states = 0;
  std::size_t complement_states = 0;
  std::size_t product_states = 0;
};

struct WitnessExplanation {
  SymbolString target;
  SymbolString inserted;
  Decomposition decomposition;
};

/// The least (target, inserted, split) with target, inserted ∈ L(A) whose
/// outfix-guided insertion yields w. Operands are never longer than w, so
/// splitting w is exhaustive.
inline std::optional<WitnessExplanation> explain_insertion(const Nfa& a, const SymbolString& w) {
  std::optional<std::tuple<SymbolString, SymbolString, Split>> best;
  auto member = [&](std::string_view s) {
    return accepts(a, SymbolString::from_bytes(std::string(s)));
  };
  detail::for_each_preimage(OpKind::ogi, w, member,
                            [&](const SymbolString& x, const SymbolString& y, const Split& s) {
                              auto cand = std::make_tuple(x, y, s);
                              if (!best || cand < *best) best = std::move(cand);
                            });
  if (!best) return std::nullopt;
  const auto& [x, y, s] = *best;
  return WitnessExplanation{x, y, decompose(OpKind::ogi, x, y, s)};
}

/// True iff w ∉ L(A) and w ∈ x ← y for some x, y ∈ L(A).
inline bool validate_witness(const Dfa& a, const SymbolString& w) {
  if (accepts(a, w)) return false;
  return explain_insertion(a.nfa(), w).has_value();
}

inline ClosureVerdict is_og_closed_dfa(const Dfa& a) {
  ClosureVerdict v;
  v.dfa_states = a.num_states();
  Construction b = ogi_construction(a.nfa(), a.nfa());
  v.insertion_states = b.stats.emitted_states;
  v.insertion_formula_states = b.stats.formula_states;
  const Dfa comp = complement(a);
  v.complement_states = comp.num_states();
  const Nfa product = intersect(b.nfa, comp.nfa());
  v.product_states = product.num_states();
  const EmptinessResult e = is_empty(product);
  if (e.empty) return v;
  v.closed = false;
  v.witness = *e.witness;
  if (auto ex = explain_insertion(a.nfa(), *e.witness)) {
    v.target = ex->target;
    v.inserted = ex->inserted;
    v.decomposition = ex->decomposition;
  }
  return v;
}

/// Accepts an arbitrary automaton. Nondeterministic input is rejected unless
/// `force_determinize` is set, in which case the subset construction (worst
/// case exponential) runs first.
inline ClosureVerdict is_og_closed(const Nfa& a, bool force_determinize = false) {
  if (a.is_deterministic()) return is_og_closed_dfa(Dfa(a));
  if (!force_determinize)
    throw NondeterministicInput(
        "og-closure is decided for deterministic automata; determinise explicitly to proceed");
  return is_og_closed_dfa(determinize(a));
}

}  // namespace ogi
