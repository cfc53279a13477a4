#pragma once

// ε-free finite automata.
//
// States are dense indices with a display name each. Transitions are stored
// per state and symbol as sorted, duplicate-free target lists, so an Nfa is
// deterministic exactly when every list has at most one entry.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ogi/alphabet.hpp"
#include "ogi/error.hpp"
#include "ogi/lang_fragment.hpp"

namespace ogi {

using StateId = std::uint32_t;
using StateSet = std::vector<StateId>;  // sorted, unique

class Nfa {
 public:
  explicit Nfa(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return names_.size(); }
  StateId initial() const {
    if (names_.empty()) throw InvalidArgument("automaton has no states");
    return initial_;
  }
  bool is_final(StateId q) const { return finals_.at(q); }
  const std::string& name(StateId q) const { return names_.at(q); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  const StateSet& targets(StateId q, Symbol a) const { return delta_.at(q).at(a); }

  std::size_t num_transitions() const {
    std::size_t n = 0;
    for (const auto& row : delta_)
      for (const auto& t : row) n += t.size();
    return n;
  }

  StateId add_state(std::string name, bool final = false) {
    names_.push_back(std::move(name));
    finals_.push_back(final);
    delta_.emplace_back(alphabet_.size());
    return static_cast<StateId>(names_.size() - 1);
  }

  void set_initial(StateId q) {
    check_state(q);
    initial_ = q;
  }
  void set_final(StateId q, bool final = true) {
    check_state(q);
    finals_[q] = final;
  }

  void add_transition(StateId from, Symbol a, StateId to) {
    check_state(from);
    check_state(to);
    if (a >= alphabet_.size()) throw InvalidArgument("transition symbol outside alphabet");
    auto& t = delta_[from][a];
    auto it = std::lower_bound(t.begin(), t.end(), to);
    if (it == t.end() || *it != to) t.insert(it, to);
  }

  bool is_deterministic() const {
    for (const auto& row : delta_)
      for (const auto& t : row)
        if (t.size() > 1) return false;
    return true;
  }

  /// δ(S, a) for a sorted state set S.
  StateSet step(const StateSet& from, Symbol a) const {
    StateSet out;
    for (StateId q : from) {
      const auto& t = delta_[q][a];
      out.insert(out.end(), t.begin(), t.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool any_final(const StateSet& s) const {
    return std::any_of(s.begin(), s.end(), [&](StateId q) { return finals_[q]; });
  }

 private:
  void check_state(StateId q) const {
    if (q >= names_.size()) throw InvalidArgument("state index out of range");
  }

  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::vector<bool> finals_;
  std::vector<std::vector<StateSet>> delta_;
  StateId initial_ = 0;
};

/// An Nfa validated to have at most one successor per (state, symbol).
class Dfa {
 public:
  /// Throws NondeterministicInput when `nfa` has a branching transition.
  explicit Dfa(Nfa nfa) : nfa_(std::move(nfa)) {
    if (!nfa_.is_deterministic()) throw NondeterministicInput("automaton is not deterministic");
    complete_ = compute_complete();
  }

  const Nfa& nfa() const noexcept { return nfa_; }
  const Alphabet& alphabet() const noexcept { return nfa_.alphabet(); }
  std::size_t num_states() const noexcept { return nfa_.num_states(); }

  /// True when the transition function is total.
  bool complete() const noexcept { return complete_; }

  std::optional<StateId> next(StateId q, Symbol a) const {
    const auto& t = nfa_.targets(q, a);
    if (t.empty()) return std::nullopt;
    return t.front();
  }

 private:
  bool compute_complete() const {
    for (StateId q = 0; q < nfa_.num_states(); ++q)
      for (Symbol a = 0; a < nfa_.alphabet().size(); ++a)
        if (nfa_.targets(q, a).empty()) return false;
    return true;
  }

  Nfa nfa_;
  bool complete_ = false;
};

namespace detail {

inline std::string unique_name(const Nfa& a, std::string base) {
  const auto& names = a.names();
  std::string name = base;
  for (int k = 1; std::find(names.begin(), names.end(), name) != names.end(); ++k)
    name = base + "'" + std::to_string(k);
  return name;
}

/// States from which some final state is reachable.
inline std::vector<bool> coreachable(const Nfa& a) {
  const std::size_t n = a.num_states();
  std::vector<std::vector<StateId>> preds(n);
  for (StateId q = 0; q < n; ++q)
    for (Symbol s = 0; s < a.alphabet().size(); ++s)
      for (StateId t : a.targets(q, s)) preds[t].push_back(q);
  std::vector<bool> seen(n, false);
  std::vector<StateId> stack;
  for (StateId q = 0; q < n; ++q)
    if (a.is_final(q)) {
      seen[q] = true;
      stack.push_back(q);
    }
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    for (StateId p : preds[q])
      if (!seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
  }
  return seen;
}

}  // namespace detail

/// w ∈ L(A), by forward propagation of the reachable state set.
inline bool accepts(const Nfa& a, const SymbolString& w) {
  if (!a.alphabet().contains(w)) throw InvalidArgument("input string uses symbols outside the alphabet");
  if (a.num_states() == 0) return false;
  StateSet cur{a.initial()};
  for (std::size_t i = 0; i < w.size() && !cur.empty(); ++i) cur = a.step(cur, w[i]);
  return a.any_final(cur);
}

inline bool accepts(const Dfa& d, const SymbolString& w) { return accepts(d.nfa(), w); }

/// L(A) ∩ Σ^{≤n}, computed layer by layer over (string, state set) pairs.
/// State sets are restricted to co-reachable states so dead branches are cut.
inline LangFragment enumerate_upto(const Nfa& a, std::size_t n) {
  LangFragment out(a.alphabet(), n);
  if (a.num_states() == 0) return out;
  const auto live = detail::coreachable(a);
  auto prune = [&](StateSet s) {
    s.erase(std::remove_if(s.begin(), s.end(), [&](StateId q) { return !live[q]; }), s.end());
    return s;
  };
  std::vector<std::pair<SymbolString, StateSet>> layer;
  if (auto s0 = prune({a.initial()}); !s0.empty()) layer.emplace_back(SymbolString{}, std::move(s0));
  for (std::size_t len = 0;; ++len) {
    for (const auto& [w, s] : layer)
      if (a.any_final(s)) out.insert(w);
    if (len == n) break;
    std::vector<std::pair<SymbolString, StateSet>> next;
    for (const auto& [w, s] : layer) {
      for (Symbol c = 0; c < a.alphabet().size(); ++c) {
        StateSet t = prune(a.step(s, c));
        if (t.empty()) continue;
        SymbolString wc = w;
        wc.push_back(c);
        next.emplace_back(std::move(wc), std::move(t));
      }
    }
    if (next.empty()) break;
    layer = std::move(next);
  }
  return out;
}

/// Trie automaton accepting exactly `strings`. States are numbered q0, q1, ...
/// in shortlex order of the prefixes they represent.
inline Nfa from_strings(const Alphabet& alphabet, const StringSet& strings) {
  Nfa a(alphabet);
  std::map<SymbolString, StateId> node;  // shortlex-ordered prefixes
  StringSet prefixes;
  for (const auto& w : strings) {
    if (!alphabet.contains(w)) throw InvalidArgument("string uses symbols outside the alphabet");
    for (std::size_t k = 0; k <= w.size(); ++k) prefixes.insert(w.substr(0, k));
  }
  if (prefixes.empty()) prefixes.insert(SymbolString{});
  for (const auto& p : prefixes) {
    node[p] = a.add_state("q" + std::to_string(a.num_states()), strings.count(p) != 0);
  }
  a.set_initial(node.at(SymbolString{}));
  for (const auto& [p, id] : node) {
    if (p.empty()) continue;
    a.add_transition(node.at(p.substr(0, p.size() - 1)), p[p.size() - 1], id);
  }
  return a;
}

inline Nfa from_strings(const LangFragment& l) { return from_strings(l.alphabet(), l.strings()); }

/// One-state automaton accepting Σ*.
inline Nfa universal(const Alphabet& alphabet) {
  Nfa a(alphabet);
  StateId q = a.add_state("u", true);
  a.set_initial(q);
  for (Symbol s = 0; s < alphabet.size(); ++s) a.add_transition(q, s, q);
  return a;
}

/// One-state automaton accepting nothing.
inline Nfa empty_language(const Alphabet& alphabet) {
  Nfa a(alphabet);
  a.set_initial(a.add_state("e"));
  return a;
}

/// Sub-automaton on the states reachable from the initial state.
inline Nfa reachable_part(const Nfa& a) {
  Nfa out(a.alphabet());
  if (a.num_states() == 0) return out;
  std::vector<std::optional<StateId>> map(a.num_states());
  std::deque<StateId> queue{a.initial()};
  map[a.initial()] = out.add_state(a.name(a.initial()), a.is_final(a.initial()));
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (Symbol s = 0; s < a.alphabet().size(); ++s)
      for (StateId t : a.targets(q, s)) {
        if (!map[t]) {
          map[t] = out.add_state(a.name(t), a.is_final(t));
          queue.push_back(t);
        }
        out.add_transition(*map[q], s, *map[t]);
      }
  }
  out.set_initial(*map[a.initial()]);
  return out;
}

/// Reachable and co-reachable part. Keeps the initial state even when the
/// language is empty.
inline Nfa trim(const Nfa& a) {
  Nfa r = reachable_part(a);
  if (r.num_states() == 0) return r;
  const auto live = detail::coreachable(r);
  Nfa out(r.alphabet());
  std::vector<std::optional<StateId>> map(r.num_states());
  for (StateId q = 0; q < r.num_states(); ++q)
    if (live[q] || q == r.initial()) map[q] = out.add_state(r.name(q), r.is_final(q));
  for (StateId q = 0; q < r.num_states(); ++q) {
    if (!map[q]) continue;
    for (Symbol s = 0; s < r.alphabet().size(); ++s)
      for (StateId t : r.targets(q, s))
        if (live[t] && map[t]) out.add_transition(*map[q], s, *map[t]);
  }
  out.set_initial(*map[r.initial()]);
  return out;
}

/// Renames states to `prefix`0, `prefix`1, ... in index order.
inline Nfa renumbered(const Nfa& a, const std::string& prefix = "s") {
  Nfa out(a.alphabet());
  for (StateId q = 0; q < a.num_states(); ++q)
    out.add_state(prefix + std::to_string(q), a.is_final(q));
  for (StateId q = 0; q < a.num_states(); ++q)
    for (Symbol s = 0; s < a.alphabet().size(); ++s)
      for (StateId t : a.targets(q, s)) out.add_transition(q, s, t);
  if (a.num_states()) out.set_initial(a.initial());
  return out;
}

/// Automaton for the reversal of L(A). A fresh initial state takes over the
/// first step of every reversed accepting path, so no ε-edges are needed.
inline Nfa reverse(const Nfa& a) {
  Nfa out(a.alphabet());
  if (a.num_states() == 0) return out;
  for (StateId q = 0; q < a.num_states(); ++q) out.add_state(a.name(q), q == a.initial());
  const StateId start =
      out.add_state(detail::unique_name(a, "rev"), a.is_final(a.initial()));
  out.set_initial(start);
  for (StateId q = 0; q < a.num_states(); ++q)
    for (Symbol s = 0; s < a.alphabet().size(); ++s)
      for (StateId t : a.targets(q, s)) {
        out.add_transition(t, s, q);
        if (a.is_final(t)) out.add_transition(start, s, q);
      }
  return out;
}

/// Subset construction over reachable non-empty subsets. A subset is named by
/// its members' names sorted lexicographically and joined with '+'. The
/// result is partial: the empty subset is never materialised.
inline Dfa determinize(const Nfa& a) {
  Nfa out(a.alphabet());
  if (a.num_states() == 0) return Dfa(std::move(out));
  auto name_of = [&](const StateSet& s) {
    std::vector<std::string> ns;
    for (StateId q : s) ns.push_back(a.name(q));
    std::sort(ns.begin(), ns.end());
    std::string name;
    for (const auto& n : ns) name += (name.empty() ? "" : "+") + n;
    return name;
  };
  std::map<StateSet, StateId> index;
  std::deque<StateSet> queue;
  auto intern = [&](const StateSet& s) {
    auto [it, fresh] = index.emplace(s, 0);
    if (fresh) {
      it->second = out.add_state(name_of(s), a.any_final(s));
      queue.push_back(s);
    }
    return it->second;
  };
  out.set_initial(intern({a.initial()}));
  while (!queue.empty()) {
    StateSet s = queue.front();
    queue.pop_front();
    const StateId from = index.at(s);
    for (Symbol c = 0; c < a.alphabet().size(); ++c) {
      StateSet t = a.step(s, c);
      if (t.empty()) continue;
      out.add_transition(from, c, intern(t));
    }
  }
  return Dfa(std::move(out));
}

/// Copy of D with a sink state added if δ is partial.
inline Dfa complete(const Dfa& d) {
  if (d.complete() && d.num_states() > 0) return d;
  Nfa out = d.nfa();
  const StateId sink = out.add_state(detail::unique_name(out, "sink"));
  if (d.num_states() == 0) out.set_initial(sink);
  for (StateId q = 0; q < out.num_states(); ++q)
    for (Symbol s = 0; s < out.alphabet().size(); ++s)
      if (out.targets(q, s).empty()) out.add_transition(q, s, sink);
  return Dfa(std::move(out));
}

/// Complete D and swap final and non-final states.
inline Dfa complement(const Dfa& d) {
  Nfa out = complete(d).nfa();
  for (StateId q = 0; q < out.num_states(); ++q) out.set_final(q, !out.is_final(q));
  return Dfa(std::move(out));
}

/// Product automaton over reachable pairs; a pair is named "<p,q>".
inline Nfa intersect(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  Nfa out(a.alphabet());
  if (a.num_states() == 0 || b.num_states() == 0) return empty_language(a.alphabet());
  const std::uint64_t nb = b.num_states();
  std::unordered_map<std::uint64_t, StateId> index;
  std::deque<std::pair<StateId, StateId>> queue;
  auto intern = [&](StateId p, StateId q) {
    auto [it, fresh] = index.emplace(std::uint64_t{p} * nb + q, 0);
    if (fresh) {
      it->second = out.add_state("<" + a.name(p) + "," + b.name(q) + ">",
                                 a.is_final(p) && b.is_final(q));
      queue.emplace_back(p, q);
    }
    return it->second;
  };
  out.set_initial(intern(a.initial(), b.initial()));
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    const StateId from = index.at(std::uint64_t{p} * nb + q);
    for (Symbol c = 0; c < a.alphabet().size(); ++c)
      for (StateId p2 : a.targets(p, c))
        for (StateId q2 : b.targets(q, c)) out.add_transition(from, c, intern(p2, q2));
  }
  return out;
}

/// Result of an emptiness check: `empty` or a shortest accepted string,
/// lexicographically least among the shortest.
struct EmptinessResult {
  bool empty = true;
  std::optional<SymbolString> witness;
};

/// Breadth-first search from the initial state. States sharing a least
/// access string form one group and are expanded together, symbol by symbol,
/// so every layer lists its groups in lexicographic order and the first final
/// state found gives the witness.
inline EmptinessResult is_empty(const Nfa& a) {
  if (a.num_states() == 0) return {};
  if (a.is_final(a.initial())) return {false, SymbolString{}};
  std::vector<bool> seen(a.num_states(), false);
  seen[a.initial()] = true;
  // Each group is (index of parent group, symbol, members).
  struct Group {
    std::size_t parent;
    Symbol symbol;
    std::vector<StateId> states;
  };
  std::vector<Group> groups{{0, 0, {a.initial()}}};
  auto path_to = [&](std::size_t g) {
    SymbolString w;
    for (; g != 0; g = groups[g].parent) w.push_back(groups[g].symbol);
    return w.reversed();
  };
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (Symbol c = 0; c < a.alphabet().size(); ++c) {
      std::vector<StateId> next;
      for (StateId q : groups[g].states)
        for (StateId t : a.targets(q, c)) {
          if (seen[t]) continue;
          seen[t] = true;
          next.push_back(t);
        }
      if (next.empty()) continue;
      groups.push_back({g, c, std::move(next)});
      for (StateId t : groups.back().states)
        if (a.is_final(t)) return {false, path_to(groups.size() - 1)};
    }
  }
  return {};
}

/// Some string in L(A) \ L(B), if any.
inline std::optional<SymbolString> inclusion_counterexample(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  auto r = is_empty(intersect(a, complement(determinize(b)).nfa()));
  return r.witness;
}

inline bool equivalent(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  return !inclusion_counterexample(a, b) && !inclusion_counterexample(b, a);
}

}  // namespace ogi
