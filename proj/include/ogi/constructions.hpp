#pragma once

// Automata for insertion languages.
//
// ogi_nfa(A, B) recognises L(A) ← L(B) with a five-phase product: the outer
// automaton A reads x1 alone (scan), reads the matched prefix u together with
// the inserted-language automaton B (both), pauses while B reads z (inner),
// reads the matched suffix v together with B again (tail) and finally reads x2
// alone (done). The phases give the state space
//
//   Q × {scan, done}  ∪  (Q × P) × {both, inner, tail}
//
// of size 3·|Q|·|P| + 2·|Q|.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ogi/alphabet.hpp"
#include "ogi/error.hpp"
#include "ogi/nfa.hpp"

namespace ogi {

enum class Phase : std::uint8_t { scan, both, inner, tail, done };

/// A state of the insertion product. `p` is unused for scan and done.
struct PhaseState {
  Phase phase = Phase::scan;
  StateId q = 0;
  StateId p = 0;
};

/// Size and rule statistics of a product construction.
struct ConstructionStats {
  /// Size of the full state space, before reachability pruning.
  std::size_t formula_states = 0;
  std::size_t emitted_states = 0;
  std::size_t emitted_transitions = 0;
  /// Emitted transitions per rule family (i)..(v).
  std::array<std::size_t, 5> rule_transitions{};

  std::vector<std::string> comments(const std::string& label) const {
    std::vector<std::string> out;
    out.push_back(label);
    out.push_back("formula-states: " + std::to_string(formula_states));
    out.push_back("emitted-states: " + std::to_string(emitted_states));
    out.push_back("emitted-transitions: " + std::to_string(emitted_transitions));
    static constexpr const char* kRule[] = {"i", "ii", "iii", "iv", "v"};
    for (std::size_t r = 0; r < 5; ++r)
      out.push_back(std::string("rule-") + kRule[r] + "-transitions: " +
                    std::to_string(rule_transitions[r]));
    return out;
  }
};

struct Construction {
  Nfa nfa;
  ConstructionStats stats;
};

struct ProductOptions {
  /// Drop states unreachable from the initial state. When false the whole
  /// state space is materialised, in layout order.
  bool prune = true;
};

namespace detail {

inline constexpr StateId kUnmapped = static_cast<StateId>(-1);

/// Dense numbering of the product state space. Variants without a tail phase
/// (prefix-guided insertion) have 2·|Q|·|P| + 2·|Q| states.
class PhaseLayout {
 public:
  PhaseLayout(std::size_t nq, std::size_t np, bool with_tail)
      : nq_(nq), np_(np), with_tail_(with_tail) {}

  std::size_t size() const { return 2 * nq_ + (with_tail_ ? 3 : 2) * nq_ * np_; }

  std::size_t index(const PhaseState& s) const {
    switch (s.phase) {
      case Phase::scan: return s.q;
      case Phase::done: return nq_ + s.q;
      case Phase::both: return 2 * nq_ + s.q * np_ + s.p;
      case Phase::inner: return 2 * nq_ + nq_ * np_ + s.q * np_ + s.p;
      case Phase::tail: return 2 * nq_ + 2 * nq_ * np_ + s.q * np_ + s.p;
    }
    return 0;
  }

  PhaseState decode(std::size_t id) const {
    if (id < nq_) return {Phase::scan, static_cast<StateId>(id), 0};
    if (id < 2 * nq_) return {Phase::done, static_cast<StateId>(id - nq_), 0};
    id -= 2 * nq_;
    const Phase phases[] = {Phase::both, Phase::inner, Phase::tail};
    const Phase ph = phases[id / (nq_ * np_)];
    id %= nq_ * np_;
    return {ph, static_cast<StateId>(id / np_), static_cast<StateId>(id % np_)};
  }

 private:
  std::size_t nq_, np_;
  bool with_tail_;
};

inline std::string phase_name(const Nfa& a, const Nfa& b, const PhaseState& s) {
  switch (s.phase) {
    case Phase::scan: return "[" + a.name(s.q) + "|club]";
    case Phase::done: return "[" + a.name(s.q) + "|heart]";
    case Phase::both: return "[" + a.name(s.q) + "|" + b.name(s.p) + "]";
    case Phase::inner: return "[~" + a.name(s.q) + "|" + b.name(s.p) + "]";
    case Phase::tail: return "[" + a.name(s.q) + "|~" + b.name(s.p) + "]";
  }
  return "?";
}

struct Edge {
  PhaseState to;
  std::uint8_t rule;  // 0-based rule family
};

/// Materialises a phase product given its successor and acceptance functions.
template <class Successors, class IsFinal>
Construction build_phase_product(const Nfa& a, const Nfa& b, const PhaseLayout& layout,
                                 const ProductOptions& opt, Successors&& successors,
                                 IsFinal&& is_final) {
  Construction out{Nfa(a.alphabet()), {}};
  out.stats.formula_states = layout.size();
  std::vector<StateId> map(layout.size(), kUnmapped);
  std::deque<std::size_t> queue;
  auto intern = [&](const PhaseState& s) {
    const std::size_t id = layout.index(s);
    if (map[id] == kUnmapped) {
      map[id] = out.nfa.add_state(phase_name(a, b, s), is_final(s));
      queue.push_back(id);
    }
    return map[id];
  };
  const PhaseState start{Phase::scan, a.initial(), 0};
  if (!opt.prune) {
    for (std::size_t id = 0; id < layout.size(); ++id) intern(layout.decode(id));
  }
  out.nfa.set_initial(intern(start));
  std::vector<Edge> edges;
  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    const PhaseState s = layout.decode(id);
    for (Symbol c = 0; c < a.alphabet().size(); ++c) {
      edges.clear();
      successors(s, c, edges);
      for (const Edge& e : edges) {
        const std::size_t before = out.nfa.targets(map[id], c).size();
        out.nfa.add_transition(map[id], c, intern(e.to));
        if (out.nfa.targets(map[id], c).size() != before) ++out.stats.rule_transitions[e.rule];
      }
    }
  }
  out.stats.emitted_states = out.nfa.num_states();
  out.stats.emitted_transitions = out.nfa.num_transitions();
  return out;
}

}  // namespace detail

/// Automaton for L(A) ← L(B) (outfix-guided insertion).
inline Construction ogi_construction(const Nfa& a, const Nfa& b, ProductOptions opt = {}) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  const detail::PhaseLayout layout(a.num_states(), b.num_states(), true);
  const StateId p0 = b.initial();
  auto successors = [&](const PhaseState& s, Symbol c, std::vector<detail::Edge>& out) {
    using P = Phase;
    switch (s.phase) {
      case P::scan:  // (i)
        for (StateId q2 : a.targets(s.q, c)) {
          out.push_back({{P::scan, q2, 0}, 0});
          for (StateId p2 : b.targets(p0, c)) out.push_back({{P::both, q2, p2}, 0});
        }
        break;
      case P::both:  // (ii)
        for (StateId p2 : b.targets(s.p, c)) {
          for (StateId q2 : a.targets(s.q, c)) {
            out.push_back({{P::both, q2, p2}, 1});
            out.push_back({{P::tail, q2, p2}, 1});
          }
          out.push_back({{P::inner, s.q, p2}, 1});
        }
        break;
      case P::inner:  // (iii)
        for (StateId p2 : b.targets(s.p, c)) {
          out.push_back({{P::inner, s.q, p2}, 2});
          for (StateId q2 : a.targets(s.q, c)) out.push_back({{P::tail, q2, p2}, 2});
        }
        break;
      case P::tail:  // (iv)
        for (StateId q2 : a.targets(s.q, c)) {
          for (StateId p2 : b.targets(s.p, c)) out.push_back({{P::tail, q2, p2}, 3});
          if (b.is_final(s.p)) out.push_back({{P::done, q2, 0}, 3});
        }
        break;
      case P::done:  // (v)
        for (StateId q2 : a.targets(s.q, c)) out.push_back({{P::done, q2, 0}, 4});
        break;
    }
  };
  auto is_final = [&](const PhaseState& s) {
    if (s.phase == Phase::tail) return a.is_final(s.q) && b.is_final(s.p);
    if (s.phase == Phase::done) return a.is_final(s.q);
    return false;
  };
  return detail::build_phase_product(a, b, layout, opt, successors, is_final);
}

inline Nfa ogi_nfa(const Nfa& a, const Nfa& b) { return ogi_construction(a, b).nfa; }

/// Automaton for L(A) pgi← L(B). Phases: scan (x1), both (the matched prefix
/// y1, read by A and B), inner (the rest y2 of y, read by B while A waits),
/// done (x2). Leaving both/inner for done requires B to accept. Rule
/// families: (i) scan, (ii) both, (iii) inner, (iv) entering done, (v) done.
inline Construction pgi_construction(const Nfa& a, const Nfa& b, ProductOptions opt = {}) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  const detail::PhaseLayout layout(a.num_states(), b.num_states(), false);
  const StateId p0 = b.initial();
  auto successors = [&](const PhaseState& s, Symbol c, std::vector<detail::Edge>& out) {
    using P = Phase;
    switch (s.phase) {
      case P::scan:
        for (StateId q2 : a.targets(s.q, c)) {
          out.push_back({{P::scan, q2, 0}, 0});
          for (StateId p2 : b.targets(p0, c)) out.push_back({{P::both, q2, p2}, 0});
        }
        break;
      case P::both:
        for (StateId p2 : b.targets(s.p, c)) {
          for (StateId q2 : a.targets(s.q, c)) out.push_back({{P::both, q2, p2}, 1});
          out.push_back({{P::inner, s.q, p2}, 1});
        }
        if (b.is_final(s.p))
          for (StateId q2 : a.targets(s.q, c)) out.push_back({{P::done, q2, 0}, 3});
        break;
      case P::inner:
        for (StateId p2 : b.targets(s.p, c)) out.push_back({{P::inner, s.q, p2}, 2});
        if (b.is_final(s.p))
          for (StateId q2 : a.targets(s.q, c)) out.push_back({{P::done, q2, 0}, 3});
        break;
      case P::done:
        for (StateId q2 : a.targets(s.q, c)) out.push_back({{P::done, q2, 0}, 4});
        break;
      case P::tail:
        break;
    }
  };
  auto is_final = [&](const PhaseState& s) {
    if (s.phase == Phase::both || s.phase == Phase::inner)
      return a.is_final(s.q) && b.is_final(s.p);
    if (s.phase == Phase::done) return a.is_final(s.q);
    return false;
  };
  return detail::build_phase_product(a, b, layout, opt, successors, is_final);
}

inline Nfa pgi_nfa(const Nfa& a, const Nfa& b) { return pgi_construction(a, b).nfa; }

/// L(A) sgi← L(B) = reverse(reverse(L(A)) pgi← reverse(L(B))).
inline Construction sgi_construction(const Nfa& a, const Nfa& b, ProductOptions opt = {}) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  Construction c = pgi_construction(reverse(a), reverse(b), opt);
  c.nfa = reverse(c.nfa);
  c.stats.emitted_states = c.nfa.num_states();
  c.stats.emitted_transitions = c.nfa.num_transitions();
  return c;
}

inline Nfa sgi_nfa(const Nfa& a, const Nfa& b) { return sgi_construction(a, b).nfa; }

enum class IterationMode { ogi_general, rogi, logi };

inline std::string_view to_string(IterationMode m) {
  switch (m) {
    case IterationMode::ogi_general: return "ogi-general";
    case IterationMode::rogi: return "rogi";
    case IterationMode::logi: return "logi";
  }
  return "?";
}

struct IterationOptions {
  /// Between stages: trim, determinise and renumber the intermediate automaton.
  bool compact = false;
};

struct Iteration {
  Nfa nfa;
  std::vector<ConstructionStats> stages;
};

/// Trim, subset construction, trim again, states renamed d0, d1, ...
inline Nfa compact(const Nfa& a) {
  return renumbered(trim(determinize(trim(a)).nfa()), "d");
}

/// Stage k of the iterated insertion:
///   ogi-general: S0 = L(A),  S(i+1) = S(i) ← S(i)
///   rogi:        S0 = L(B),  S(i+1) = L(A) ← S(i)
///   logi:        S0 = L(A),  S(i+1) = S(i) ← L(B)
inline Iteration iterate_nfa(IterationMode mode, const Nfa& a, const Nfa* b, std::size_t k,
                             IterationOptions opt = {}) {
  if (mode == IterationMode::ogi_general && b)
    throw InvalidArgument("ogi-general iteration takes a single operand");
  if (mode != IterationMode::ogi_general && !b)
    throw InvalidArgument(std::string(to_string(mode)) + " iteration needs two operands");
  if (b) require_same_alphabet(a.alphabet(), b->alphabet());

  Iteration out{mode == IterationMode::rogi ? *b : a, {}};
  for (std::size_t i = 0; i < k; ++i) {
    Construction c = [&] {
      switch (mode) {
        case IterationMode::ogi_general: return ogi_construction(out.nfa, out.nfa);
        case IterationMode::rogi: return ogi_construction(a, out.nfa);
        case IterationMode::logi: return ogi_construction(out.nfa, *b);
      }
      throw InvalidArgument("unknown iteration mode");
    }();
    out.stages.push_back(c.stats);
    out.nfa = opt.compact ? compact(c.nfa) : std::move(c.nfa);
  }
  return out;
}

struct ClosureNfaOptions {
  /// Abort once this many subset states have been created.
  std::size_t state_cap = 4096;
};

/// Automaton for the 2-overlap catenation closure of L(A).
///
/// A is first made deterministic and trim. States are non-empty subsets of
/// its states, one element per simulated factor run; every run must continue.
/// On symbol b a subset P moves to (δ(P,b) − X) ∪ Y for any X ⊆ F and any
/// Y ⊆ δ(q0,b) with δ(P,b) − X ≠ ∅: X retires runs that end a catenated
/// factor, Y starts new ones, and at least one older run must survive so
/// overlaps are at least two symbols long. Final states are the non-empty
/// subsets of F. Successors are generated lazily during exploration.
inline Construction oc2_closure_construction(const Nfa& input, ClosureNfaOptions opt = {}) {
  // One state per factor run needs a deterministic, trim operand.
  const Nfa a = compact(input);
  Construction out{Nfa(a.alphabet()), {}};
  std::map<StateSet, StateId> index;
  std::deque<StateSet> queue;
  auto subset_name = [&](const StateSet& s) {
    std::string n = "{";
    for (std::size_t i = 0; i < s.size(); ++i) n += (i ? "," : "") + a.name(s[i]);
    return n + "}";
  };
  auto all_final = [&](const StateSet& s) {
    return std::all_of(s.begin(), s.end(), [&](StateId q) { return a.is_final(q); });
  };
  auto intern = [&](const StateSet& s) {
    auto [it, fresh] = index.emplace(s, 0);
    if (fresh) {
      if (index.size() > opt.state_cap)
        throw LimitExceeded("2-overlap closure automaton exceeds " +
                            std::to_string(opt.state_cap) + " subset states");
      it->second = out.nfa.add_state(subset_name(s), all_final(s));
      queue.push_back(s);
    }
    return it->second;
  };
  out.nfa.set_initial(intern({a.initial()}));

  while (!queue.empty()) {
    const StateSet from = queue.front();
    queue.pop_front();
    const StateId from_id = index.at(from);
    for (Symbol c = 0; c < a.alphabet().size(); ++c) {
      // A run may only end through retirement in a final state.
      if (std::any_of(from.begin(), from.end(),
                      [&](StateId q) { return a.targets(q, c).empty(); }))
        continue;
      const StateSet moved = a.step(from, c);
      StateSet removable;
      for (StateId q : moved)
        if (a.is_final(q)) removable.push_back(q);
      const StateSet& starts = a.targets(a.initial(), c);
      if (removable.size() + starts.size() > 24)
        throw LimitExceeded("2-overlap closure successor fan-out too large");
      std::set<StateSet> successors;
      for (std::uint32_t xm = 0; xm < (1u << removable.size()); ++xm) {
        StateSet kept;
        for (StateId q : moved) {
          auto pos = std::lower_bound(removable.begin(), removable.end(), q);
          const bool removed = pos != removable.end() && *pos == q &&
                               (xm >> (pos - removable.begin()) & 1u);
          if (!removed) kept.push_back(q);
        }
        if (kept.empty()) continue;
        for (std::uint32_t ym = 0; ym < (1u << starts.size()); ++ym) {
          StateSet t = kept;
          for (std::size_t i = 0; i < starts.size(); ++i)
            if (ym >> i & 1u) t.push_back(starts[i]);
          std::sort(t.begin(), t.end());
          t.erase(std::unique(t.begin(), t.end()), t.end());
          successors.insert(std::move(t));
        }
      }
      for (const auto& t : successors) out.nfa.add_transition(from_id, c, intern(t));
    }
  }
  out.stats.formula_states = std::size_t{1} << std::min<std::size_t>(a.num_states(), 63);
  out.stats.emitted_states = out.nfa.num_states();
  out.stats.emitted_transitions = out.nfa.num_transitions();
  return out;
}

inline Nfa oc2_closure_nfa(const Nfa& a, ClosureNfaOptions opt = {}) {
  return oc2_closure_construction(a, opt).nfa;
}

/// OGI*(L(A)) for a unary alphabet, where it coincides with the 2-overlap
/// catenation closure.
inline Nfa unary_ogi_closure_nfa(const Nfa& a, ClosureNfaOptions opt = {}) {
  if (a.alphabet().size() != 1)
    throw InvalidArgument("unary closure needs a one-symbol alphabet, got " +
                          std::to_string(a.alphabet().size()) + " symbols");
  return oc2_closure_nfa(a, opt);
}

}  // namespace ogi
