#pragma once

// Bounded fixpoints of iterated insertions over finite fragments.
//
// Every insertion result is at least as long as both operands, so the part of
// a closure inside Σ^{≤n} only ever depends on strings inside Σ^{≤n}. The
// cumulative fixpoint S = seed ∪ op(S, S) cut at n is therefore exact. For the
// general mode the union of literal stages agrees with it because strings
// shorter than two symbols are inert and longer ones survive every stage via
// a trivial step.
//
// Strings are processed in shortlex order. A result r that differs from both
// operands is strictly longer than each, so by the time r is popped every
// pair that can produce it has been examined and its provenance (fewest
// steps, then least target, inserted string and split) is final.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ogi/alphabet.hpp"
#include "ogi/error.hpp"
#include "ogi/lang_fragment.hpp"
#include "ogi/string_ops.hpp"

namespace ogi {

/// general: both operands from the closure so far. left: the target comes
/// from the closure, the inserted string from L2. right: the target comes
/// from L1, the inserted string from the closure (seeded with L2).
enum class ClosureMode { general, left, right };

inline std::string_view to_string(ClosureMode m) {
  switch (m) {
    case ClosureMode::general: return "general";
    case ClosureMode::left: return "left";
    case ClosureMode::right: return "right";
  }
  return "?";
}

inline std::optional<ClosureMode> parse_mode(std::string_view name) {
  for (ClosureMode m : {ClosureMode::general, ClosureMode::left, ClosureMode::right})
    if (to_string(m) == name) return m;
  return std::nullopt;
}

struct ClosureSpec {
  OpKind op = OpKind::ogi;
  ClosureMode mode = ClosureMode::general;
  std::size_t bound = 0;
  /// Hard limit on the number of strings in the fixpoint.
  std::size_t string_cap = 200'000;
};

/// One non-trivial step: `result` is obtained by inserting `inserted` into
/// `target` as described by `decomposition`.
struct DerivationStep {
  SymbolString target;
  SymbolString inserted;
  Decomposition decomposition;
  SymbolString result;
};

/// A chain from a seed string to `final`. The chain follows the target in the
/// general and left modes and the inserted string in the right mode.
struct Derivation {
  SymbolString seed;
  std::vector<DerivationStep> steps;
  SymbolString final;
};

/// Checks that every step is a valid `op` insertion and that the steps chain
/// from seed to final.
inline bool replays(const Derivation& d, OpKind op, ClosureMode mode) {
  SymbolString current = d.seed;
  for (const auto& s : d.steps) {
    const SymbolString& along = mode == ClosureMode::right ? s.inserted : s.target;
    if (along != current) return false;
    const Decomposition& dec = s.decomposition;
    if (dec.kind != op || !dec.well_formed()) return false;
    if (dec.target() != s.target || dec.inserted() != s.inserted || dec.result() != s.result)
      return false;
    current = s.result;
  }
  return current == d.final;
}

namespace detail {

inline void validate_operands(const ClosureSpec& spec, const LangFragment& l1,
                              const LangFragment* l2) {
  if (spec.mode == ClosureMode::general) {
    if (l2) throw InvalidArgument("general closure takes a single operand language");
    if (spec.op == OpKind::nol)
      throw InvalidArgument("nol insertion is only iterated one-sidedly (left or right)");
  } else {
    if (!l2) throw InvalidArgument(std::string(to_string(spec.mode)) +
                                   " closure needs two operand languages");
    require_same_alphabet(l1.alphabet(), l2->alphabet());
  }
  auto check = [&](const LangFragment& l) {
    for (const auto& w : l.strings())
      if (w.size() > spec.bound)
        throw InvalidArgument("operand string of length " + std::to_string(w.size()) +
                              " exceeds bound " + std::to_string(spec.bound));
  };
  check(l1);
  if (l2) check(*l2);
}

}  // namespace detail

/// The bounded closure together with per-string provenance.
class ClosureComputation {
 public:
  struct Origin {
    std::size_t depth = 0;  // steps from a seed; 0 for seeds
    SymbolString target;
    SymbolString inserted;
    Split split;
  };

  ClosureComputation(const ClosureSpec& spec, const LangFragment& l1, const LangFragment* l2)
      : spec_(spec), alphabet_(l1.alphabet()) {
    detail::validate_operands(spec, l1, l2);
    const LangFragment& seed = spec.mode == ClosureMode::right ? *l2 : l1;
    std::set<SymbolString> agenda;
    for (const auto& w : seed.strings()) {
      origin_.emplace(w, Origin{});
      agenda.insert(w);
    }
    std::vector<SymbolString> processed;

    auto combine = [&](const SymbolString& x, const SymbolString& y) {
      const SymbolString& along = spec_.mode == ClosureMode::right ? y : x;
      const std::size_t depth = origin_.at(along).depth + 1;
      for_each_split(
          spec_.op, x, y,
          [&](const Split& s) {
            SymbolString r = apply_split(x, y, s);
            // A trivial step adds nothing unless it surfaces an operand from outside S.
            if ((r == x || r == y) && origin_.count(r)) return;
            Origin cand{depth, x, y, s};
            auto it = origin_.find(r);
            if (it == origin_.end()) {
              if (origin_.size() >= spec_.string_cap)
                throw LimitExceeded("closure exceeds the string cap of " +
                                    std::to_string(spec_.string_cap));
              agenda.insert(r);
              origin_.emplace(std::move(r), std::move(cand));
            } else if (better(cand, it->second)) {
              it->second = std::move(cand);
            }
          },
          spec_.bound);
    };

    while (!agenda.empty()) {
      SymbolString s = *agenda.begin();
      agenda.erase(agenda.begin());
      processed.push_back(s);
      switch (spec_.mode) {
        case ClosureMode::general:
          for (const auto& t : processed) {
            combine(s, t);
            if (t != s) combine(t, s);
          }
          break;
        case ClosureMode::left:
          for (const auto& y : l2->strings()) combine(s, y);
          break;
        case ClosureMode::right:
          for (const auto& x : l1.strings()) combine(x, s);
          break;
      }
    }
  }

  const ClosureSpec& spec() const noexcept { return spec_; }

  LangFragment fragment() const {
    StringSet all;
    for (const auto& [w, o] : origin_) all.insert(w);
    return LangFragment(alphabet_, spec_.bound, std::move(all));
  }

  bool contains(const SymbolString& w) const { return origin_.count(w) != 0; }
  std::size_t size() const noexcept { return origin_.size(); }
  const Origin& origin(const SymbolString& w) const { return origin_.at(w); }

  /// Fewest-step derivation of `w`, or nullopt when w is not in the closure.
  std::optional<Derivation> derivation(const SymbolString& w) const {
    auto it = origin_.find(w);
    if (it == origin_.end()) return std::nullopt;
    Derivation d;
    d.final = w;
    SymbolString cur = w;
    while (origin_.at(cur).depth > 0) {
      const Origin& o = origin_.at(cur);
      d.steps.push_back({o.target, o.inserted, decompose(spec_.op, o.target, o.inserted, o.split),
                         cur});
      cur = spec_.mode == ClosureMode::right ? o.inserted : o.target;
    }
    d.seed = cur;
    std::reverse(d.steps.begin(), d.steps.end());
    return d;
  }

 private:
  static bool better(const Origin& a, const Origin& b) {
    return std::tie(a.depth, a.target, a.inserted, a.split) <
           std::tie(b.depth, b.target, b.inserted, b.split);
  }

  ClosureSpec spec_;
  Alphabet alphabet_;
  std::unordered_map<SymbolString, Origin> origin_;
};

/// closure ∩ Σ^{≤bound}. `l2` must be given exactly when the mode is one-sided.
inline LangFragment bounded_closure(const ClosureSpec& spec, const LangFragment& l1,
                                    const LangFragment* l2 = nullptr) {
  return ClosureComputation(spec, l1, l2).fragment();
}

inline LangFragment bounded_closure(const ClosureSpec& spec, const LangFragment& l1,
                                    const LangFragment& l2) {
  return bounded_closure(spec, l1, &l2);
}

/// Stage i by literal recursion (not cumulative), cut at the bound:
///   general: S(i+1) = S(i) op S(i);  left: S(i+1) = S(i) op L2;
///   right:   S(i+1) = L1 op S(i), with S(0) = L2.
inline LangFragment bounded_stage(const ClosureSpec& spec, const LangFragment& l1,
                                  const LangFragment* l2, std::size_t i) {
  detail::validate_operands(spec, l1, l2);
  LangFragment stage = (spec.mode == ClosureMode::right ? *l2 : l1).truncated(spec.bound);
  stage = LangFragment(stage.alphabet(), spec.bound, stage.strings());
  for (std::size_t k = 0; k < i; ++k) {
    switch (spec.mode) {
      case ClosureMode::general: stage = lift(spec.op, stage, stage); break;
      case ClosureMode::left: stage = lift(spec.op, stage, *l2); break;
      case ClosureMode::right: stage = lift(spec.op, l1, stage); break;
    }
    stage = LangFragment(stage.alphabet(), spec.bound, stage.strings());
    if (stage.size() > spec.string_cap)
      throw LimitExceeded("stage exceeds the string cap of " + std::to_string(spec.string_cap));
  }
  return stage;
}

/// Derivation of `target` within the bounded closure, or nullopt when it is
/// not derivable within the bound.
inline std::optional<Derivation> trace(const SymbolString& target, const ClosureSpec& spec,
                                       const LangFragment& l1, const LangFragment* l2 = nullptr) {
  if (target.size() > spec.bound) return std::nullopt;
  return ClosureComputation(spec, l1, l2).derivation(target);
}

/// Result of checking op(L, L) ⊆ L on a fragment.
struct ClosednessCheck {
  bool closed = true;
  std::optional<SymbolString> witness;  // shortest, then least, violating string
  std::optional<SymbolString> target;
  std::optional<SymbolString> inserted;
  std::optional<Decomposition> decomposition;
};

namespace detail {

struct Violation {
  SymbolString w, x, y;
  Split split;
  bool operator<(const Violation& o) const {
    return std::tie(w, x, y, split) < std::tie(o.w, o.x, o.y, o.split);
  }
};

/// Size of Σ^{≤n}, saturating.
inline std::size_t count_upto(std::size_t sigma, std::size_t n) {
  std::size_t total = 0, layer = 1;
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max() / 1024;
  for (std::size_t k = 0; k <= n; ++k) {
    total += layer;
    if (total > kMax || layer > kMax / std::max<std::size_t>(sigma, 1)) return kMax;
    layer *= sigma;
  }
  return total;
}

/// Matched-part shape of `op` for w = x[0,i)·y·x[..] with y = w[i,l),
/// x = w[0,j)·w[k,|w|).
inline std::optional<Split> split_for(OpKind op, std::size_t i, std::size_t j, std::size_t k,
                                      std::size_t l, std::size_t n) {
  switch (op) {
    case OpKind::ogi:
      if (i < j && k < l) return Split{i, j - i, l - k};
      break;
    case OpKind::pgi:
      if (i < j && k == l) return Split{i, j - i, 0};
      break;
    case OpKind::sgi:
      if (i == j && k < l) return Split{i, 0, l - k};
      break;
    case OpKind::nol:
      if (i == j && k == l) return Split{i, 0, 0};
      break;
    case OpKind::oc2:
      if (k == n && l == n && j >= i + 2) return Split{i, 0, j - i};
      break;
  }
  return std::nullopt;
}

/// All ways of writing w as an `op` insertion of y into x with x, y accepted
/// by `member`. Calls f(x, y, split).
template <class Member, class F>
void for_each_preimage(OpKind op, const SymbolString& w, Member&& member, F&& f) {
  const std::size_t n = w.size();
  const std::string_view ws = w.bytes();
  std::string xbuf;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t l = i; l <= n; ++l) {
      const std::string_view y = ws.substr(i, l - i);
      if (!member(y)) continue;
      for (std::size_t j = i; j <= l; ++j) {
        for (std::size_t k = j; k <= l; ++k) {
          auto split = split_for(op, i, j, k, l, n);
          if (!split) continue;
          xbuf.assign(ws.substr(0, j));
          xbuf.append(ws.substr(k));
          if (!member(std::string_view(xbuf))) continue;
          f(SymbolString::from_bytes(xbuf), SymbolString::from_bytes(std::string(y)), *split);
        }
      }
    }
  }
}

}  // namespace detail

/// Checks op(L, L) ⊆ L over the fragment. Exact for results up to the
/// fragment's bound. Uses pairwise insertion or, when Σ^{≤n} is small
/// compared to |L|², a scan of all non-members for a preimage; both report
/// the same witness.
inline ClosednessCheck is_closed_bounded(const LangFragment& l, OpKind op) {
  const std::size_t n = l.bound();
  const std::size_t candidates = detail::count_upto(l.alphabet().size(), n);
  const double pairwise_cost = static_cast<double>(l.size()) * static_cast<double>(l.size()) *
                               static_cast<double>(n + 1);
  const double scan_cost = static_cast<double>(candidates) * static_cast<double>((n + 1) * (n + 1));

  std::optional<detail::Violation> best;
  auto consider = [&](detail::Violation v) {
    if (!best || v < *best) best = std::move(v);
  };

  if (scan_cost < pairwise_cost && candidates < 50'000'000) {
    std::unordered_set<std::string_view> members;
    for (const auto& w : l.strings()) members.insert(w.bytes());
    auto member = [&](std::string_view s) { return members.count(s) != 0; };
    const std::size_t sigma = l.alphabet().size();
    for (std::size_t len = 0; len <= n && !best; ++len) {
      std::vector<Symbol> digits(len, 0);
      while (true) {
        SymbolString w;
        for (Symbol d : digits) w.push_back(d);
        if (!member(w.bytes())) {
          detail::for_each_preimage(op, w, member,
                                    [&](const SymbolString& x, const SymbolString& y,
                                        const Split& s) { consider({w, x, y, s}); });
          if (best) break;
        }
        std::size_t pos = len;
        while (pos > 0 && digits[pos - 1] + 1u == sigma) digits[--pos] = 0;
        if (pos == 0 || sigma == 0) break;
        ++digits[pos - 1];
      }
    }
  } else {
    for (const auto& x : l.strings())
      for (const auto& y : l.strings())
        for_each_split(
            op, x, y,
            [&](const Split& s) {
              SymbolString r = apply_split(x, y, s);
              if (best && best->w < r) return;
              if (!l.contains(r)) consider({std::move(r), x, y, s});
            },
            n);
  }

  ClosednessCheck out;
  if (best) {
    out.closed = false;
    out.witness = best->w;
    out.target = best->x;
    out.inserted = best->y;
    out.decomposition = decompose(op, best->x, best->y, best->split);
  }
  return out;
}

}  // namespace ogi
