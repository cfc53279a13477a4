#pragma once

// Single-step insertion and overlap operations on strings.
//
// Every operation here has the shape "insert y into x": the result is
// x[0, at) · y · x[at + |u| + |v|, |x|) for some split of x, where u and v are
// the parts of y matched against x (a non-empty outfix for ogi, a non-empty
// prefix for pgi, a non-empty suffix for sgi, nothing for nol, an overlap of
// length at least two for oc2). Results are therefore never shorter than
// either operand, which is what makes bounded fragments exact.

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ogi/alphabet.hpp"
#include "ogi/error.hpp"
#include "ogi/lang_fragment.hpp"

namespace ogi {

enum class OpKind { ogi, pgi, sgi, nol, oc2 };

inline std::string_view to_string(OpKind op) {
  switch (op) {
    case OpKind::ogi: return "ogi";
    case OpKind::pgi: return "pgi";
    case OpKind::sgi: return "sgi";
    case OpKind::nol: return "nol";
    case OpKind::oc2: return "oc2";
  }
  return "?";
}

inline std::optional<OpKind> parse_op(std::string_view name) {
  for (OpKind op : {OpKind::ogi, OpKind::pgi, OpKind::sgi, OpKind::nol, OpKind::oc2})
    if (to_string(op) == name) return op;
  return std::nullopt;
}

/// Position data of one insertion: x1 has length `at`, and `u_len` / `v_len`
/// symbols of x right after x1 are matched against y.
struct Split {
  std::size_t at = 0;
  std::size_t u_len = 0;
  std::size_t v_len = 0;

  friend auto operator<=>(const Split&, const Split&) = default;
};

inline std::size_t result_length(const SymbolString& x, const SymbolString& y, const Split& s) {
  return x.size() + y.size() - s.u_len - s.v_len;
}

inline SymbolString apply_split(const SymbolString& x, const SymbolString& y, const Split& s) {
  std::string out;
  out.reserve(result_length(x, y, s));
  out += x.bytes().substr(0, s.at);
  out += y.bytes();
  out += x.bytes().substr(s.at + s.u_len + s.v_len);
  return SymbolString::from_bytes(std::move(out));
}

/// One witness (x1, u, z, v, x2) of an insertion.
///
/// For ogi/pgi/sgi/nol the target is x1·u·v·x2, the inserted string is u·z·v
/// and the result is x1·u·z·v·x2. For oc2 the target x is x1·v, the inserted
/// string y is v·x2 and the result is x1·v·x2 (u and z are empty, v is the
/// overlap).
struct Decomposition {
  SymbolString x1, u, z, v, x2;
  OpKind kind = OpKind::ogi;

  SymbolString target() const {
    if (kind == OpKind::oc2) return x1 + v;
    return concat({x1, u, v, x2});
  }
  SymbolString inserted() const {
    if (kind == OpKind::oc2) return v + x2;
    return concat({u, z, v});
  }
  SymbolString result() const { return concat({x1, u, z, v, x2}); }

  /// Checks the shape constraints of `kind`.
  bool well_formed() const {
    switch (kind) {
      case OpKind::ogi: return !u.empty() && !v.empty();
      case OpKind::pgi: return !u.empty() && v.empty();
      case OpKind::sgi: return u.empty() && !v.empty();
      case OpKind::nol: return u.empty() && v.empty();
      case OpKind::oc2: return u.empty() && z.empty() && v.size() >= 2;
    }
    return false;
  }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

inline Decomposition decompose(OpKind op, const SymbolString& x, const SymbolString& y,
                               const Split& s) {
  Decomposition d;
  d.kind = op;
  d.x1 = x.substr(0, s.at);
  d.x2 = x.substr(s.at + s.u_len + s.v_len);
  if (op == OpKind::oc2) {
    d.v = x.substr(s.at, s.v_len);
    d.x2 = y.substr(s.v_len);
    return d;
  }
  d.u = y.substr(0, s.u_len);
  d.v = y.substr(y.size() - s.v_len);
  d.z = y.substr(s.u_len, y.size() - s.u_len - s.v_len);
  return d;
}

/// Calls `f(split)` for every valid split of `op` inserting y into x whose
/// result is at most `max_len` long, in (at, u_len, v_len) ascending order.
/// Different splits may yield the same result string.
template <class F>
void for_each_split(OpKind op, const SymbolString& x, const SymbolString& y, F&& f,
                    std::size_t max_len = std::numeric_limits<std::size_t>::max()) {
  const std::string_view xs = x.bytes();
  const std::string_view ys = y.bytes();
  const std::size_t nx = xs.size();
  const std::size_t ny = ys.size();
  // Result length is nx + ny - matched; require matched >= min_matched.
  const std::size_t min_matched = nx + ny > max_len ? nx + ny - max_len : 0;

  switch (op) {
    case OpKind::ogi:
      for (std::size_t at = 0; at + 2 <= nx; ++at) {
        for (std::size_t u = 1; at + u + 1 <= nx && u + 1 <= ny; ++u) {
          if (xs[at + u - 1] != ys[u - 1]) break;
          for (std::size_t v = 1; at + u + v <= nx && u + v <= ny; ++v) {
            if (u + v < min_matched) continue;
            if (xs.substr(at + u, v) == ys.substr(ny - v)) f(Split{at, u, v});
          }
        }
      }
      break;
    case OpKind::pgi:
      for (std::size_t at = 0; at < nx; ++at) {
        for (std::size_t k = 1; at + k <= nx && k <= ny; ++k) {
          if (xs[at + k - 1] != ys[k - 1]) break;
          if (k >= min_matched) f(Split{at, k, 0});
        }
      }
      break;
    case OpKind::sgi:
      for (std::size_t at = 0; at < nx; ++at) {
        for (std::size_t k = 1; at + k <= nx && k <= ny; ++k) {
          if (k < min_matched) continue;
          if (xs.substr(at, k) == ys.substr(ny - k)) f(Split{at, 0, k});
        }
      }
      break;
    case OpKind::nol:
      if (min_matched > 0) break;
      for (std::size_t at = 0; at <= nx; ++at) f(Split{at, 0, 0});
      break;
    case OpKind::oc2:
      // x = p·v, y = v·w with |v| >= 2
      for (std::size_t v = 2; v <= nx && v <= ny; ++v) {
        if (v < min_matched) continue;
        if (xs.substr(nx - v) == ys.substr(0, v)) f(Split{nx - v, 0, v});
      }
      break;
  }
}

/// All result strings of inserting y into x with `op`, canonically ordered.
inline StringSet insert(OpKind op, const SymbolString& x, const SymbolString& y,
                        std::size_t max_len = std::numeric_limits<std::size_t>::max()) {
  StringSet out;
  for_each_split(
      op, x, y, [&](const Split& s) { out.insert(apply_split(x, y, s)); }, max_len);
  return out;
}

/// All witnesses, duplicates of the same result included, ordered by
/// (|x1|, |u|, |v|).
inline std::vector<Decomposition> decompositions(OpKind op, const SymbolString& x,
                                                 const SymbolString& y) {
  std::vector<Decomposition> out;
  for_each_split(op, x, y, [&](const Split& s) { out.push_back(decompose(op, x, y, s)); });
  return out;
}

inline StringSet ogi_insert(const SymbolString& x, const SymbolString& y) {
  return insert(OpKind::ogi, x, y);
}
inline StringSet pgi_insert(const SymbolString& x, const SymbolString& y) {
  return insert(OpKind::pgi, x, y);
}
inline StringSet sgi_insert(const SymbolString& x, const SymbolString& y) {
  return insert(OpKind::sgi, x, y);
}
inline StringSet nol_insert(const SymbolString& x, const SymbolString& y) {
  return insert(OpKind::nol, x, y);
}
inline StringSet oc2_catenate(const SymbolString& x, const SymbolString& y) {
  return insert(OpKind::oc2, x, y);
}
inline std::vector<Decomposition> ogi_decompositions(const SymbolString& x,
                                                     const SymbolString& y) {
  return decompositions(OpKind::ogi, x, y);
}

/// Pairs (p, s), both non-empty, with p·m·s = w for some m; ordered by (|p|, |s|).
inline std::vector<std::pair<SymbolString, SymbolString>> non_trivial_outfixes(
    const SymbolString& w) {
  std::vector<std::pair<SymbolString, SymbolString>> out;
  for (std::size_t p = 1; p < w.size(); ++p)
    for (std::size_t s = 1; p + s <= w.size(); ++s)
      out.emplace_back(w.substr(0, p), w.substr(w.size() - s));
  return out;
}

/// Union of `op` over all pairs of L1 × L2, cut at the smaller bound.
inline LangFragment lift(OpKind op, const LangFragment& l1, const LangFragment& l2) {
  require_same_alphabet(l1.alphabet(), l2.alphabet());
  const std::size_t n = std::min(l1.bound(), l2.bound());
  StringSet out;
  for (const auto& x : l1.strings()) {
    if (x.size() > n) continue;
    for (const auto& y : l2.strings()) {
      if (y.size() > n) continue;
      for_each_split(
          op, x, y, [&](const Split& s) { out.insert(apply_split(x, y, s)); }, n);
    }
  }
  return LangFragment(l1.alphabet(), n, std::move(out));
}

}  // namespace ogi
