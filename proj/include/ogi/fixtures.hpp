#pragma once

// Named reproduction fixtures. Each returns a pass/fail outcome with a short
// detail line; run_all executes them in order.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ogi/alphabet.hpp"
#include "ogi/closure.hpp"
#include "ogi/constructions.hpp"
#include "ogi/decision.hpp"
#include "ogi/lang_fragment.hpp"
#include "ogi/nfa.hpp"
#include "ogi/random.hpp"
#include "ogi/string_ops.hpp"

namespace ogi::fixtures {

struct Outcome {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct Options {
  std::uint64_t seed = random::kDefaultSeed;
};

namespace detail {

/// "ok" or a summary of missing and unexpected strings.
inline std::string diff(const Alphabet& al, const StringSet& got, const StringSet& expected) {
  std::vector<SymbolString> missing, extra;
  std::set_difference(expected.begin(), expected.end(), got.begin(), got.end(),
                      std::back_inserter(missing));
  std::set_difference(got.begin(), got.end(), expected.begin(), expected.end(),
                      std::back_inserter(extra));
  if (missing.empty() && extra.empty()) return "";
  std::ostringstream out;
  auto list = [&](const char* label, const std::vector<SymbolString>& v) {
    if (v.empty()) return;
    out << label << ' ' << v.size() << " [";
    for (std::size_t i = 0; i < std::min<std::size_t>(v.size(), 4); ++i)
      out << (i ? ", " : "") << al.compact(v[i]);
    out << (v.size() > 4 ? ", ...]" : "]") << ' ';
  };
  list("missing", missing);
  list("unexpected", extra);
  std::string s = out.str();
  s.pop_back();
  return s;
}

inline StringSet words(const Alphabet& al, std::initializer_list<const char*> ws) {
  StringSet out;
  for (const char* w : ws) out.insert(al.parse(w));
  return out;
}

inline StringSet char_words(const Alphabet& al, std::initializer_list<const char*> ws) {
  StringSet out;
  for (const char* w : ws) out.insert(al.parse_chars(w));
  return out;
}

inline SymbolString repeat(const SymbolString& w, std::size_t k) {
  SymbolString out;
  for (std::size_t i = 0; i < k; ++i) out.append(w);
  return out;
}

inline SymbolString run(Symbol s, std::size_t k) {
  SymbolString out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(s);
  return out;
}

/// Strings of a*b* (symbols 0 and 1) in `l`.
inline StringSet in_astar_bstar(const StringSet& l) {
  StringSet out;
  for (const auto& w : l)
    if (std::is_sorted(w.bytes().begin(), w.bytes().end())) out.insert(w);
  return out;
}

inline StringSet ab_family(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& keep) {
  StringSet out;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; i + j <= n; ++j)
      if (keep(i, j)) out.insert(run(0, i) + run(1, j));
  return out;
}

struct Checks {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }

  void expect_equal(const Alphabet& al, const StringSet& got, const StringSet& expected,
                    const std::string& what) {
    const std::string d = diff(al, got, expected);
    expect(d.empty(), what + ": " + d);
  }

  std::string summary(const std::string& on_success) const {
    if (ok) return on_success;
    std::string out;
    for (const auto& n : notes) out += (out.empty() ? "" : "; ") + n;
    return out;
  }
};

inline double fitted_exponent(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = std::log(xs[i]), y = std::log(ys[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace detail

/// The seven-string language over {a1,a2,a3,b1,b2,b3,$} and its parts.
struct MarkerLanguage {
  Alphabet alphabet{{"a1", "a2", "a3", "b1", "b2", "b3", "$"}};
  StringSet cyclic = detail::words(alphabet, {"a3 a1 a2 b1", "a2 b2 b1 b3", "a1 a2 a3 b2",
                                              "a3 b3 b2 b1", "a2 a3 a1 b3", "a1 b1 b3 b2"});
  SymbolString seed = alphabet.parse("$ a3 a1 b1 b3 $");
  StringSet middles = detail::words(alphabet, {"a1 b1", "a1 a2 b1", "a1 a2 b2 b1",
                                               "a1 a2 a3 b2 b1", "a1 a2 a3 b3 b2 b1",
                                               "a1 a2 a3 a1 b3 b2 b1"});

  /// $ a3 (a1 a2 a3)^i z (b3 b2 b1)^i b3 $ for z in the middles, up to length n.
  StringSet marked(std::size_t n) const {
    StringSet out;
    const SymbolString open = alphabet.parse("$ a3"), close = alphabet.parse("b3 $");
    const SymbolString up = alphabet.parse("a1 a2 a3"), down = alphabet.parse("b3 b2 b1");
    for (std::size_t i = 0; 4 + 6 * i + 2 <= n; ++i)
      for (const auto& z : middles) {
        SymbolString w = open + detail::repeat(up, i) + z + detail::repeat(down, i) + close;
        if (w.size() <= n) out.insert(std::move(w));
      }
    return out;
  }

  StringSet all() const {
    StringSet out = cyclic;
    out.insert(seed);
    return out;
  }
};

inline Outcome criterion_1(const Options&) {
  const MarkerLanguage m;
  const std::size_t n = 23;
  const LangFragment l(m.alphabet, n, m.all());
  const LangFragment got = bounded_closure({OpKind::ogi, ClosureMode::general, n}, l);
  StringSet expected = m.marked(n);
  expected.insert(m.cyclic.begin(), m.cyclic.end());
  detail::Checks c;
  c.expect_equal(m.alphabet, got.strings(), expected, "closure at n=23");
  return {1, "non-regular closure of a finite language", c.ok,
          c.summary(std::to_string(got.size()) + " strings, exact match at n=23")};
}

inline Outcome criterion_2(const Options&) {
  const MarkerLanguage m;
  const LangFragment l = LangFragment::tight(m.alphabet, m.cyclic);
  detail::Checks c;
  c.expect_equal(m.alphabet, lift(OpKind::ogi, l, l).strings(), m.cyclic, "L <- L");
  const ClosureVerdict v = is_og_closed_dfa(Dfa(from_strings(l)));
  c.expect(v.closed, "decision reports not closed");
  return {2, "six-string language is fixed", c.ok, c.summary("L <- L = L; decision: closed")};
}

inline Outcome criterion_3(const Options&) {
  const Alphabet al = Alphabet::of_chars("ab");
  const std::size_t n = 12;
  detail::Checks c;
  const LangFragment p = bounded_closure({OpKind::pgi, ClosureMode::general, n},
                                         LangFragment(al, n, detail::char_words(al, {"aab"})));
  c.expect_equal(al, detail::in_astar_bstar(p.strings()),
                 detail::ab_family(n, [](auto i, auto j) { return 2 <= i && i <= j + 1; }),
                 "pgi");
  const LangFragment s = bounded_closure({OpKind::sgi, ClosureMode::general, n},
                                         LangFragment(al, n, detail::char_words(al, {"abb"})));
  c.expect_equal(al, detail::in_astar_bstar(s.strings()),
                 detail::ab_family(n, [](auto i, auto j) { return 2 <= j && j <= i + 1; }),
                 "sgi");
  StringSet mirrored;
  for (const auto& w : p.strings()) {
    SymbolString r = w.reversed();
    for (std::size_t k = 0; k < r.size(); ++k) r = r.substr(0, k) + SymbolString{Symbol(1 - r[k])} + r.substr(k + 1);
    mirrored.insert(r);
  }
  c.expect_equal(al, s.strings(), mirrored, "sgi closure vs mirrored pgi closure");
  return {3, "prefix/suffix-guided closures of singletons", c.ok,
          c.summary("a^i b^j families exact at n=12 (" + std::to_string(p.size()) + " pgi strings)")};
}

inline Outcome criterion_4(const Options&) {
  const Alphabet al = Alphabet::of_chars("abc");
  const std::size_t n = 9;
  const LangFragment l1(al, n, detail::char_words(al, {"aacc"}));
  const LangFragment l2(al, n, detail::char_words(al, {"abc"}));
  StringSet apbcp, aacc_family;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; i + j + 1 <= n; ++j) apbcp.insert(detail::run(0, i) + SymbolString{1} + detail::run(2, j));
  for (std::size_t i = 2; i <= n; ++i)
    for (std::size_t j = 2; i + j <= n; ++j) aacc_family.insert(detail::run(0, i) + detail::run(2, j));

  detail::Checks c;
  const LangFragment right = bounded_closure({OpKind::ogi, ClosureMode::right, n}, l1, l2);
  c.expect_equal(al, right.strings(), apbcp, "right closure vs a+bc+");
  const LangFragment left = bounded_closure({OpKind::ogi, ClosureMode::left, n}, l1, l2);
  c.expect_equal(al, left.strings(), detail::char_words(al, {"aabcc", "aacc"}), "left closure");
  const LangFragment general = bounded_closure({OpKind::ogi, ClosureMode::general, n},
                                               LangFragment(al, n, detail::char_words(al, {"aacc", "abc"})));
  StringSet expected = apbcp;
  expected.insert(aacc_family.begin(), aacc_family.end());
  c.expect_equal(al, general.strings(), expected, "general closure vs a+bc+ | aa+cc+");
  return {4, "one-sided closures of ({aacc},{abc})", c.ok, c.summary("exact at n=9")};
}

inline Outcome criterion_5(const Options&) {
  detail::Checks c;
  {
    const Alphabet al = Alphabet::of_chars("$abcd");
    const std::size_t n = 13;
    const LangFragment l1(al, n, detail::char_words(al, {"acdb", "cabd"}));
    const LangFragment l2(al, n, detail::char_words(al, {"a$b"}));
    const LangFragment got = bounded_closure({OpKind::ogi, ClosureMode::right, n}, l1, l2);
    const SymbolString ca = al.parse_chars("ca"), bd = al.parse_chars("bd");
    const SymbolString dollar = al.parse_chars("$"), a = al.parse_chars("a"), b = al.parse_chars("b");
    StringSet expected;
    for (std::size_t i = 0; i <= 3; ++i)
      expected.insert(detail::repeat(ca, i) + dollar + detail::repeat(bd, i));
    for (std::size_t i = 0; i <= 2; ++i)
      expected.insert(a + detail::repeat(ca, i) + dollar + detail::repeat(bd, i) + b);
    c.expect_equal(al, got.strings(), expected, "right closure at n=13");
  }
  {
    const MarkerLanguage m;
    const std::size_t n = 23;
    const LangFragment l3(m.alphabet, n, {m.seed});
    const LangFragment l4(m.alphabet, n, m.cyclic);
    const LangFragment got = bounded_closure({OpKind::ogi, ClosureMode::left, n}, l3, l4);
    c.expect_equal(m.alphabet, got.strings(), m.marked(n), "left closure at n=23");
  }
  return {5, "non-regular one-sided closures", c.ok, c.summary("both fixtures exact")};
}

inline Outcome criterion_6(const Options& opt) {
  const Alphabet al = Alphabet::of_chars("ab");
  random::Engine rng(opt.seed);
  const std::size_t n = 8, trials = 30;
  std::size_t mismatches = 0, count_errors = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const Nfa a = random::random_nfa(rng, al, random::uniform(rng, 1, 4));
    const Nfa b = random::random_nfa(rng, al, random::uniform(rng, 1, 4));
    const LangFragment fa = enumerate_upto(a, n), fb = enumerate_upto(b, n);
    const std::size_t q = a.num_states(), p = b.num_states();

    if (enumerate_upto(ogi_nfa(a, b), n) != lift(OpKind::ogi, fa, fb)) ++mismatches;
    if (enumerate_upto(pgi_nfa(a, b), n) != lift(OpKind::pgi, fa, fb)) ++mismatches;
    if (enumerate_upto(sgi_nfa(a, b), n) != lift(OpKind::sgi, fa, fb)) ++mismatches;

    const ProductOptions full{false};
    if (ogi_construction(a, b, full).nfa.num_states() != 3 * q * p + 2 * q) ++count_errors;
    if (pgi_construction(a, b, full).nfa.num_states() != 2 * q * p + 2 * q) ++count_errors;
    // Reversal adds a fresh initial state to each operand and to the result.
    const Construction s = sgi_construction(a, b, full);
    if (s.stats.formula_states != 2 * (q + 1) * (p + 1) + 2 * (q + 1) ||
        s.nfa.num_states() != s.stats.formula_states + 1)
      ++count_errors;
  }
  const bool ok = mismatches == 0 && count_errors == 0;
  return {6, "insertion automata match the string-level operation", ok,
          std::to_string(trials) + " pairs x {ogi,pgi,sgi}: " + std::to_string(mismatches) +
              " language mismatches, " + std::to_string(count_errors) + " state-count errors"};
}

inline Outcome criterion_7(const Options& opt) {
  const Alphabet al = Alphabet::of_chars("a");
  random::Engine rng(opt.seed ^ 0x7);
  const std::size_t n = 12, trials = 20;
  std::size_t mismatches = 0;
  std::string first;
  for (std::size_t t = 0; t < trials; ++t) {
    const Nfa a = random::random_nfa(rng, al, random::uniform(rng, 1, 3), 0.5);
    const LangFragment seed = enumerate_upto(a, n);
    const LangFragment expected = bounded_closure({OpKind::ogi, ClosureMode::general, n}, seed);
    const LangFragment got = enumerate_upto(unary_ogi_closure_nfa(a), n);
    if (got != expected) {
      if (!mismatches) first = "trial " + std::to_string(t) + ": " +
                               detail::diff(al, got.strings(), expected.strings());
      ++mismatches;
    }
  }
  return {7, "unary closures are regular", mismatches == 0,
          std::to_string(trials) + " unary automata, " + std::to_string(mismatches) + " mismatches" +
              (first.empty() ? "" : " (" + first + ")")};
}

inline Outcome criterion_8(const Options& opt) {
  detail::Checks c;
  {
    const MarkerLanguage m;
    c.expect(is_og_closed_dfa(Dfa(from_strings(m.alphabet, m.cyclic))).closed,
             "six-string language reported not closed");
  }
  const Alphabet abc = Alphabet::of_chars("abc");
  {
    const Dfa d(from_strings(abc, detail::char_words(abc, {"aacc", "abc"})));
    const ClosureVerdict v = is_og_closed_dfa(d);
    c.expect(!v.closed && v.witness && v.witness->size() == 5 && validate_witness(d, *v.witness),
             "{aacc,abc}: expected a validated length-5 witness");
  }
  const Alphabet ab = Alphabet::of_chars("ab");
  c.expect(is_og_closed_dfa(Dfa(universal(ab))).closed, "sigma* reported not closed");
  {
    Nfa astar_bstar(ab);
    const StateId p = astar_bstar.add_state("p", true), q = astar_bstar.add_state("q", true);
    astar_bstar.set_initial(p);
    astar_bstar.add_transition(p, 0, p);
    astar_bstar.add_transition(p, 1, q);
    astar_bstar.add_transition(q, 1, q);
    c.expect(is_og_closed_dfa(Dfa(astar_bstar)).closed, "a*b* reported not closed");
  }

  random::Engine rng(opt.seed ^ 0x8);
  std::size_t disagreements = 0, closed = 0;
  for (std::size_t t = 0; t < 50; ++t) {
    const Dfa d = random::random_dfa(rng, ab, random::uniform(rng, 1, 5));
    const ClosureVerdict v = is_og_closed_dfa(d);
    const ClosednessCheck oracle =
        is_closed_bounded(enumerate_upto(d.nfa(), 2 * d.num_states() + 4), OpKind::ogi);
    if (v.closed) ++closed;
    if ((v.closed && !oracle.closed) || (!v.closed && !validate_witness(d, *v.witness)))
      ++disagreements;
  }
  c.expect(disagreements == 0, std::to_string(disagreements) + " random DFAs disagree with the oracle");

  std::vector<double> sizes, times;
  for (std::size_t k = 2; k <= 20; k += 2) {
    random::Engine srng(opt.seed + k);
    const Dfa d = random::random_dfa(srng, ab, k, 1.0, 0.5);
    double best = 1e9;
    for (int rep = 0; rep < 3; ++rep) {
      std::size_t iters = 0;
      const auto start = std::chrono::steady_clock::now();
      double elapsed = 0;
      do {
        (void)is_og_closed_dfa(d);
        ++iters;
        elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      } while (elapsed < 0.002);
      best = std::min(best, elapsed / static_cast<double>(iters));
    }
    sizes.push_back(static_cast<double>(k));
    times.push_back(best);
  }
  const double exponent = detail::fitted_exponent(sizes, times);
  c.expect(exponent <= 5.0, "fitted exponent " + std::to_string(exponent) + " > 5");
  std::ostringstream ok;
  ok << "fixtures correct; 50 random DFAs agree (" << closed << " closed); fitted exponent "
     << std::fixed;
  ok.precision(2);
  ok << exponent;
  return {8, "polynomial decision of og-closure", c.ok, c.summary(ok.str())};
}

inline Outcome criterion_9(const Options&) {
  detail::Checks c;
  const Alphabet ab = Alphabet::of_chars("ab");
  {
    const LangFragment all = enumerate_upto(universal(ab), 6);
    std::size_t failures = 0;
    for (const auto& x : all.strings())
      if (x.size() >= 2 && !ogi_insert(x, x).count(x)) ++failures;
    c.expect(failures == 0, std::to_string(failures) + " strings lack the trivial step");
  }
  {
    const Alphabet al = Alphabet::of_chars("abcd");
    const SymbolString abc = al.parse_chars("abc"), abcd = al.parse_chars("abcd"),
                       acd = al.parse_chars("acd");
    bool found = false;
    for (const auto& w : ogi_insert(acd, abc)) found = found || ogi_insert(w, abcd).count(abcd);
    c.expect(found, "abcd not in (acd <- abc) <- abcd");
    c.expect(ogi_insert(abc, abcd).empty(), "abc <- abcd is not empty");
  }
  {
    const LangFragment all = enumerate_upto(universal(ab), 5);
    std::size_t failures = 0;
    for (const auto& x : all.strings())
      for (const auto& y : all.strings()) {
        StringSet rev;
        for (const auto& w : pgi_insert(x, y)) rev.insert(w.reversed());
        if (rev != sgi_insert(x.reversed(), y.reversed())) ++failures;
      }
    c.expect(failures == 0, std::to_string(failures) + " pairs break pgi/sgi reversal duality");
  }
  {
    std::size_t failures = 0;
    for (std::size_t i = 0; i <= 12; ++i)
      for (std::size_t j = 0; j <= 12; ++j)
        if (ogi_insert(detail::run(0, i), detail::run(0, j)) !=
            oc2_catenate(detail::run(0, i), detail::run(0, j)))
          ++failures;
    c.expect(failures == 0, std::to_string(failures) + " unary pairs where ogi != oc2");
  }
  {
    const std::size_t n = 8;
    const LangFragment l(ab, n, detail::char_words(ab, {"ab"}));
    const LangFragment li = bounded_closure({OpKind::nol, ClosureMode::left, n}, l, l);
    c.expect_equal(ab, detail::in_astar_bstar(li.strings()),
                   detail::ab_family(n, [](auto i, auto j) { return i >= 1 && i == j; }),
                   "LI*(ab, ab) & a*b*");
  }
  return {9, "algebraic properties", c.ok, c.summary("all property checks exact")};
}

inline std::vector<Outcome> run_all(const Options& opt = {}) {
  using Fn = Outcome (*)(const Options&);
  const Fn all[] = {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                    criterion_6, criterion_7, criterion_8, criterion_9};
  std::vector<Outcome> out;
  for (Fn f : all) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = f(opt);
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace ogi::fixtures
