#include <gtest/gtest.h>

#include "ogi/closure.hpp"
#include "ogi/random.hpp"
#include "oracle.hpp"

using namespace ogi;

namespace {

const Alphabet kAbc = Alphabet::of_chars("abc");

LangFragment frag(const Alphabet& al, std::size_t n, const oracle::Set& s) {
  return oracle::fragment(al, n, s);
}

oracle::Set ab_family(std::size_t n, bool with_b, std::size_t min_i, std::size_t min_j) {
  oracle::Set out;
  for (std::size_t i = min_i; i <= n; ++i)
    for (std::size_t j = min_j; i + j + (with_b ? 1 : 0) <= n; ++j)
      out.insert(std::string(i, 'a') + (with_b ? "b" : "") + std::string(j, 'c'));
  return out;
}

}  // namespace

// The closure of {aacc, abc}: abc together with a^i b c^j and a^i c^j for
// i, j >= 2. Strings such as abcc or aabc are not derivable: every step that
// could create them needs a string that starts with "ab" or ends with "bc" as
// a matched outfix inside a longer target, and none exists.
TEST(BoundedClosure, AaccAbcGeneral) {
  const std::size_t n = 8;
  const LangFragment got =
      bounded_closure({OpKind::ogi, ClosureMode::general, n}, frag(kAbc, n, {"aacc", "abc"}));
  oracle::Set expected = ab_family(n, true, 2, 2);
  const oracle::Set cc = ab_family(n, false, 2, 2);
  expected.insert(cc.begin(), cc.end());
  expected.insert("abc");
  EXPECT_EQ(oracle::set(got), expected);
  EXPECT_EQ(oracle::set(got), oracle::closure("ogi", "general", n, {"aacc", "abc"}));
  EXPECT_FALSE(got.contains(kAbc.parse_chars("abcc")));
  EXPECT_FALSE(got.contains(kAbc.parse_chars("aabc")));
}

TEST(BoundedClosure, AaccAbcRight) {
  const std::size_t n = 8;
  const LangFragment got = bounded_closure({OpKind::ogi, ClosureMode::right, n},
                                           frag(kAbc, n, {"aacc"}), frag(kAbc, n, {"abc"}));
  oracle::Set expected = ab_family(n, true, 2, 2);
  expected.insert("abc");
  EXPECT_EQ(oracle::set(got), expected);
  EXPECT_EQ(oracle::set(got), oracle::closure("ogi", "right", n, {"aacc"}, {"abc"}));
  EXPECT_TRUE(got.contains(kAbc.parse_chars("aaabcc")));
}

TEST(BoundedClosure, AaccAbcLeft) {
  const LangFragment got = bounded_closure({OpKind::ogi, ClosureMode::left, 8},
                                           frag(kAbc, 8, {"aacc"}), frag(kAbc, 8, {"abc"}));
  EXPECT_EQ(oracle::set(got), (oracle::Set{"aabcc", "aacc"}));
}

TEST(BoundedClosure, LeftClosureOfLPrime) {
  const Alphabet al = Alphabet::of_chars("abcdef");
  const oracle::Set l{"abce", "bcde", "acdef"};
  const LangFragment got =
      bounded_closure({OpKind::ogi, ClosureMode::left, 7}, frag(al, 7, l), frag(al, 7, l));
  EXPECT_EQ(oracle::set(got), (oracle::Set{"abce", "bcde", "acdef", "abcde"}));
}

TEST(BoundedClosure, LeftIteratedPlainInsertion) {
  const Alphabet ab = Alphabet::of_chars("ab");
  const LangFragment got =
      bounded_closure({OpKind::nol, ClosureMode::left, 8}, frag(ab, 8, {"ab"}), frag(ab, 8, {"ab"}));
  oracle::Set in_astar_bstar;
  for (const auto& w : oracle::set(got))
    if (std::is_sorted(w.begin(), w.end())) in_astar_bstar.insert(w);
  EXPECT_EQ(in_astar_bstar, (oracle::Set{"ab", "aabb", "aaabbb", "aaaabbbb"}));
  EXPECT_EQ(oracle::set(got), oracle::closure("nol", "left", 8, {"ab"}, {"ab"}));
}

TEST(BoundedClosure, OperandValidation) {
  const LangFragment l = frag(kAbc, 4, {"abc"});
  EXPECT_THROW(bounded_closure({OpKind::ogi, ClosureMode::general, 4}, l, &l), InvalidArgument);
  EXPECT_THROW(bounded_closure({OpKind::ogi, ClosureMode::left, 4}, l), InvalidArgument);
  EXPECT_THROW(bounded_closure({OpKind::nol, ClosureMode::general, 4}, l), InvalidArgument);
  EXPECT_THROW(bounded_closure({OpKind::ogi, ClosureMode::general, 2}, l), InvalidArgument);
  EXPECT_THROW(bounded_closure({OpKind::ogi, ClosureMode::left, 4}, l,
                               frag(Alphabet::of_chars("ab"), 4, {"ab"})),
               AlphabetMismatch);
}

TEST(BoundedClosure, StringCapIsAnError) {
  const Alphabet ab = Alphabet::of_chars("ab");
  ClosureSpec spec{OpKind::ogi, ClosureMode::general, 10};
  spec.string_cap = 20;
  EXPECT_THROW(bounded_closure(spec, frag(ab, 10, {"aabb", "abab", "abba"})), LimitExceeded);
}

TEST(BoundedClosure, MatchesStageUnionOracleOnRandomSeeds) {
  const Alphabet ab = Alphabet::of_chars("ab");
  random::Engine rng(31);
  const auto words = oracle::words("ab", 4);
  for (int t = 0; t < 30; ++t) {
    oracle::Set seed, seed2;
    for (const auto& w : words) {
      if (random::coin(rng, 0.12)) seed.insert(w);
      if (random::coin(rng, 0.12)) seed2.insert(w);
    }
    const std::size_t n = 8;
    for (const char* op : {"ogi", "pgi", "sgi", "oc2"}) {
      const LangFragment got = bounded_closure({*parse_op(op), ClosureMode::general, n}, frag(ab, n, seed));
      ASSERT_EQ(oracle::set(got), oracle::closure(op, "general", n, seed)) << op << " trial " << t;
    }
    for (const char* op : {"ogi", "pgi", "sgi", "nol"})
      for (ClosureMode mode : {ClosureMode::left, ClosureMode::right}) {
        const LangFragment got = bounded_closure({*parse_op(op), mode, n}, frag(ab, n, seed),
                                                 frag(ab, n, seed2));
        ASSERT_EQ(oracle::set(got), oracle::closure(op, std::string(to_string(mode)), n, seed, seed2))
            << op << " " << to_string(mode) << " trial " << t;
      }
  }
}

TEST(BoundedClosure, IsAFixpoint) {
  const Alphabet ab = Alphabet::of_chars("ab");
  for (const char* op : {"ogi", "pgi", "sgi", "oc2"}) {
    const ClosureSpec spec{*parse_op(op), ClosureMode::general, 9};
    const LangFragment once = bounded_closure(spec, frag(ab, 9, {"aab", "abb", "abab"}));
    EXPECT_EQ(bounded_closure(spec, once), once) << op;
  }
}

TEST(BoundedClosure, OneSidedClosuresAreInsideTheGeneralClosure) {
  const Alphabet ab = Alphabet::of_chars("ab");
  random::Engine rng(32);
  const auto words = oracle::words("ab", 4);
  for (int t = 0; t < 20; ++t) {
    oracle::Set l1, l2;
    for (const auto& w : words) {
      if (random::coin(rng, 0.15)) l1.insert(w);
      if (random::coin(rng, 0.15)) l2.insert(w);
    }
    oracle::Set both = l1;
    both.insert(l2.begin(), l2.end());
    const std::size_t n = 8;
    const LangFragment general =
        bounded_closure({OpKind::ogi, ClosureMode::general, n}, frag(ab, n, both));
    for (ClosureMode m : {ClosureMode::left, ClosureMode::right}) {
      const LangFragment one = bounded_closure({OpKind::ogi, m, n}, frag(ab, n, l1), frag(ab, n, l2));
      for (const auto& w : one.strings()) ASSERT_TRUE(general.contains(w));
    }
  }
}

TEST(BoundedClosure, UnaryOgiEqualsOc2) {
  const Alphabet a = Alphabet::of_chars("a");
  random::Engine rng(33);
  for (int t = 0; t < 20; ++t) {
    oracle::Set seed;
    for (std::size_t k = 0; k <= 6; ++k)
      if (random::coin(rng, 0.3)) seed.insert(std::string(k, 'a'));
    EXPECT_EQ(bounded_closure({OpKind::ogi, ClosureMode::general, 12}, frag(a, 12, seed)),
              bounded_closure({OpKind::oc2, ClosureMode::general, 12}, frag(a, 12, seed)));
  }
}

TEST(BoundedStage, Examples) {
  const Alphabet al = Alphabet::of_chars("abcdef");
  const LangFragment l = frag(al, 6, {"abce", "bcde", "acdef"});
  const ClosureSpec spec{OpKind::ogi, ClosureMode::general, 6};
  EXPECT_TRUE(bounded_stage(spec, l, nullptr, 2).contains(al.parse_chars("abcdef")));
  EXPECT_FALSE(bounded_stage(spec, l, nullptr, 1).contains(al.parse_chars("abcdef")));
  EXPECT_EQ(bounded_stage(spec, l, nullptr, 0), l);

  const LangFragment s = frag(kAbc, 6, {"aacc", "abc"});
  EXPECT_EQ(oracle::set(bounded_stage(spec, s, nullptr, 1)),
            (oracle::Set{"abc", "aacc", "aabcc", "aaacc", "aaccc", "aaaccc"}));
}

TEST(BoundedStage, UnionOfStagesIsTheClosure) {
  const Alphabet ab = Alphabet::of_chars("ab");
  random::Engine rng(34);
  const auto words = oracle::words("ab", 4);
  for (int t = 0; t < 15; ++t) {
    oracle::Set seed;
    for (const auto& w : words)
      if (random::coin(rng, 0.15)) seed.insert(w);
    const std::size_t n = 8;
    const ClosureSpec spec{OpKind::ogi, ClosureMode::general, n};
    StringSet all;
    for (std::size_t i = 0; i <= n; ++i) {
      const LangFragment st = bounded_stage(spec, frag(ab, n, seed), nullptr, i);
      all.insert(st.strings().begin(), st.strings().end());
    }
    ASSERT_EQ(all, bounded_closure(spec, frag(ab, n, seed)).strings());
  }
}

TEST(Trace, Examples) {
  const LangFragment l = frag(kAbc, 8, {"aacc", "abc"});
  const ClosureSpec spec{OpKind::ogi, ClosureMode::general, 8};
  const auto d = trace(kAbc.parse_chars("aabcc"), spec, l);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->seed, kAbc.parse_chars("aacc"));
  ASSERT_EQ(d->steps.size(), 1u);
  const DerivationStep& s = d->steps[0];
  EXPECT_EQ(s.inserted, kAbc.parse_chars("abc"));
  EXPECT_EQ(s.decomposition.x1, kAbc.parse_chars("a"));
  EXPECT_EQ(s.decomposition.u, kAbc.parse_chars("a"));
  EXPECT_EQ(s.decomposition.z, kAbc.parse_chars("b"));
  EXPECT_EQ(s.decomposition.v, kAbc.parse_chars("c"));
  EXPECT_EQ(s.decomposition.x2, kAbc.parse_chars("c"));

  const auto zero = trace(kAbc.parse_chars("aacc"), spec, l);
  ASSERT_TRUE(zero);
  EXPECT_TRUE(zero->steps.empty());

  EXPECT_FALSE(trace(kAbc.parse_chars("abcba"), spec, l));
  EXPECT_FALSE(trace(kAbc.parse_chars("abcba"), {OpKind::ogi, ClosureMode::general, 5}, l.truncated(5)));
  EXPECT_FALSE(trace(kAbc.parse_chars("aaaaaaaaacc"), spec, l));
}

TEST(Trace, EveryMemberReplays) {
  const Alphabet ab = Alphabet::of_chars("ab");
  const oracle::Set seed{"aab", "abb", "ba"};
  for (const char* op : {"ogi", "pgi", "sgi", "oc2"}) {
    const ClosureSpec spec{*parse_op(op), ClosureMode::general, 8};
    const ClosureComputation c(spec, frag(ab, 8, seed), nullptr);
    const LangFragment closure = c.fragment();
    for (const auto& w : closure.strings()) {
      const auto d = c.derivation(w);
      ASSERT_TRUE(d);
      ASSERT_TRUE(replays(*d, spec.op, spec.mode)) << op;
      for (const auto& s : d->steps) ASSERT_TRUE(closure.contains(s.inserted));
    }
  }
  for (ClosureMode mode : {ClosureMode::left, ClosureMode::right}) {
    const ClosureSpec spec{OpKind::ogi, mode, 9};
    const LangFragment l1 = frag(ab, 9, {"aabb", "abab"}), l2 = frag(ab, 9, {"ab", "abb"});
    const ClosureComputation c(spec, l1, &l2);
    const LangFragment closure = c.fragment();
    for (const auto& w : closure.strings()) {
      const auto d = c.derivation(w);
      ASSERT_TRUE(d && replays(*d, spec.op, mode));
      for (const auto& s : d->steps) {
        if (mode == ClosureMode::left) ASSERT_TRUE(l2.contains(s.inserted));
        else ASSERT_TRUE(l1.contains(s.target));
      }
    }
  }
}

TEST(Trace, InsertedStringsMayBeDerived) {
  const LangFragment l = frag(kAbc, 9, {"aacc", "abc"});
  const ClosureSpec spec{OpKind::ogi, ClosureMode::general, 9};
  const ClosureComputation c(spec, l, nullptr);
  // One step along the seed aacc suffices when the inserted string is itself
  // a derived member; aaabccc still lies outside the first stage.
  const auto d = c.derivation(kAbc.parse_chars("aaabccc"));
  ASSERT_TRUE(d);
  ASSERT_EQ(d->steps.size(), 1u);
  EXPECT_EQ(d->seed, kAbc.parse_chars("aacc"));
  EXPECT_FALSE(l.contains(d->steps[0].inserted));
  EXPECT_TRUE(c.contains(d->steps[0].inserted));
  EXPECT_FALSE(bounded_stage(spec, l, nullptr, 1).contains(kAbc.parse_chars("aaabccc")));
  EXPECT_TRUE(bounded_stage(spec, l, nullptr, 2).contains(kAbc.parse_chars("aaabccc")));
}

TEST(Replays, DetectsBrokenChains) {
  const LangFragment l = frag(kAbc, 8, {"aacc", "abc"});
  auto d = *trace(kAbc.parse_chars("aabcc"), {OpKind::ogi, ClosureMode::general, 8}, l);
  EXPECT_TRUE(replays(d, OpKind::ogi, ClosureMode::general));
  d.final = kAbc.parse_chars("aacc");
  EXPECT_FALSE(replays(d, OpKind::ogi, ClosureMode::general));
}

TEST(IsClosedBounded, Examples) {
  const Alphabet six({"a1", "a2", "a3", "b1", "b2", "b3"});
  StringSet l1;
  for (const char* w : {"a3 a1 a2 b1", "a2 b2 b1 b3", "a1 a2 a3 b2", "a3 b3 b2 b1", "a2 a3 a1 b3",
                        "a1 b1 b3 b2"})
    l1.insert(six.parse(w));
  EXPECT_TRUE(is_closed_bounded(LangFragment::tight(six, l1), OpKind::ogi).closed);

  const ClosednessCheck c = is_closed_bounded(frag(kAbc, 5, {"aacc", "abc"}), OpKind::ogi);
  ASSERT_FALSE(c.closed);
  EXPECT_EQ(*c.witness, kAbc.parse_chars("aaacc"));
  EXPECT_EQ(c.decomposition->result(), *c.witness);
  EXPECT_EQ(c.decomposition->target(), *c.target);
  EXPECT_EQ(c.decomposition->inserted(), *c.inserted);

  EXPECT_TRUE(is_closed_bounded(frag(kAbc, 2, {"ab"}), OpKind::ogi).closed);
}

TEST(IsClosedBounded, AgreesWithBruteForce) {
  const Alphabet ab = Alphabet::of_chars("ab");
  random::Engine rng(35);
  const auto words = oracle::words("ab", 5);
  for (int t = 0; t < 60; ++t) {
    oracle::Set l;
    for (const auto& w : words)
      if (random::coin(rng, 0.2)) l.insert(w);
    for (const char* op : {"ogi", "pgi", "sgi", "nol", "oc2"}) {
      // Both search strategies are exercised: a tight bound favours the scan.
      for (std::size_t n : {5ul, 7ul}) {
        oracle::Set violations;
        for (const auto& r : oracle::lift(op, l, l, n))
          if (!l.count(r)) violations.insert(r);
        const ClosednessCheck c = is_closed_bounded(frag(ab, n, l), *parse_op(op));
        ASSERT_EQ(c.closed, violations.empty()) << op;
        if (!c.closed) {
          ASSERT_EQ(oracle::str(ab, *c.witness), *violations.begin()) << op;
          ASSERT_TRUE(l.count(oracle::str(ab, *c.target)));
          ASSERT_TRUE(l.count(oracle::str(ab, *c.inserted)));
          ASSERT_EQ(c.decomposition->result(), *c.witness);
        }
      }
    }
  }
}
