#include <gtest/gtest.h>

#include <sstream>

#include "ogi/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ogi::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(OGI_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, InsertPrintsResults) {
  const Result r = run({"insert", "--chars", "--x", "aacc", "--y", "abc"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "a a b c c\n");

  const Result none = run({"insert", "--chars", "--x", "ab", "--y", "cd"});
  EXPECT_EQ(none.code, 0);
  EXPECT_EQ(none.out, "");

  const Result plain = run({"insert", "--op", "nol", "--x", "a b", "--y", "c"});
  EXPECT_EQ(plain.out, "a b c\na c b\nc a b\n");
}

TEST(Cli, InsertDecompositions) {
  const Result r = run({"insert", "--chars", "--decompositions", "--x", "aacc", "--y", "abc"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("a a b c c\t"), std::string::npos);
}

TEST(Cli, ClosureAndStage) {
  const Result r = run({"closure", "-n", "5", data("aacc_abc.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "a b c\na a c c\na a a c c\na a b c c\na a c c c\n");

  const Result s = run({"stage", "-n", "6", "-i", "0", data("aacc_abc.txt")});
  EXPECT_EQ(s.out, "a b c\na a c c\n");

  const Result left = run({"closure", "--mode", "left", data("aacc.txt"), data("abc.txt")});
  EXPECT_EQ(left.out, "a a c c\na a b c c\n");
}

TEST(Cli, ClosureRejectsBadOperands) {
  const Result r = run({"closure", "--mode", "left", data("aacc.txt")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  EXPECT_EQ(run({"closure", "--op", "bogus", data("aacc.txt")}).code, 2);
  EXPECT_EQ(run({"closure", data("missing.txt")}).code, 2);
}

TEST(Cli, TraceFormat) {
  const Result r = run({"trace", "--chars", "--target", "aabcc", data("aacc_abc.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "seed: aacc\n1. aacc —[a|b|c @ 2]→ aabcc   (inserted abc)\n");

  const Result no = run({"trace", "--chars", "--target", "abcba", data("aacc_abc.txt")});
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(no.out, "not derivable within bound 8\n");
}

TEST(Cli, DecideVerdicts) {
  const Result open = run({"decide", data("aacc_abc.dfa")});
  EXPECT_EQ(open.code, 1);
  EXPECT_EQ(open.out.rfind("not-closed\nwitness: a a a c c\n", 0), 0u);
  EXPECT_NE(open.out.find("decomposition: "), std::string::npos);

  EXPECT_EQ(run({"decide", data("six.dfa")}).code, 0);
  EXPECT_EQ(run({"decide", data("astar_bstar.dfa")}).code, 0);

  const Result nfa = run({"decide", data("apbcp.nfa")});
  EXPECT_EQ(nfa.code, 2);
  const Result forced = run({"decide", "--force-determinize", data("apbcp.nfa")});
  EXPECT_EQ(forced.code, 0);
  EXPECT_EQ(forced.out.rfind("closed\n", 0), 0u);
}

TEST(Cli, ParseErrorsNameFileAndLine) {
  const Result r = run({"enum", data("broken.dfa")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("broken.dfa:5:"), std::string::npos) << r.err;
}

TEST(Cli, EquivAndEnum) {
  EXPECT_EQ(run({"equiv", data("apbcp.nfa"), data("apbcp.dfa")}).out, "equivalent\n");
  const Result ne = run({"equiv", data("apbcp.dfa"), data("aacc_abc.dfa")});
  EXPECT_EQ(ne.code, 1);
  EXPECT_NE(ne.out.find("only in "), std::string::npos);
  EXPECT_EQ(run({"enum", "-n", "4", data("apbcp.nfa")}).out, "a b c\na a b c\na b c c\n");
}

TEST(Cli, ConstructionsEmitAutomata) {
  const Result c = run({"construct", data("aacc_abc.dfa"), data("aacc_abc.dfa")});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out.rfind("# ogi product\n# formula-states: 161\n", 0), 0u) << c.out;

  const Result it = run({"iterate-nfa", "--mode", "logi", "-k", "1", data("aacc_abc.dfa"),
                      data("aacc_abc.dfa")});
  EXPECT_EQ(it.code, 0);
  EXPECT_NE(it.out.find("alphabet: a b c"), std::string::npos);

  EXPECT_EQ(run({"closure-nfa", data("apbcp.dfa")}).code, 0);
  EXPECT_EQ(run({"unary-closure", data("apbcp.dfa")}).code, 2);
}

TEST(Cli, DotIsDeterministic) {
  const Result a = run({"dot", data("apbcp.nfa")});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out.rfind("digraph", 0), 0u);
  EXPECT_EQ(run({"dot", data("apbcp.nfa")}).out, a.out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
