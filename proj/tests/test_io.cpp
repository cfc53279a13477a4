#include <gtest/gtest.h>

#include "ogi/constructions.hpp"
#include "ogi/io.hpp"
#include "ogi/random.hpp"
#include "oracle.hpp"

using namespace ogi;

TEST(AutomatonFormat, ParsesTheDocumentedExample) {
  const Nfa a = io::parse_automaton(R"(alphabet: a b c
states: q0 q1 q2
initial: q0
final: q2
q0 a -> q1
q1 b -> q1 q2
)");
  EXPECT_EQ(a.num_states(), 3u);
  EXPECT_EQ(oracle::language(a, 4), (oracle::Set{"ab", "abb", "abbb"}));
}

TEST(AutomatonFormat, CommentsAndBlankLines) {
  const Nfa a = io::parse_automaton(R"(# header comment
alphabet: a

states: s
# another
initial: s
final: s
s a -> s
)");
  EXPECT_TRUE(accepts(a, Alphabet::of_chars("a").parse_chars("aaa")));
}

TEST(AutomatonFormat, ErrorsNameTheLine) {
  const char* bad = "alphabet: a\nstates: s\ninitial: s\nfinal: s\ns b -> s\n";
  try {
    io::parse_automaton(bad, "m.nfa");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5u);
    EXPECT_EQ(e.source(), "m.nfa");
    EXPECT_NE(std::string(e.what()).find("m.nfa:5:"), std::string::npos);
  }
  EXPECT_THROW(io::parse_automaton("states: s\n"), ParseError);
  EXPECT_THROW(io::parse_automaton("alphabet: a\nstates: s\nfinal: s\n"), ParseError);
  EXPECT_THROW(io::parse_automaton("alphabet: a\nstates: s\ninitial: t\n"), ParseError);
  EXPECT_THROW(io::parse_automaton("alphabet: a\nstates: s\ninitial: s\ns a s\n"), ParseError);
}

TEST(AutomatonFormat, WriteParseRoundTrip) {
  const Alphabet ab = Alphabet::of_chars("ab");
  random::Engine rng(11);
  for (int t = 0; t < 20; ++t) {
    const Nfa a = random::random_nfa(rng, ab, random::uniform(rng, 1, 5));
    const Nfa b = io::parse_automaton(io::write_automaton(a, {"random"}));
    ASSERT_EQ(enumerate_upto(a, 8), enumerate_upto(b, 8));
  }
}

TEST(AutomatonFormat, ProductStateNamesSurviveRoundTrip) {
  const Alphabet ab = Alphabet::of_chars("ab");
  const Nfa t = from_strings(ab, {ab.parse_chars("ab"), ab.parse_chars("aab")});
  const Construction c = ogi_construction(t, t);
  const std::string text = io::write_automaton(c.nfa, c.stats.comments("ogi"));
  EXPECT_EQ(text.rfind("# ogi\n# formula-states: ", 0), 0u);
  const Nfa back = io::parse_automaton(text);
  EXPECT_EQ(back.num_states(), c.nfa.num_states());
  EXPECT_EQ(enumerate_upto(back, 8), enumerate_upto(c.nfa, 8));
}

TEST(LanguageFormat, ParsesAndWrites) {
  const LangFragment l = io::parse_language("alphabet: a b\n# c\nb a\n<eps>\na\n", "l.txt");
  EXPECT_EQ(oracle::set(l), (oracle::Set{"", "a", "ba"}));
  EXPECT_EQ(l.bound(), 2u);
  EXPECT_EQ(io::write_language(l), "alphabet: a b\n<eps>\na\nb a\n");
  EXPECT_EQ(io::parse_language(io::write_language(l)), l);
}

TEST(LanguageFormat, Errors) {
  EXPECT_THROW(io::parse_language("a b\n"), ParseError);
  EXPECT_THROW(io::parse_language("alphabet: a\n\na\n"), ParseError);
  EXPECT_THROW(io::parse_language("alphabet: a\nb\n"), ParseError);
  EXPECT_THROW(io::parse_language("alphabet: a\na a a\n", "", 2), ParseError);
  try {
    io::parse_language("alphabet: a b\na\nc\n", "lang.txt");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Dot, Examples) {
  const Alphabet ab = Alphabet::of_chars("ab");
  const std::string empty = io::to_dot(empty_language(ab));
  EXPECT_EQ(std::count(empty.begin(), empty.end(), '\n') > 0, true);
  EXPECT_EQ(empty.find("doublecircle"), std::string::npos);

  const Nfa t = from_strings(ab, {ab.parse_chars("ab")});
  const std::string dot = io::to_dot(t);
  std::size_t nodes = 0, edges = 0;
  std::istringstream in(dot);
  for (std::string line; std::getline(in, line);) {
    if (line.find("label=") != std::string::npos) ++edges;
    else if (line.rfind("  \"", 0) == 0 && line.find("->") == std::string::npos) ++nodes;
  }
  EXPECT_EQ(nodes, 3u);
  EXPECT_EQ(edges, 2u);
  EXPECT_EQ(io::to_dot(t), dot);
}

TEST(Dot, NodeCountMatchesConstructionMetadata) {
  const Alphabet ab = Alphabet::of_chars("ab");
  const Nfa a = io::parse_automaton("alphabet: a b\nstates: s t\ninitial: s\nfinal: t\ns a -> t\nt b -> s\n");
  const Nfa b = io::parse_automaton("alphabet: a b\nstates: u v\ninitial: u\nfinal: v\nu a -> v\nv b -> v\n");
  const Construction c = ogi_construction(a, b);
  const Nfa back = io::parse_dot(io::to_dot(c.nfa), ab);
  EXPECT_EQ(back.num_states(), c.stats.emitted_states);
  EXPECT_LE(c.stats.emitted_states, c.stats.formula_states);
}

TEST(Dot, RoundTripPreservesLanguage) {
  const Alphabet ab = Alphabet::of_chars("ab");
  random::Engine rng(12);
  for (int t = 0; t < 20; ++t) {
    const Nfa a = random::random_nfa(rng, ab, random::uniform(rng, 1, 5));
    ASSERT_EQ(enumerate_upto(io::parse_dot(io::to_dot(a), ab), 8), enumerate_upto(a, 8));
  }
}
