#pragma once

// Text formats.
//
// Automaton files:
//
//   alphabet: a b c
//   states: q0 q1 q2
//   initial: q0
//   final: q2
//   q0 a -> q1
//   q1 b -> q1 q2
//
// Language files: an `alphabet:` header followed by one string per line,
// symbols separated by whitespace, `<eps>` for the empty string. In both
// formats lines starting with `#` are comments.

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "ogi/alphabet.hpp"
#include "ogi/error.hpp"
#include "ogi/lang_fragment.hpp"
#include "ogi/nfa.hpp"

namespace ogi::io {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

/// If `line` is `key: rest`, returns rest.
inline std::optional<std::string_view> header(std::string_view line, std::string_view key) {
  if (line.size() > key.size() && line.substr(0, key.size()) == key && line[key.size()] == ':')
    return trim(line.substr(key.size() + 1));
  return std::nullopt;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Makes names unique by appending 'k where needed.
inline std::vector<std::string> unique_names(const Nfa& a) {
  std::vector<std::string> out = a.names();
  std::set<std::string> used;
  for (auto& n : out) {
    std::string candidate = n;
    for (int k = 1; !used.insert(candidate).second; ++k) candidate = n + "'" + std::to_string(k);
    n = candidate;
  }
  return out;
}

}  // namespace detail

inline Nfa parse_automaton(std::string_view text, const std::string& source = "") {
  std::optional<Alphabet> alphabet;
  std::optional<Nfa> nfa;
  std::unordered_map<std::string, StateId> ids;
  bool have_initial = false;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  auto fail = [&](const std::string& msg) { throw ParseError(source, lineno, msg); };
  auto state = [&](const std::string& name) {
    auto it = ids.find(name);
    if (it == ids.end()) fail("unknown state '" + name + "'");
    return it->second;
  };

  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (auto rest = detail::header(line, "alphabet")) {
      if (alphabet) fail("duplicate alphabet line");
      try {
        alphabet = Alphabet(detail::split_ws(*rest));
      } catch (const Error& e) {
        fail(e.what());
      }
      continue;
    }
    if (auto rest = detail::header(line, "states")) {
      if (!alphabet) fail("states line before alphabet line");
      if (nfa) fail("duplicate states line");
      nfa.emplace(*alphabet);
      for (auto& n : detail::split_ws(*rest)) {
        if (n == "->") fail("'->' is not a valid state name");
        if (!ids.emplace(n, nfa->add_state(n)).second) fail("duplicate state '" + n + "'");
      }
      if (nfa->num_states() == 0) fail("automaton needs at least one state");
      continue;
    }
    if (auto rest = detail::header(line, "initial")) {
      if (!nfa) fail("initial line before states line");
      auto toks = detail::split_ws(*rest);
      if (toks.size() != 1) fail("exactly one initial state required");
      if (have_initial) fail("duplicate initial line");
      nfa->set_initial(state(toks[0]));
      have_initial = true;
      continue;
    }
    if (auto rest = detail::header(line, "final")) {
      if (!nfa) fail("final line before states line");
      for (auto& n : detail::split_ws(*rest)) nfa->set_final(state(n));
      continue;
    }
    auto toks = detail::split_ws(line);
    if (toks.size() < 4 || toks[2] != "->") fail("expected 'state symbol -> target...'");
    if (!nfa) fail("transition before states line");
    const StateId from = state(toks[0]);
    const auto sym = alphabet->find(toks[1]);
    if (!sym) fail("symbol '" + toks[1] + "' is not in the alphabet");
    for (std::size_t i = 3; i < toks.size(); ++i) nfa->add_transition(from, *sym, state(toks[i]));
  }
  if (!alphabet) fail("missing alphabet line");
  if (!nfa) fail("missing states line");
  if (!have_initial) fail("missing initial line");
  return std::move(*nfa);
}

inline Nfa load_automaton(const std::string& path) {
  return parse_automaton(detail::read_file(path), path);
}

/// Loads and validates determinism.
inline Dfa load_dfa(const std::string& path) {
  Nfa a = load_automaton(path);
  if (!a.is_deterministic()) throw ParseError(path, 0, "automaton is not deterministic");
  return Dfa(std::move(a));
}

/// Writes `a` in the automaton format. `comments` lines are emitted first,
/// each prefixed with "# ".
inline std::string write_automaton(const Nfa& a, const std::vector<std::string>& comments = {}) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << '\n';
  const auto names = detail::unique_names(a);
  out << "alphabet:";
  for (const auto& t : a.alphabet().tokens()) out << ' ' << t;
  out << "\nstates:";
  for (const auto& n : names) out << ' ' << n;
  out << "\ninitial: " << names.at(a.initial()) << "\nfinal:";
  for (StateId q = 0; q < a.num_states(); ++q)
    if (a.is_final(q)) out << ' ' << names[q];
  out << '\n';
  for (StateId q = 0; q < a.num_states(); ++q)
    for (Symbol s = 0; s < a.alphabet().size(); ++s) {
      const auto& t = a.targets(q, s);
      if (t.empty()) continue;
      out << names[q] << ' ' << a.alphabet().token(s) << " ->";
      for (StateId r : t) out << ' ' << names[r];
      out << '\n';
    }
  return out.str();
}

/// Parses a language file into a fragment whose bound is `bound`, or the
/// longest member's length when `bound` is absent.
inline LangFragment parse_language(std::string_view text, const std::string& source = "",
                                   std::optional<std::size_t> bound = std::nullopt) {
  std::optional<Alphabet> alphabet;
  StringSet strings;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const std::string_view line = detail::trim(raw);
    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) {
      throw ParseError(source, lineno, "empty line (write <eps> for the empty string)");
    }
    if (!alphabet) {
      auto rest = detail::header(line, "alphabet");
      if (!rest) throw ParseError(source, lineno, "expected 'alphabet:' header");
      try {
        alphabet = Alphabet(detail::split_ws(*rest));
      } catch (const Error& e) {
        throw ParseError(source, lineno, e.what());
      }
      continue;
    }
    try {
      strings.insert(alphabet->parse(line));
    } catch (const Error& e) {
      throw ParseError(source, lineno, e.what());
    }
  }
  if (!alphabet) throw ParseError(source, 0, "missing 'alphabet:' header");
  std::size_t longest = strings.empty() ? 0 : strings.rbegin()->size();
  if (bound && *bound < longest)
    throw ParseError(source, 0, "member of length " + std::to_string(longest) +
                                    " exceeds bound " + std::to_string(*bound));
  return LangFragment(*alphabet, bound.value_or(longest), std::move(strings));
}

inline LangFragment load_language(const std::string& path,
                                  std::optional<std::size_t> bound = std::nullopt) {
  return parse_language(detail::read_file(path), path, bound);
}

inline std::string write_language(const LangFragment& l) {
  std::ostringstream out;
  out << "alphabet:";
  for (const auto& t : l.alphabet().tokens()) out << ' ' << t;
  out << '\n';
  for (const auto& w : l.strings()) out << l.alphabet().format(w) << '\n';
  return out.str();
}

/// Strings only, one per line, canonical order.
inline std::string write_strings(const Alphabet& alphabet, const StringSet& strings) {
  std::string out;
  for (const auto& w : strings) out += alphabet.format(w) + '\n';
  return out;
}

namespace detail {
inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}
}  // namespace detail

/// Deterministic DOT rendering: states in name order, parallel edges merged
/// into one edge with a comma-separated label.
inline std::string to_dot(const Nfa& a) {
  const auto names = detail::unique_names(a);
  std::vector<StateId> order(a.num_states());
  for (StateId q = 0; q < order.size(); ++q) order[q] = q;
  std::sort(order.begin(), order.end(), [&](StateId x, StateId y) { return names[x] < names[y]; });

  std::ostringstream out;
  out << "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
  out << "  __start [shape=point];\n";
  for (StateId q : order) {
    out << "  " << detail::dot_quote(names[q]);
    if (a.is_final(q)) out << " [shape=doublecircle]";
    out << ";\n";
  }
  if (a.num_states()) out << "  __start -> " << detail::dot_quote(names[a.initial()]) << ";\n";
  for (StateId q : order) {
    std::map<std::string, std::vector<Symbol>> by_target;
    for (Symbol s = 0; s < a.alphabet().size(); ++s)
      for (StateId t : a.targets(q, s)) by_target[names[t]].push_back(s);
    for (const auto& [target, syms] : by_target) {
      std::string label;
      for (Symbol s : syms) label += (label.empty() ? "" : ",") + a.alphabet().token(s);
      out << "  " << detail::dot_quote(names[q]) << " -> " << detail::dot_quote(target)
          << " [label=" << detail::dot_quote(label) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

/// Reads back the output of to_dot. Only the subset of DOT that to_dot
/// produces is understood; the alphabet must be supplied.
inline Nfa parse_dot(std::string_view text, const Alphabet& alphabet) {
  Nfa a(alphabet);
  std::map<std::string, StateId> ids;
  std::optional<std::string> initial;
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  auto unquote = [](std::string_view s, std::size_t& pos) {
    std::string out;
    ++pos;  // opening quote
    while (pos < s.size() && s[pos] != '"') {
      if (s[pos] == '\\') ++pos;
      out += s[pos++];
    }
    ++pos;
    return out;
  };
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    std::string_view line = detail::trim(raw);
    if (line.rfind("__start -> ", 0) == 0) {
      std::size_t pos = line.find('"');
      initial = unquote(line, pos);
      continue;
    }
    if (line.empty() || line.front() != '"') continue;
    std::size_t pos = 0;
    std::string from = unquote(line, pos);
    std::string_view rest = line.substr(pos);
    if (rest.rfind(" -> ", 0) == 0) {
      pos += 4;
      std::string to = unquote(line, pos);
      std::size_t lp = line.find("label=", pos);
      if (lp == std::string_view::npos) throw ParseError("dot", 0, "edge without label");
      lp += 6;
      edges.emplace_back(from, to, unquote(line, lp));
    } else {
      bool final = rest.find("doublecircle") != std::string_view::npos;
      ids.emplace(from, a.add_state(from, final));
    }
  }
  if (!initial || !ids.count(*initial)) throw ParseError("dot", 0, "missing initial state");
  a.set_initial(ids.at(*initial));
  for (const auto& [from, to, label] : edges) {
    std::istringstream ls(label);
    for (std::string tok; std::getline(ls, tok, ',');)
      a.add_transition(ids.at(from), alphabet.symbol(tok), ids.at(to));
  }
  return a;
}

}  // namespace ogi::io
