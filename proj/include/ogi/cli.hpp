#pragma once

// Command-line front end. `run` is the whole program minus main(), so tests
// can drive it with captured streams.
//
// Exit status: 0 success, 1 negative answer (decide: not closed, equiv: not
// equivalent, trace: not derivable, replay: a fixture failed), 2 bad input.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ogi/alphabet.hpp"
#include "ogi/closure.hpp"
#include "ogi/constructions.hpp"
#include "ogi/decision.hpp"
#include "ogi/error.hpp"
#include "ogi/fixtures.hpp"
#include "ogi/io.hpp"
#include "ogi/nfa.hpp"
#include "ogi/string_ops.hpp"

namespace ogi::cli {

namespace detail {

/// Words of a single-character alphabet print without separators.
inline std::string display(const Alphabet& al, const SymbolString& w) {
  for (const auto& t : al.tokens())
    if (t.size() != 1) return al.format(w);
  return al.compact(w);
}

inline std::string show_decomposition(const Alphabet& al, const Decomposition& d) {
  return display(al, d.x1) + " | " + display(al, d.u) + " | " + display(al, d.z) + " | " +
         display(al, d.v) + " | " + display(al, d.x2);
}

inline std::vector<std::string> tokens_of(const std::string& text, bool chars) {
  std::vector<std::string> out;
  if (chars) {
    if (text == kEpsilonToken) return out;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) out.emplace_back(1, c);
    return out;
  }
  std::istringstream in(text);
  for (std::string t; in >> t;)
    if (t != kEpsilonToken) out.push_back(t);
  return out;
}

struct Common {
  std::string op = "ogi";
  std::string mode = "general";
  std::size_t bound = 8;
  std::size_t cap = 200'000;
  bool chars = false;
  std::string alphabet;
};

inline OpKind op_of(const std::string& name) {
  auto op = parse_op(name);
  if (!op) throw InvalidArgument("unknown operation '" + name + "'");
  return *op;
}

inline ClosureMode mode_of(const std::string& name) {
  auto m = parse_mode(name);
  if (!m) throw InvalidArgument("unknown closure mode '" + name + "'");
  return *m;
}

inline IterationMode iteration_of(const std::string& name) {
  for (IterationMode m : {IterationMode::ogi_general, IterationMode::rogi, IterationMode::logi})
    if (to_string(m) == name) return m;
  throw InvalidArgument("unknown iteration mode '" + name + "'");
}

inline SymbolString word(const Alphabet& al, const std::string& text, bool chars) {
  return chars ? al.parse_chars(text) : al.parse(text);
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Outfix-guided insertion toolkit", "ogi"};
  app.require_subcommand(1);
  detail::Common c;

  auto add_op = [&](CLI::App* s) {
    s->add_option("--op", c.op, "ogi, pgi, sgi, nol or oc2")->capture_default_str();
  };
  auto add_closure_flags = [&](CLI::App* s) {
    add_op(s);
    s->add_option("--mode", c.mode, "general, left or right")->capture_default_str();
    s->add_option("-n,--bound", c.bound, "length bound")->capture_default_str();
    s->add_option("--cap", c.cap, "maximum number of strings")->capture_default_str();
  };

  std::string x, y, target, file1, file2;
  std::size_t stage_index = 0, k = 1, state_cap = 4096;
  std::uint64_t seed = random::kDefaultSeed;
  bool json = false, compact_flag = false, unpruned = false, force = false, decompositions = false;

  auto* insert_cmd = app.add_subcommand("insert", "insert one string into another");
  add_op(insert_cmd);
  insert_cmd->add_option("--x", x, "target string")->required();
  insert_cmd->add_option("--y", y, "inserted string")->required();
  insert_cmd->add_flag("--chars", c.chars, "every character is one symbol");
  insert_cmd->add_option("--alphabet", c.alphabet, "symbol tokens (default: those used)");
  insert_cmd->add_flag("--decompositions", decompositions, "print every decomposition");

  auto* closure = app.add_subcommand("closure", "bounded closure of a finite language");
  add_closure_flags(closure);
  closure->add_option("L1", file1, "language file")->required()->check(CLI::ExistingFile);
  closure->add_option("L2", file2, "second language (left/right modes)")->check(CLI::ExistingFile);

  auto* stage = app.add_subcommand("stage", "one stage of the iterated insertion");
  add_closure_flags(stage);
  stage->add_option("-i,--stage", stage_index, "stage index")->required();
  stage->add_option("L1", file1, "language file")->required()->check(CLI::ExistingFile);
  stage->add_option("L2", file2, "second language (left/right modes)")->check(CLI::ExistingFile);

  auto* trace_cmd = app.add_subcommand("trace", "derivation of a string in the bounded closure");
  add_closure_flags(trace_cmd);
  trace_cmd->add_option("--target", target, "string to derive")->required();
  trace_cmd->add_flag("--chars", c.chars, "every character of the target is one symbol");
  trace_cmd->add_option("L1", file1, "language file")->required()->check(CLI::ExistingFile);
  trace_cmd->add_option("L2", file2, "second language (left/right modes)")->check(CLI::ExistingFile);

  auto* construct = app.add_subcommand("construct", "automaton for L(A) op L(B)");
  add_op(construct);
  construct->add_flag("--unpruned", unpruned, "emit the full product state space");
  construct->add_option("A", file1, "target automaton")->required()->check(CLI::ExistingFile);
  construct->add_option("B", file2, "inserted automaton")->required()->check(CLI::ExistingFile);

  auto* closure_nfa = app.add_subcommand("closure-nfa", "2-overlap catenation closure automaton");
  closure_nfa->add_option("--cap", state_cap, "subset state limit")->capture_default_str();
  closure_nfa->add_option("A", file1, "automaton")->required()->check(CLI::ExistingFile);

  auto* unary = app.add_subcommand("unary-closure", "ogi closure automaton of a unary language");
  unary->add_option("--cap", state_cap, "subset state limit")->capture_default_str();
  unary->add_option("A", file1, "automaton")->required()->check(CLI::ExistingFile);

  std::string iteration = "ogi-general";
  auto* iterate = app.add_subcommand("iterate-nfa", "automaton for stage k of an iterated insertion");
  iterate->add_option("--mode", iteration, "ogi-general, rogi or logi")->capture_default_str();
  iterate->add_option("-k,--stages", k, "number of stages")->capture_default_str();
  iterate->add_flag("--compact", compact_flag, "determinise and trim between stages");
  iterate->add_option("A", file1, "first automaton")->required()->check(CLI::ExistingFile);
  iterate->add_option("B", file2, "second automaton (rogi, logi)")->check(CLI::ExistingFile);

  auto* decide = app.add_subcommand("decide", "is L(A) closed under ogi?");
  decide->add_flag("--force-determinize", force, "accept an NFA by determinising it first");
  decide->add_option("A", file1, "deterministic automaton")->required()->check(CLI::ExistingFile);

  auto* enumerate = app.add_subcommand("enum", "strings of L(A) up to a length");
  enumerate->add_option("-n,--bound", c.bound, "length bound")->capture_default_str();
  enumerate->add_option("A", file1, "automaton")->required()->check(CLI::ExistingFile);

  auto* equiv = app.add_subcommand("equiv", "language equivalence of two automata");
  equiv->add_option("A", file1, "automaton")->required()->check(CLI::ExistingFile);
  equiv->add_option("B", file2, "automaton")->required()->check(CLI::ExistingFile);

  auto* dot = app.add_subcommand("dot", "Graphviz rendering of an automaton");
  dot->add_option("A", file1, "automaton")->required()->check(CLI::ExistingFile);

  auto* replay = app.add_subcommand("replay", "run the reproduction fixtures");
  replay->add_flag("--json", json, "machine-readable report");
  replay->add_option("--seed", seed, "seed for the randomised fixtures")->capture_default_str();

  std::vector<const char*> argv{"ogi"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  auto closure_spec = [&] {
    return ClosureSpec{detail::op_of(c.op), detail::mode_of(c.mode), c.bound, c.cap};
  };
  auto operands = [&]() -> std::pair<LangFragment, std::optional<LangFragment>> {
    LangFragment l1 = io::load_language(file1, c.bound);
    if (file2.empty()) return {std::move(l1), std::nullopt};
    return {std::move(l1), io::load_language(file2, c.bound)};
  };

  try {
    if (insert_cmd->parsed()) {
      std::vector<std::string> toks;
      if (!c.alphabet.empty()) {
        toks = detail::tokens_of(c.alphabet, false);
      } else {
        std::set<std::string> seen;
        for (const auto* s : {&x, &y})
          for (auto& t : detail::tokens_of(*s, c.chars)) seen.insert(t);
        toks.assign(seen.begin(), seen.end());
      }
      const Alphabet al(toks);
      const OpKind op = detail::op_of(c.op);
      const SymbolString sx = detail::word(al, x, c.chars), sy = detail::word(al, y, c.chars);
      if (decompositions) {
        for (const auto& d : ogi::decompositions(op, sx, sy))
          out << al.format(d.result()) << "\t" << detail::show_decomposition(al, d) << '\n';
      } else {
        out << io::write_strings(al, ogi::insert(op, sx, sy));
      }
      return 0;
    }

    if (closure->parsed() || stage->parsed()) {
      const ClosureSpec spec = closure_spec();
      auto [l1, l2] = operands();
      const LangFragment* second = l2 ? &*l2 : nullptr;
      const LangFragment result = closure->parsed()
                                      ? bounded_closure(spec, l1, second)
                                      : bounded_stage(spec, l1, second, stage_index);
      out << io::write_strings(result.alphabet(), result.strings());
      return 0;
    }

    if (trace_cmd->parsed()) {
      const ClosureSpec spec = closure_spec();
      auto [l1, l2] = operands();
      const Alphabet& al = l1.alphabet();
      const SymbolString w = detail::word(al, target, c.chars);
      const auto d = trace(w, spec, l1, l2 ? &*l2 : nullptr);
      if (!d) {
        out << "not derivable within bound " << spec.bound << '\n';
        return 1;
      }
      out << "seed: " << detail::display(al, d->seed) << '\n';
      std::size_t i = 0;
      for (const auto& s : d->steps) {
        const Decomposition& dec = s.decomposition;
        out << ++i << ". " << detail::display(al, s.target) << " —["
            << detail::display(al, dec.u) << '|' << detail::display(al, dec.z) << '|'
            << detail::display(al, dec.v) << " @ " << dec.x1.size() + 1 << "]→ "
            << detail::display(al, s.result);
        if (spec.mode == ClosureMode::right || s.inserted != s.target)
          out << "   (inserted " << detail::display(al, s.inserted) << ')';
        out << '\n';
      }
      return 0;
    }

    if (construct->parsed()) {
      const Nfa a = io::load_automaton(file1), b = io::load_automaton(file2);
      const ProductOptions opt{!unpruned};
      const OpKind op = detail::op_of(c.op);
      Construction result = [&] {
        switch (op) {
          case OpKind::ogi: return ogi_construction(a, b, opt);
          case OpKind::pgi: return pgi_construction(a, b, opt);
          case OpKind::sgi: return sgi_construction(a, b, opt);
          default: throw InvalidArgument("construct supports ogi, pgi and sgi");
        }
      }();
      out << io::write_automaton(result.nfa, result.stats.comments(c.op + " product"));
      return 0;
    }

    if (closure_nfa->parsed() || unary->parsed()) {
      const Nfa a = io::load_automaton(file1);
      const ClosureNfaOptions opt{state_cap};
      const Construction r = unary->parsed()
                                 ? Construction{unary_ogi_closure_nfa(a, opt), {}}
                                 : oc2_closure_construction(a, opt);
      out << io::write_automaton(
          r.nfa, {unary->parsed() ? "unary ogi closure" : "2-overlap catenation closure",
                  "states: " + std::to_string(r.nfa.num_states())});
      return 0;
    }

    if (iterate->parsed()) {
      const IterationMode mode = detail::iteration_of(iteration);
      const Nfa a = io::load_automaton(file1);
      std::optional<Nfa> b;
      if (!file2.empty()) b = io::load_automaton(file2);
      const Iteration it = iterate_nfa(mode, a, b ? &*b : nullptr, k, {compact_flag});
      std::vector<std::string> comments{std::string(to_string(mode)) + " stage " + std::to_string(k)};
      for (std::size_t i = 0; i < it.stages.size(); ++i)
        comments.push_back("stage " + std::to_string(i + 1) + ": formula-states " +
                           std::to_string(it.stages[i].formula_states) + ", emitted-states " +
                           std::to_string(it.stages[i].emitted_states));
      out << io::write_automaton(it.nfa, comments);
      return 0;
    }

    if (decide->parsed()) {
      const Nfa a = io::load_automaton(file1);
      const ClosureVerdict v = is_og_closed(a, force);
      const Alphabet& al = a.alphabet();
      out << (v.closed ? "closed" : "not-closed") << '\n';
      if (!v.closed) {
        out << "witness: " << al.format(*v.witness) << '\n';
        if (v.decomposition)
          out << "decomposition: " << al.format(*v.target) << " <- " << al.format(*v.inserted)
              << " as " << detail::show_decomposition(al, *v.decomposition) << '\n';
      }
      out << "states: dfa " << v.dfa_states << ", insertion " << v.insertion_states << " (formula "
          << v.insertion_formula_states << "), complement " << v.complement_states << ", product "
          << v.product_states << '\n';
      return v.closed ? 0 : 1;
    }

    if (enumerate->parsed()) {
      const Nfa a = io::load_automaton(file1);
      const LangFragment l = enumerate_upto(a, c.bound);
      out << io::write_strings(l.alphabet(), l.strings());
      return 0;
    }

    if (equiv->parsed()) {
      const Nfa a = io::load_automaton(file1), b = io::load_automaton(file2);
      require_same_alphabet(a.alphabet(), b.alphabet());
      if (auto w = inclusion_counterexample(a, b)) {
        out << "not-equivalent\nonly in " << file1 << ": " << a.alphabet().format(*w) << '\n';
        return 1;
      }
      if (auto w = inclusion_counterexample(b, a)) {
        out << "not-equivalent\nonly in " << file2 << ": " << a.alphabet().format(*w) << '\n';
        return 1;
      }
      out << "equivalent\n";
      return 0;
    }

    if (dot->parsed()) {
      out << io::to_dot(io::load_automaton(file1));
      return 0;
    }

    if (replay->parsed()) {
      const auto outcomes = fixtures::run_all({seed});
      bool all = true;
      nlohmann::json report = nlohmann::json::array();
      for (const auto& o : outcomes) {
        all = all && o.passed;
        if (json) {
          report.push_back({{"id", o.id}, {"name", o.name}, {"passed", o.passed},
                            {"detail", o.detail}, {"seconds", o.seconds}});
        } else {
          out << "[" << (o.passed ? "PASS" : "FAIL") << "] " << o.id << ". " << o.name << " -- "
              << o.detail << '\n';
        }
      }
      if (json) out << nlohmann::json{{"seed", seed}, {"passed", all}, {"fixtures", report}}.dump(2) << '\n';
      return all ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace ogi::cli
