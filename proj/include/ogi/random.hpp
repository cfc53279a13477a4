#pragma once

// Seeded random automata for property checks.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include "ogi/alphabet.hpp"
#include "ogi/nfa.hpp"

namespace ogi::random {

inline constexpr std::uint64_t kDefaultSeed = 0x6f67692d63686b;

using Engine = std::mt19937_64;

inline bool coin(Engine& rng, double p) { return std::bernoulli_distribution(p)(rng); }

inline std::size_t uniform(Engine& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// `states` states named s0.., each (state, symbol, state) edge present with
/// probability `density`, each state final with probability `final_p`.
inline Nfa random_nfa(Engine& rng, const Alphabet& alphabet, std::size_t states,
                      double density = 0.3, double final_p = 0.4) {
  Nfa a(alphabet);
  for (std::size_t i = 0; i < states; ++i) a.add_state("s" + std::to_string(i), coin(rng, final_p));
  a.set_initial(0);
  for (StateId q = 0; q < states; ++q)
    for (Symbol c = 0; c < alphabet.size(); ++c)
      for (StateId t = 0; t < states; ++t)
        if (coin(rng, density)) a.add_transition(q, c, t);
  return a;
}

/// Deterministic automaton; each transition is present with probability
/// `defined_p` and leads to a uniformly chosen state.
inline Dfa random_dfa(Engine& rng, const Alphabet& alphabet, std::size_t states,
                      double defined_p = 0.9, double final_p = 0.4) {
  Nfa a(alphabet);
  for (std::size_t i = 0; i < states; ++i) a.add_state("s" + std::to_string(i), coin(rng, final_p));
  a.set_initial(0);
  for (StateId q = 0; q < states; ++q)
    for (Symbol c = 0; c < alphabet.size(); ++c)
      if (coin(rng, defined_p)) a.add_transition(q, c, static_cast<StateId>(uniform(rng, 0, states - 1)));
  return Dfa(a);
}

}  // namespace ogi::random
