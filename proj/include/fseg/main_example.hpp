#pragma once

// Two five-state automata over A = {a, b, c, a′, b′, c′} with ā = a′,
// b̄ = b′, c̄ = c′ and the trivial order, both accepting
// ↑{ab,ac,ba,bc,ca,cb}. Only forward edges are listed; loops and reversed
// edges come from saturation.

#include <string>
#include <vector>

#include "automata.hpp"

namespace fseg::main_example {

struct Edge {
  std::string from;
  std::string letter;
  std::string to;
};

inline const std::vector<std::string>& state_names() {
  static const std::vector<std::string> names{"x", "t", "m", "s", "y"};
  return names;
}

// Left automaton: x -a-> t (top), x -b-> m (middle), x -c-> s (bottom).
inline const std::vector<Edge>& first_edges() {
  static const std::vector<Edge> edges{
      {"x", "a", "t"}, {"x", "b", "m"}, {"x", "c", "s"},
      {"t", "b", "y"}, {"t", "c", "y"},
      {"m", "a", "y"}, {"m", "c", "y"},
      {"s", "a", "y"}, {"s", "b", "y"},
  };
  return edges;
}

// Right automaton: the middle vertex is entered by a or c and left by b.
inline const std::vector<Edge>& second_edges() {
  static const std::vector<Edge> edges{
      {"x", "b", "t"}, {"x", "c", "t"}, {"t", "a", "y"},
      {"x", "a", "s"}, {"x", "b", "s"}, {"s", "c", "y"},
      {"x", "a", "m"}, {"x", "c", "m"}, {"m", "b", "y"},
  };
  return edges;
}

inline AlphabetPtr alphabet() {
  return make_alphabet({"a", "b", "c", "a′", "b′", "c′"}, {}, {{"a", "a′"}, {"b", "b′"}, {"c", "c′"}});
}

/// Basis of the accepted language.
inline const std::vector<std::string>& language() {
  static const std::vector<std::string> words{"ab", "ac", "ba", "bc", "ca", "cb"};
  return words;
}

/// The saturated automaton (M, {x}, {y}) of an edge list.
inline Automaton build(const AlphabetPtr& alpha, const std::vector<Edge>& edges) {
  const auto& names = state_names();
  auto state = [&](const std::string& s) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return static_cast<StateId>(i);
    throw input_error("unknown state '" + s + "'");
  };
  std::vector<Transition> ts;
  for (const auto& e : edges) {
    auto letter = alpha->find(e.letter);
    if (!letter) throw input_error("unknown letter '" + e.letter + "'");
    ts.push_back({state(e.from), *letter, state(e.to)});
  }
  return Automaton(saturate(TransitionSystem(alpha, names.size(), std::move(ts))), {state("x")}, {state("y")});
}

} // namespace fseg::main_example
