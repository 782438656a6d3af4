#pragma once

// Minmax automata: among reflexive involutive acceptors (M, {x}, {y}) of F,
// those with the fewest states and then the most transitions. Every minmax
// automaton is isomorphic to an induced subautomaton of 𝒜_F, so the search
// runs over subsets of the envelope that contain x and y.

#include <deque>
#include <optional>
#include <vector>

#include "envelope.hpp"
#include "main_example.hpp"

namespace fseg {

struct MinmaxAutomaton {
  Automaton automaton;
  std::vector<StateId> elements; // envelope indices, automaton state i is elements[i]
};

struct MinmaxResult {
  std::size_t min_states = 0;
  std::size_t max_transitions = 0;
  std::vector<MinmaxAutomaton> automata; // pairwise non-isomorphic
  std::size_t subsets_checked = 0;
};

inline constexpr std::size_t default_minmax_cap = 20;

namespace detail {

inline bool connected(const TransitionSystem& ts, StateId x, StateId y) {
  std::vector<std::uint8_t> seen(ts.num_states(), 0);
  std::deque<StateId> queue{x};
  seen[x] = 1;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    if (s == y) return true;
    for (const auto& t : ts.transitions())
      if (t.from == s && !seen[t.to]) {
        seen[t.to] = 1;
        queue.push_back(t.to);
      }
  }
  return false;
}

// Each letter of a basis word must label a transition between distinct
// states: otherwise deleting it from the word keeps the word accepted.
inline bool letters_used(const TransitionSystem& ts, const std::vector<Letter>& needed) {
  std::vector<std::uint8_t> used(ts.alphabet()->size(), 0);
  for (const auto& t : ts.transitions())
    if (t.from != t.to) used[t.letter] = 1;
  return std::all_of(needed.begin(), needed.end(), [&](Letter a) { return used[a] != 0; });
}

} // namespace detail

/// Exhaustive search over induced subautomata of 𝒜_F by increasing size.
/// Throws cap_exceeded when |S_F| > cap.
inline MinmaxResult search_minmax(const FinalSegment& f, std::size_t cap = default_minmax_cap) {
  if (f.is_empty()) throw precondition_error("no automaton (M, {x}, {y}) accepts the empty segment");
  const EnvelopeLattice env = build_envelope(f);
  if (env.size() > cap)
    throw cap_exceeded("envelope has " + std::to_string(env.size()) + " elements, cap is " + std::to_string(cap));

  std::vector<Letter> needed;
  for (const auto& w : f.basis())
    for (Letter a : w.letters()) needed.push_back(a);
  std::sort(needed.begin(), needed.end());
  needed.erase(std::unique(needed.begin(), needed.end()), needed.end());

  std::vector<StateId> others;
  for (StateId s = 0; s < env.size(); ++s)
    if (s != env.x() && s != env.y()) others.push_back(s);
  const std::size_t base = env.x() == env.y() ? 1 : 2;

  MinmaxResult result;
  for (std::size_t extra = 0; extra <= others.size(); ++extra) {
    std::vector<MinmaxAutomaton> found;
    std::vector<std::size_t> pick(extra);
    for (std::size_t i = 0; i < extra; ++i) pick[i] = i;
    for (;;) {
      std::vector<StateId> keep{env.x()};
      if (env.y() != env.x()) keep.push_back(env.y());
      for (std::size_t i : pick) keep.push_back(others[i]);
      std::sort(keep.begin(), keep.end());
      auto pos = [&](StateId s) { return static_cast<StateId>(std::lower_bound(keep.begin(), keep.end(), s) - keep.begin()); };
      TransitionSystem sub = env.system().induced(keep);
      ++result.subsets_checked;
      if (detail::connected(sub, pos(env.x()), pos(env.y())) && detail::letters_used(sub, needed)) {
        Automaton aut(std::move(sub), {pos(env.x())}, {pos(env.y())});
        if (language_equals_segment(aut, f).equal) found.push_back({std::move(aut), keep});
      }
      // next combination of `extra` indices out of others.size()
      std::size_t i = extra;
      while (i > 0 && pick[i - 1] == others.size() - extra + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < extra; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (found.empty()) continue;

    result.min_states = base + extra;
    for (const auto& m : found)
      result.max_transitions = std::max(result.max_transitions, m.automaton.system.transitions().size());
    for (auto& m : found) {
      if (m.automaton.system.transitions().size() != result.max_transitions) continue;
      bool duplicate = std::any_of(result.automata.begin(), result.automata.end(),
                                   [&](const MinmaxAutomaton& r) { return isomorphic(r.automaton, m.automaton); });
      if (!duplicate) result.automata.push_back(std::move(m));
    }
    return result;
  }
  throw error("no induced subautomaton of the envelope accepts " + to_string(f));
}

/// Saturates `aut`, checks that it accepts F, and compares its state and
/// transition counts with the optimum.
inline bool is_minmax(const Automaton& aut, const FinalSegment& f, std::size_t cap = default_minmax_cap) {
  Automaton sat(saturate(aut.system), aut.initial, aut.final);
  if (sat.initial.size() != 1 || sat.final.size() != 1) return false;
  if (!language_equals_segment(sat, f).equal) return false;
  const MinmaxResult best = search_minmax(f, cap);
  return sat.num_states() == best.min_states && sat.system.transitions().size() == best.max_transitions;
}

struct MainExampleReport {
  FinalSegment language;
  std::size_t envelope_size = 0;
  std::size_t states[2] = {0, 0};
  std::size_t transitions[2] = {0, 0};
  bool accepts[2] = {false, false};
  bool minmax[2] = {false, false};
  bool isomorphic = true;
  MinmaxResult search;

  bool ok() const { return accepts[0] && accepts[1] && minmax[0] && minmax[1] && !isomorphic; }
};

/// Builds both automata of the example and checks that they accept the same
/// segment, are minmax and are not isomorphic.
inline MainExampleReport reproduce_main_example() {
  const AlphabetPtr alpha = main_example::alphabet();
  MainExampleReport r;
  r.language = make_segment(alpha, main_example::language());
  r.envelope_size = build_envelope(r.language).size();
  r.search = search_minmax(r.language);
  const Automaton auts[2] = {main_example::build(alpha, main_example::first_edges()),
                             main_example::build(alpha, main_example::second_edges())};
  for (int i = 0; i < 2; ++i) {
    r.states[i] = auts[i].num_states();
    r.transitions[i] = auts[i].system.transitions().size();
    r.accepts[i] = language_equals_segment(auts[i], r.language).equal;
    r.minmax[i] = r.accepts[i] && r.states[i] == r.search.min_states && r.transitions[i] == r.search.max_transitions;
  }
  r.isomorphic = fseg::isomorphic(auts[0], auts[1]);
  return r;
}

} // namespace fseg
