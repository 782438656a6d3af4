#pragma once

// Transition systems over an ordered involutive alphabet, nondeterministic
// automata built on them, deterministic automata, and the inclusion checks
// that relate automata to final segments.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "segments.hpp"

namespace fseg {

using StateId = std::uint32_t;

struct Transition {
  StateId from;
  Letter letter;
  StateId to;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// A finite labelled transition relation. Transitions are kept sorted and
/// deduplicated; a dense adjacency table answers membership queries.
class TransitionSystem {
public:
  TransitionSystem() = default;
  TransitionSystem(AlphabetPtr alphabet, std::size_t states, std::vector<Transition> transitions)
      : alphabet_(std::move(alphabet)), states_(states), transitions_(std::move(transitions)) {
    std::sort(transitions_.begin(), transitions_.end());
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());
    const std::size_t letters = alphabet_->size();
    adjacency_.assign(letters * states_ * states_, 0);
    successors_.assign(states_ * letters, {});
    for (const auto& t : transitions_) {
      if (t.from >= states_ || t.to >= states_ || t.letter >= letters)
        throw input_error("transition references an unknown state or letter");
      adjacency_[index(t.from, t.letter, t.to)] = 1;
      successors_[t.from * letters + t.letter].push_back(t.to);
    }
  }

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return states_; }
  const std::vector<Transition>& transitions() const { return transitions_; }

  bool has(StateId from, Letter a, StateId to) const { return adjacency_[index(from, a, to)] != 0; }

  std::span<const StateId> successors(StateId from, Letter a) const {
    return successors_[from * alphabet_->size() + a];
  }

  /// The subsystem on `keep`; state i of the result is keep[i].
  TransitionSystem induced(std::span<const StateId> keep) const {
    std::vector<std::optional<StateId>> renumber(states_);
    for (std::size_t i = 0; i < keep.size(); ++i) renumber[keep[i]] = static_cast<StateId>(i);
    std::vector<Transition> out;
    for (const auto& t : transitions_)
      if (renumber[t.from] && renumber[t.to]) out.push_back({*renumber[t.from], t.letter, *renumber[t.to]});
    return TransitionSystem(alphabet_, keep.size(), std::move(out));
  }

private:
  std::size_t index(StateId from, Letter a, StateId to) const {
    return (static_cast<std::size_t>(a) * states_ + from) * states_ + to;
  }

  AlphabetPtr alphabet_;
  std::size_t states_ = 0;
  std::vector<Transition> transitions_;
  std::vector<std::uint8_t> adjacency_;
  std::vector<std::vector<StateId>> successors_;
};

/// (M, I, F): a transition system with initial and final state sets.
struct Automaton {
  TransitionSystem system;
  std::vector<StateId> initial;
  std::vector<StateId> final;

  Automaton() = default;
  Automaton(TransitionSystem ts, std::vector<StateId> init, std::vector<StateId> fin)
      : system(std::move(ts)), initial(std::move(init)), final(std::move(fin)) {
    for (auto* set : {&initial, &final}) {
      std::sort(set->begin(), set->end());
      set->erase(std::unique(set->begin(), set->end()), set->end());
      for (StateId s : *set)
        if (s >= system.num_states()) throw input_error("initial/final state out of range");
    }
  }

  const AlphabetPtr& alphabet() const { return system.alphabet(); }
  std::size_t num_states() const { return system.num_states(); }
};

/// Adds every loop, the reversed transition (q, ā, p) of each (p, a, q), and
/// (p, b, q) for every b ≥ a. Idempotent.
inline TransitionSystem saturate(const TransitionSystem& ts) {
  const Alphabet& alpha = *ts.alphabet();
  std::vector<Transition> out;
  for (StateId s = 0; s < ts.num_states(); ++s)
    for (std::size_t a = 0; a < alpha.size(); ++a) out.push_back({s, static_cast<Letter>(a), s});
  for (const auto& t : ts.transitions())
    for (std::size_t b = 0; b < alpha.size(); ++b)
      if (alpha.leq(t.letter, static_cast<Letter>(b))) {
        out.push_back({t.from, static_cast<Letter>(b), t.to});
        out.push_back({t.to, alpha.bar(static_cast<Letter>(b)), t.from});
      }
  return TransitionSystem(ts.alphabet(), ts.num_states(), std::move(out));
}

inline bool is_reflexive_involutive(const TransitionSystem& ts) {
  const Alphabet& alpha = *ts.alphabet();
  for (StateId s = 0; s < ts.num_states(); ++s)
    for (std::size_t a = 0; a < alpha.size(); ++a)
      if (!ts.has(s, static_cast<Letter>(a), s)) return false;
  for (const auto& t : ts.transitions()) {
    if (!ts.has(t.to, alpha.bar(t.letter), t.from)) return false;
    for (std::size_t b = 0; b < alpha.size(); ++b)
      if (alpha.leq(t.letter, static_cast<Letter>(b)) && !ts.has(t.from, static_cast<Letter>(b), t.to))
        return false;
  }
  return true;
}

inline bool accepts(const Automaton& aut, const Word& w) {
  std::vector<std::uint8_t> current(aut.num_states(), 0), next;
  for (StateId s : aut.initial) current[s] = 1;
  for (Letter a : w.letters()) {
    next.assign(aut.num_states(), 0);
    for (StateId s = 0; s < aut.num_states(); ++s)
      if (current[s])
        for (StateId t : aut.system.successors(s, a)) next[t] = 1;
    current.swap(next);
  }
  return std::any_of(aut.final.begin(), aut.final.end(), [&](StateId s) { return current[s] != 0; });
}

/// Complete deterministic automaton. delta[state][letter] is the successor.
struct Dfa {
  AlphabetPtr alphabet;
  StateId start = 0;
  std::vector<std::vector<StateId>> delta;
  std::vector<bool> accepting;

  std::size_t size() const { return delta.size(); }

  StateId run(StateId from, const Word& w) const {
    for (Letter a : w.letters()) from = delta[from][a];
    return from;
  }
  bool accepts(const Word& w) const { return accepting[run(start, w)]; }
};

inline bool accepts(const Dfa& dfa, const Word& w) { return dfa.accepts(w); }

inline Dfa complement(Dfa dfa) {
  dfa.accepting.flip();
  return dfa;
}

namespace detail {

// Rebuilds a word from BFS parent links.
inline Word trace_back(const AlphabetPtr& alpha, std::size_t node,
                       const std::vector<std::pair<std::size_t, Letter>>& parent,
                       std::size_t root_marker) {
  std::vector<Letter> letters;
  while (parent[node].first != root_marker) {
    letters.push_back(parent[node].second);
    node = parent[node].first;
  }
  std::reverse(letters.begin(), letters.end());
  return Word(alpha, std::move(letters));
}

} // namespace detail

/// The deterministic automaton of left residuals u⁻¹F, built on demand.
/// State 0 is F itself; a state accepts iff it is A*.
class ResidualDfa {
public:
  explicit ResidualDfa(FinalSegment f) : alphabet_(f.alphabet()) { intern(std::move(f)); }

  StateId start() const { return 0; }
  std::size_t size() const { return states_.size(); }
  const FinalSegment& state(StateId s) const { return states_[s]; }
  bool accepting(StateId s) const { return states_[s].is_universe(); }
  bool dead(StateId s) const { return states_[s].is_empty(); }

  StateId step(StateId s, Letter a) {
    if (!delta_[s][a]) {
      const StateId t = intern(left_residual(Word(alphabet_, {a}), states_[s]));
      delta_[s][a] = t; // intern may grow delta_, so index again
    }
    return *delta_[s][a];
  }

  /// Explores every reachable state.
  void complete() {
    for (StateId s = 0; s < states_.size(); ++s)
      for (std::size_t a = 0; a < alphabet_->size(); ++a) step(s, static_cast<Letter>(a));
  }

private:
  StateId intern(FinalSegment f) {
    auto [it, inserted] = ids_.emplace(f, static_cast<StateId>(states_.size()));
    if (inserted) {
      states_.push_back(std::move(f));
      delta_.emplace_back(alphabet_->size());
    }
    return it->second;
  }

  AlphabetPtr alphabet_;
  std::vector<FinalSegment> states_;
  std::map<FinalSegment, StateId> ids_;
  std::vector<std::vector<std::optional<StateId>>> delta_;
};

/// The minimal automaton of a final segment: states are the left residuals.
struct MinimalDfa {
  Dfa dfa;
  std::vector<FinalSegment> residuals; // residuals[s] is the language of state s
};

inline MinimalDfa minimal_dfa(const FinalSegment& f) {
  ResidualDfa rd(f);
  rd.complete();
  MinimalDfa out;
  out.dfa.alphabet = f.alphabet();
  out.dfa.start = rd.start();
  for (StateId s = 0; s < rd.size(); ++s) {
    std::vector<StateId> row;
    for (std::size_t a = 0; a < f.alphabet()->size(); ++a) row.push_back(rd.step(s, static_cast<Letter>(a)));
    out.dfa.delta.push_back(std::move(row));
    out.dfa.accepting.push_back(rd.accepting(s));
    out.residuals.push_back(rd.state(s));
  }
  return out;
}

namespace detail {

// Shortest word accepted by `aut` whose residual-DFA run is not accepting,
// i.e. a word of L(aut) outside the segment behind `rd`.
inline std::optional<Word> accepted_outside(const Automaton& aut, ResidualDfa& rd) {
  const std::size_t letters = aut.alphabet()->size();
  std::unordered_map<std::uint64_t, std::size_t> seen;
  std::vector<std::pair<StateId, StateId>> nodes;
  std::vector<std::pair<std::size_t, Letter>> parent;
  constexpr std::size_t root = static_cast<std::size_t>(-1);
  std::deque<std::size_t> queue;
  auto visit = [&](StateId q, StateId d, std::size_t from, Letter a) -> std::optional<std::size_t> {
    if (rd.accepting(d)) return std::nullopt; // every extension stays inside
    const std::uint64_t key = (static_cast<std::uint64_t>(d) << 32) | q;
    if (seen.count(key)) return std::nullopt;
    seen.emplace(key, nodes.size());
    nodes.emplace_back(q, d);
    parent.emplace_back(from, a);
    queue.push_back(nodes.size() - 1);
    return nodes.size() - 1;
  };
  auto is_goal = [&](std::size_t node) {
    return std::binary_search(aut.final.begin(), aut.final.end(), nodes[node].first);
  };
  for (StateId q : aut.initial)
    if (auto n = visit(q, rd.start(), root, 0); n && is_goal(*n))
      return detail::trace_back(aut.alphabet(), *n, parent, root);
  while (!queue.empty()) {
    const std::size_t node = queue.front();
    queue.pop_front();
    const auto [q, d] = nodes[node];
    for (std::size_t a = 0; a < letters; ++a) {
      const StateId d2 = rd.step(d, static_cast<Letter>(a));
      for (StateId q2 : aut.system.successors(q, static_cast<Letter>(a)))
        if (auto n = visit(q2, d2, node, static_cast<Letter>(a)); n && is_goal(*n))
          return detail::trace_back(aut.alphabet(), *n, parent, root);
    }
  }
  return std::nullopt;
}

// Shortest word of the segment behind `rd` that `aut` rejects. Tracks the
// set of automaton states reached, so it is exact for any automaton.
inline std::optional<Word> rejected_inside(const Automaton& aut, ResidualDfa& rd) {
  const std::size_t letters = aut.alphabet()->size();
  using Subset = std::vector<StateId>;
  std::map<std::pair<StateId, Subset>, std::size_t> seen;
  std::vector<std::pair<StateId, Subset>> nodes;
  std::vector<std::pair<std::size_t, Letter>> parent;
  constexpr std::size_t root = static_cast<std::size_t>(-1);
  std::deque<std::size_t> queue;
  auto is_goal = [&](const std::pair<StateId, Subset>& n) {
    if (!rd.accepting(n.first)) return false;
    return std::none_of(n.second.begin(), n.second.end(), [&](StateId s) {
      return std::binary_search(aut.final.begin(), aut.final.end(), s);
    });
  };
  auto visit = [&](StateId d, Subset s, std::size_t from, Letter a) -> std::optional<std::size_t> {
    if (rd.dead(d)) return std::nullopt; // no extension lies in the segment
    std::pair<StateId, Subset> key{d, std::move(s)};
    if (seen.count(key)) return std::nullopt;
    seen.emplace(key, nodes.size());
    nodes.push_back(std::move(key));
    parent.emplace_back(from, a);
    queue.push_back(nodes.size() - 1);
    return nodes.size() - 1;
  };
  if (auto n = visit(rd.start(), aut.initial, root, 0); n && is_goal(nodes[*n]))
    return detail::trace_back(aut.alphabet(), *n, parent, root);
  while (!queue.empty()) {
    const std::size_t node = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < letters; ++a) {
      const StateId d2 = rd.step(nodes[node].first, static_cast<Letter>(a));
      Subset next;
      for (StateId q : nodes[node].second)
        for (StateId q2 : aut.system.successors(q, static_cast<Letter>(a))) next.push_back(q2);
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (auto n = visit(d2, std::move(next), node, static_cast<Letter>(a)); n && is_goal(nodes[*n]))
        return detail::trace_back(aut.alphabet(), *n, parent, root);
    }
  }
  return std::nullopt;
}

} // namespace detail

/// Basis of the language of a reflexive involutive automaton (such a
/// language is up-closed). Repeatedly finds a shortest accepted word outside
/// the segment generated so far; Higman's lemma bounds the number of rounds.
inline FinalSegment accepted_basis(const Automaton& aut) {
  if (!is_reflexive_involutive(aut.system))
    throw precondition_error("accepted_basis needs a reflexive involutive transition system");
  std::vector<Word> basis;
  for (;;) {
    ResidualDfa rd(FinalSegment(aut.alphabet(), basis));
    auto w = detail::accepted_outside(aut, rd);
    if (!w) break;
    basis.push_back(std::move(*w));
    basis = minimal_words(std::move(basis));
  }
  return FinalSegment(aut.alphabet(), std::move(basis));
}

struct LanguageCheck {
  bool equal = false;
  std::optional<Word> witness; // a word in exactly one of the two languages

  explicit operator bool() const { return equal; }
};

/// Decides L(aut) = F exactly. On failure the witness is the shorter of a
/// shortest word in L(aut) \ F and a shortest word in F \ L(aut).
inline LanguageCheck language_equals_segment(const Automaton& aut, const FinalSegment& f) {
  if (!same_alphabet(aut.alphabet(), f.alphabet())) throw alphabet_mismatch();
  ResidualDfa rd(f);
  auto extra = detail::accepted_outside(aut, rd);
  auto missing = detail::rejected_inside(aut, rd);
  if (!extra && !missing) return {true, std::nullopt};
  if (!extra) return {false, std::move(missing)};
  if (!missing) return {false, std::move(extra)};
  return {false, *missing < *extra ? std::move(missing) : std::move(extra)};
}

/// Subset construction restricted to reachable subsets.
inline Dfa determinize(const Automaton& aut) {
  const std::size_t letters = aut.alphabet()->size();
  using Subset = std::vector<StateId>;
  std::map<Subset, StateId> ids;
  std::vector<Subset> subsets;
  Dfa out;
  out.alphabet = aut.alphabet();
  auto intern = [&](Subset s) {
    auto [it, inserted] = ids.emplace(s, static_cast<StateId>(subsets.size()));
    if (inserted) subsets.push_back(std::move(s));
    return it->second;
  };
  out.start = intern(aut.initial);
  for (StateId i = 0; i < subsets.size(); ++i) {
    std::vector<StateId> row;
    for (std::size_t a = 0; a < letters; ++a) {
      Subset next;
      for (StateId q : subsets[i])
        for (StateId q2 : aut.system.successors(q, static_cast<Letter>(a))) next.push_back(q2);
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      row.push_back(intern(std::move(next)));
    }
    out.delta.push_back(std::move(row));
    const auto& s = subsets[i];
    out.accepting.push_back(std::any_of(s.begin(), s.end(), [&](StateId q) {
      return std::binary_search(aut.final.begin(), aut.final.end(), q);
    }));
  }
  return out;
}

/// A complete DFA for a finite language (trie plus a rejecting sink).
inline Dfa dfa_from_words(const AlphabetPtr& alphabet, const std::vector<Word>& words) {
  const std::size_t letters = alphabet->size();
  Dfa out;
  out.alphabet = alphabet;
  constexpr StateId sink = 0;
  out.delta.push_back(std::vector<StateId>(letters, sink));
  out.accepting.push_back(false);
  out.delta.push_back(std::vector<StateId>(letters, sink));
  out.accepting.push_back(false);
  out.start = 1;
  for (const auto& w : words) {
    StateId s = out.start;
    for (Letter a : w.letters()) {
      if (out.delta[s][a] == sink) {
        out.delta[s][a] = static_cast<StateId>(out.size());
        out.delta.push_back(std::vector<StateId>(letters, sink));
        out.accepting.push_back(false);
      }
      s = out.delta[s][a];
    }
    out.accepting[s] = true;
  }
  return out;
}

/// Reachable states of a DFA with a shortest access word for each, in BFS order.
inline std::vector<std::pair<StateId, Word>> reachable_states(const Dfa& dfa) {
  std::vector<std::optional<Word>> access(dfa.size());
  std::vector<std::pair<StateId, Word>> out;
  access[dfa.start] = Word(dfa.alphabet);
  std::deque<StateId> queue{dfa.start};
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    out.emplace_back(s, *access[s]);
    for (std::size_t a = 0; a < dfa.alphabet->size(); ++a) {
      StateId t = dfa.delta[s][a];
      if (!access[t]) {
        access[t] = concat(*access[s], Word(dfa.alphabet, {static_cast<Letter>(a)}));
        queue.push_back(t);
      }
    }
  }
  return out;
}

/// A shortest word accepted from state p and rejected from state q, if any;
/// none means L(p) ⊆ L(q).
inline std::optional<Word> difference_witness(const Dfa& dfa, StateId p, StateId q) {
  const std::size_t n = dfa.size();
  std::vector<std::pair<std::size_t, Letter>> parent(n * n, {0, 0});
  std::vector<std::uint8_t> seen(n * n, 0);
  constexpr std::size_t root = static_cast<std::size_t>(-1);
  std::deque<std::size_t> queue;
  const std::size_t first = p * n + q;
  seen[first] = 1;
  parent[first] = {root, 0};
  queue.push_back(first);
  while (!queue.empty()) {
    const std::size_t node = queue.front();
    queue.pop_front();
    const StateId a = static_cast<StateId>(node / n), b = static_cast<StateId>(node % n);
    if (dfa.accepting[a] && !dfa.accepting[b]) return detail::trace_back(dfa.alphabet, node, parent, root);
    for (std::size_t l = 0; l < dfa.alphabet->size(); ++l) {
      const std::size_t next = dfa.delta[a][l] * n + dfa.delta[b][l];
      if (!seen[next]) {
        seen[next] = 1;
        parent[next] = {node, static_cast<Letter>(l)};
        queue.push_back(next);
      }
    }
  }
  return std::nullopt;
}

/// A bijection f from the states of `a` onto those of `b` with
/// (p, l, q) ∈ T_a ⇔ (f p, l, f q) ∈ T_b and f(I_a) = I_b, f(F_a) = F_b.
inline std::optional<std::vector<StateId>> isomorphism(const Automaton& a, const Automaton& b) {
  const std::size_t n = a.num_states();
  if (n != b.num_states() || a.system.transitions().size() != b.system.transitions().size() ||
      a.initial.size() != b.initial.size() || a.final.size() != b.final.size() ||
      !same_alphabet(a.alphabet(), b.alphabet()))
    return std::nullopt;
  const std::size_t letters = a.alphabet()->size();

  auto signature = [&](const Automaton& aut, StateId s) {
    std::vector<std::size_t> sig;
    sig.push_back(std::binary_search(aut.initial.begin(), aut.initial.end(), s));
    sig.push_back(std::binary_search(aut.final.begin(), aut.final.end(), s));
    std::vector<std::size_t> in(letters, 0);
    for (const auto& t : aut.system.transitions())
      if (t.to == s) ++in[t.letter];
    for (std::size_t l = 0; l < letters; ++l) {
      sig.push_back(aut.system.successors(s, static_cast<Letter>(l)).size());
      sig.push_back(in[l]);
      sig.push_back(aut.system.has(s, static_cast<Letter>(l), s));
    }
    return sig;
  };
  std::vector<std::vector<std::size_t>> sig_a(n), sig_b(n);
  for (StateId s = 0; s < n; ++s) {
    sig_a[s] = signature(a, s);
    sig_b[s] = signature(b, s);
  }
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<StateId> map(n);
  std::vector<std::uint8_t> used(n, 0);
  auto consistent = [&](StateId p, StateId fp) {
    for (StateId s = 0; s < p; ++s)
      for (std::size_t l = 0; l < letters; ++l) {
        const Letter x = static_cast<Letter>(l);
        if (a.system.has(s, x, p) != b.system.has(map[s], x, fp)) return false;
        if (a.system.has(p, x, s) != b.system.has(fp, x, map[s])) return false;
      }
    return true;
  };
  auto search = [&](auto&& self, StateId p) -> bool {
    if (p == n) return true;
    for (StateId c = 0; c < n; ++c) {
      if (used[c] || sig_a[p] != sig_b[c] || !consistent(p, c)) continue;
      map[p] = c;
      used[c] = 1;
      if (self(self, p + 1)) return true;
      used[c] = 0;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return map;
}

inline bool isomorphic(const Automaton& a, const Automaton& b) { return isomorphism(a, b).has_value(); }

/// States other than x and y whose removal disconnects x from y in the
/// underlying undirected graph (loops ignored), ordered by distance from x.
inline std::vector<StateId> articulation_states(const TransitionSystem& ts, StateId x, StateId y) {
  const std::size_t n = ts.num_states();
  std::vector<std::vector<StateId>> adj(n);
  for (const auto& t : ts.transitions())
    if (t.from != t.to) {
      adj[t.from].push_back(t.to);
      adj[t.to].push_back(t.from);
    }
  auto bfs = [&](std::optional<StateId> removed) {
    std::vector<std::size_t> dist(n, static_cast<std::size_t>(-1));
    std::deque<StateId> queue{x};
    dist[x] = 0;
    while (!queue.empty()) {
      StateId s = queue.front();
      queue.pop_front();
      for (StateId t : adj[s])
        if (dist[t] == static_cast<std::size_t>(-1) && t != removed) {
          dist[t] = dist[s] + 1;
          queue.push_back(t);
        }
    }
    return dist;
  };
  const auto base = bfs(std::nullopt);
  std::vector<StateId> out;
  if (x == y || base[y] == static_cast<std::size_t>(-1)) return out;
  for (StateId z = 0; z < n; ++z)
    if (z != x && z != y && bfs(z)[y] == static_cast<std::size_t>(-1)) out.push_back(z);
  std::stable_sort(out.begin(), out.end(), [&](StateId l, StateId r) { return base[l] < base[r]; });
  return out;
}

} // namespace fseg
