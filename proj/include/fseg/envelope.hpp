#pragma once

// The injective envelope S_F of the two-point space {x, y} with d(x, y) = F.
//
// S_F is realised as the set of intersections of right residuals F v⁻¹,
// a finite lattice under inclusion with x = A* and y = F. Two elements P, Q
// are joined by a letter a iff P·a ⊆ Q and Q·ā ⊆ P; the resulting reflexive
// involutive transition system M_F accepts exactly F between x and y.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "automata.hpp"
#include "metric.hpp"
#include "segments.hpp"

namespace fseg {

/// {F v⁻¹ : v ∈ A*}, closed from F under single-letter right residuals,
/// in canonical order.
inline std::vector<FinalSegment> residual_closure(const FinalSegment& f) {
  if (f.is_empty()) throw precondition_error("residual closure of the empty segment");
  std::set<FinalSegment> seen{f};
  std::deque<FinalSegment> queue{f};
  while (!queue.empty()) {
    FinalSegment g = std::move(queue.front());
    queue.pop_front();
    for (std::size_t a = 0; a < f.alphabet()->size(); ++a) {
      FinalSegment r = right_residual(g, Word(f.alphabet(), {static_cast<Letter>(a)}));
      if (seen.insert(r).second) queue.push_back(std::move(r));
    }
  }
  return {seen.begin(), seen.end()};
}

/// d_H(p, q) = {w : p·w ⊆ q and q·w̄ ⊆ p}, computed from residuals:
/// p·↑w ⊆ q iff w lies in every u⁻¹q for u in the basis of p.
inline FinalSegment hdist(const FinalSegment& p, const FinalSegment& q) {
  const AlphabetPtr& alpha = p.alphabet();
  auto forward = [&](const FinalSegment& from, const FinalSegment& to) {
    FinalSegment out = FinalSegment::universe(alpha);
    for (const auto& u : from.basis()) out = intersect(out, left_residual(u, to));
    return out;
  };
  return intersect(forward(p, q), involute(forward(q, p)));
}

/// Does the letter a belong to d_H(p, q)?
inline bool letter_joins(const FinalSegment& p, Letter a, const FinalSegment& q) {
  const AlphabetPtr& alpha = p.alphabet();
  const Word fwd(alpha, {a}), back(alpha, {alpha->bar(a)});
  for (const auto& u : p.basis())
    if (!q.contains(concat(u, fwd))) return false;
  for (const auto& u : q.basis())
    if (!p.contains(concat(u, back))) return false;
  return true;
}

class EnvelopeLattice;
inline EnvelopeLattice build_envelope(const FinalSegment& f);

class EnvelopeLattice {
public:
  const AlphabetPtr& alphabet() const { return target_.alphabet(); }
  const FinalSegment& target() const { return target_; }
  const std::vector<FinalSegment>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const FinalSegment& operator[](std::size_t i) const { return elements_[i]; }

  /// Index of A*.
  StateId x() const { return x_; }
  /// Index of F.
  StateId y() const { return y_; }

  /// Cover pairs (i, j): elements[j] is a maximal proper subset of elements[i].
  const std::vector<std::pair<StateId, StateId>>& hasse() const { return hasse_; }

  /// M_F on the element indices.
  const TransitionSystem& system() const { return system_; }

  /// (M_F, {x}, {y}).
  Automaton automaton() const { return Automaton(system_, {x_}, {y_}); }

  std::optional<StateId> index_of(const FinalSegment& f) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), f);
    if (it == elements_.end() || *it != f) return std::nullopt;
    return static_cast<StateId>(it - elements_.begin());
  }

  StateId require(const FinalSegment& f) const {
    auto i = index_of(f);
    if (!i) throw precondition_error(to_string(f) + " is not an element of the envelope");
    return *i;
  }

private:
  friend EnvelopeLattice build_envelope(const FinalSegment& f);

  FinalSegment target_;
  std::vector<FinalSegment> elements_;
  StateId x_ = 0, y_ = 0;
  std::vector<std::pair<StateId, StateId>> hasse_;
  TransitionSystem system_;
};

/// Elements are the intersection closure of the residual closure of F
/// (which already contains A* when F ≠ ∅), sorted canonically.
inline EnvelopeLattice build_envelope(const FinalSegment& f) {
  if (f.is_empty()) throw precondition_error("the envelope needs a nonempty final segment");
  std::set<FinalSegment> closed;
  for (auto& r : residual_closure(f)) closed.insert(std::move(r));
  closed.insert(FinalSegment::universe(f.alphabet()));
  std::vector<FinalSegment> pending(closed.begin(), closed.end());
  while (!pending.empty()) {
    std::vector<FinalSegment> fresh;
    const std::vector<FinalSegment> snapshot(closed.begin(), closed.end());
    for (const auto& p : pending)
      for (const auto& q : snapshot) {
        FinalSegment r = intersect(p, q);
        if (closed.insert(r).second) fresh.push_back(std::move(r));
      }
    pending = std::move(fresh);
  }

  EnvelopeLattice env;
  env.target_ = f;
  env.elements_.assign(closed.begin(), closed.end());
  env.x_ = env.require(FinalSegment::universe(f.alphabet()));
  env.y_ = env.require(f);

  const std::size_t n = env.elements_.size();
  std::vector<std::vector<std::uint8_t>> sub(n, std::vector<std::uint8_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sub[i][j] = i != j && subset_of(env.elements_[j], env.elements_[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!sub[i][j]) continue;
      bool between = false;
      for (std::size_t k = 0; k < n && !between; ++k) between = sub[i][k] && sub[k][j];
      if (!between) env.hasse_.emplace_back(static_cast<StateId>(i), static_cast<StateId>(j));
    }

  std::vector<Transition> transitions;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < f.alphabet()->size(); ++a)
        if (letter_joins(env.elements_[i], static_cast<Letter>(a), env.elements_[j]))
          transitions.push_back({static_cast<StateId>(i), static_cast<Letter>(a), static_cast<StateId>(j)});
  env.system_ = TransitionSystem(f.alphabet(), n, std::move(transitions));
  return env;
}

/// Distance in S_F: the language of (M_F, {p}, {q}).
inline FinalSegment dist(const EnvelopeLattice& env, StateId p, StateId q) {
  if (p >= env.size() || q >= env.size()) throw precondition_error("state is not an element of the envelope");
  return accepted_basis(Automaton(env.system(), {p}, {q}));
}

inline FinalSegment dist(const EnvelopeLattice& env, const FinalSegment& p, const FinalSegment& q) {
  return dist(env, env.require(p), env.require(q));
}

inline MetricSpace metric_space(const EnvelopeLattice& env) {
  MetricSpace m{env.alphabet(), {}};
  const std::size_t n = env.size();
  m.d.assign(n, std::vector<FinalSegment>(n));
  for (StateId p = 0; p < n; ++p)
    for (StateId q = 0; q < n; ++q) m.d[p][q] = dist(env, p, q);
  return m;
}

inline PointedSpace pointed_space(const EnvelopeLattice& env) { return {metric_space(env), env.x(), env.y()}; }

/// (d(x, p), d(y, p)): the minimal metric form of p over {x, y}.
inline std::pair<FinalSegment, FinalSegment> metric_form_pair(const EnvelopeLattice& env, StateId p) {
  return {dist(env, env.x(), p), dist(env, env.y(), p)};
}

/// Image of the minimal automaton of F in A_F: i(Y) = ⋂_{y ∈ Y} F y⁻¹.
/// Right residuals grow along the Higman order, so the basis of Y suffices.
struct DfaMorphism {
  MinimalDfa dfa;
  std::vector<FinalSegment> image; // image[s] = i(residual of state s)
  bool maps_f_to_universe = false; // i(F) = A*
  bool maps_universe_to_f = false; // i(A*) = F
  bool preserves_transitions = false;

  bool ok() const { return maps_f_to_universe && maps_universe_to_f && preserves_transitions; }
};

inline FinalSegment morphism_image(const FinalSegment& f, const FinalSegment& y) {
  FinalSegment out = FinalSegment::universe(f.alphabet());
  for (const auto& w : y.basis()) out = intersect(out, right_residual(f, w));
  return out;
}

inline DfaMorphism min_dfa_morphism(const FinalSegment& f) {
  const EnvelopeLattice env = build_envelope(f);
  DfaMorphism out{minimal_dfa(f), {}, false, false, true};
  const FinalSegment universe = FinalSegment::universe(f.alphabet());
  for (const auto& y : out.dfa.residuals) out.image.push_back(morphism_image(f, y));
  for (std::size_t s = 0; s < out.dfa.residuals.size(); ++s) {
    if (out.dfa.residuals[s] == f) out.maps_f_to_universe = out.image[s] == universe;
    if (out.dfa.residuals[s] == universe) out.maps_universe_to_f = out.image[s] == f;
  }
  for (std::size_t s = 0; s < out.dfa.dfa.size() && out.preserves_transitions; ++s)
    for (std::size_t a = 0; a < f.alphabet()->size(); ++a) {
      auto from = env.index_of(out.image[s]);
      auto to = env.index_of(out.image[out.dfa.dfa.delta[s][a]]);
      if (!from || !to || !env.system().has(*from, static_cast<Letter>(a), *to)) {
        out.preserves_transitions = false;
        break;
      }
    }
  return out;
}

/// S_{F1·F2} is isometric to S_{F1}·S_{F2} by a bijection fixing x and y.
inline bool verify_sum_theorem(const FinalSegment& f1, const FinalSegment& f2) {
  const FinalSegment f = concat(f1, f2);
  if (f1.is_empty() || f2.is_empty() || f.is_empty())
    throw precondition_error("the sum theorem needs nonempty segments");
  const PointedSpace whole = pointed_space(build_envelope(f));
  const PointedSpace glued = concat_pointed(pointed_space(build_envelope(f1)), pointed_space(build_envelope(f2)));
  if (whole.space.size() != glued.space.size()) return false;
  return find_isometric_embedding(glued.space, whole.space, {{glued.x, whole.x}, {glued.y, whole.y}}).has_value();
}

/// Splits F into the distances between consecutive cut states of M_F on the
/// way from x to y. A* decomposes into the empty product.
inline std::vector<FinalSegment> decompose(const FinalSegment& f) {
  if (f.is_empty()) throw precondition_error("cannot decompose the empty segment");
  if (f.is_universe()) return {};
  const EnvelopeLattice env = build_envelope(f);
  std::vector<StateId> chain{env.x()};
  for (StateId z : articulation_states(env.system(), env.x(), env.y())) chain.push_back(z);
  chain.push_back(env.y());
  std::vector<FinalSegment> factors;
  for (std::size_t i = 1; i < chain.size(); ++i) factors.push_back(dist(env, chain[i - 1], chain[i]));
  return factors;
}

/// Product of a factor list (A* for the empty list).
inline FinalSegment concat_all(const AlphabetPtr& alpha, const std::vector<FinalSegment>& factors) {
  FinalSegment out = FinalSegment::universe(alpha);
  for (const auto& g : factors) out = concat(out, g);
  return out;
}

/// A factor is irreducible when its own envelope has no cut state.
inline bool is_irreducible(const FinalSegment& f) {
  if (f.is_empty() || f.is_universe()) return false;
  const EnvelopeLattice env = build_envelope(f);
  return articulation_states(env.system(), env.x(), env.y()).empty();
}

} // namespace fseg
