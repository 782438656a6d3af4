#pragma once

// Ferrers tests. A language L is Ferrers when xx′ ∈ L and yy′ ∈ L imply
// xy′ ∈ L or yx′ ∈ L; equivalently its residuals form a chain under ⊆.

#include <bit>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "envelope.hpp"

namespace fseg {

/// x x′ ∈ L and y y′ ∈ L while x y′ ∉ L and y x′ ∉ L.
struct Quadruple {
  Word x, x_prime, y, y_prime;
};

struct SegmentVerdict {
  bool ferrers = true;
  std::optional<std::pair<FinalSegment, FinalSegment>> witness; // incomparable residuals
};

struct RegularVerdict {
  bool ferrers = true;
  std::optional<Quadruple> witness;
};

/// F is Ferrers iff its right residuals F v⁻¹ are pairwise comparable.
inline SegmentVerdict is_ferrers_segment(const FinalSegment& f) {
  if (f.is_empty()) return {};
  const auto residuals = residual_closure(f);
  for (std::size_t i = 0; i < residuals.size(); ++i)
    for (std::size_t j = i + 1; j < residuals.size(); ++j)
      if (!subset_of(residuals[i], residuals[j]) && !subset_of(residuals[j], residuals[i]))
        return {false, std::make_pair(residuals[i], residuals[j])};
  return {};
}

/// The left residuals of L are the languages of the reachable states of any
/// DFA for L; they form a chain iff L is Ferrers. A failing pair of states
/// p, q reached by x, y yields x′ ∈ L(p) \ L(q) and y′ ∈ L(q) \ L(p).
inline RegularVerdict is_ferrers_regular(const Dfa& dfa) {
  const auto states = reachable_states(dfa);
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      auto xp = difference_witness(dfa, states[i].first, states[j].first);
      if (!xp) continue;
      auto yp = difference_witness(dfa, states[j].first, states[i].first);
      if (!yp) continue;
      return {false, Quadruple{states[i].second, *xp, states[j].second, *yp}};
    }
  return {};
}

inline RegularVerdict is_ferrers_regular(const Automaton& aut) { return is_ferrers_regular(determinize(aut)); }

/// The elements of the envelope form a chain under inclusion.
inline bool is_linearly_orderable(const EnvelopeLattice& env) {
  for (std::size_t i = 0; i < env.size(); ++i)
    for (std::size_t j = i + 1; j < env.size(); ++j)
      if (!subset_of(env[i], env[j]) && !subset_of(env[j], env[i])) return false;
  return true;
}

struct FerrersEquivalence {
  bool segment = false;   // is_ferrers_segment(F)
  bool orderable = false; // is_linearly_orderable(S_F)

  bool agree() const { return segment == orderable; }
};

inline FerrersEquivalence check_ferrers_equivalence(const FinalSegment& f) {
  return {is_ferrers_segment(f).ferrers, is_linearly_orderable(build_envelope(f))};
}

using Membership = std::function<bool(const Word&)>;

/// Does q violate the Ferrers condition for L?
inline bool refutes(const Membership& in_l, const Quadruple& q) {
  return in_l(concat(q.x, q.x_prime)) && in_l(concat(q.y, q.y_prime)) && !in_l(concat(q.x, q.y_prime)) &&
         !in_l(concat(q.y, q.x_prime));
}

/// Searches all x, x′, y, y′ of length <= bound for a violation. A witness
/// refutes Ferrers; no witness proves nothing about longer words.
inline RegularVerdict quadruple_sample_test(const Membership& in_l, const AlphabetPtr& alpha, std::size_t bound) {
  const auto words = words_up_to(alpha, bound);
  const std::size_t n = words.size(), blocks = (n + 63) / 64;
  // rows[x] = {x′ : x x′ ∈ L}
  std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(blocks, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (in_l(concat(words[i], words[j]))) rows[i][j / 64] |= std::uint64_t{1} << (j % 64);
  auto first_outside = [&](std::size_t i, std::size_t k) -> std::optional<std::size_t> {
    for (std::size_t b = 0; b < blocks; ++b)
      if (std::uint64_t diff = rows[i][b] & ~rows[k][b]) return b * 64 + static_cast<std::size_t>(std::countr_zero(diff));
    return std::nullopt;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k) {
      auto xp = first_outside(i, k);
      if (!xp) continue;
      auto yp = first_outside(k, i);
      if (!yp) continue;
      return {false, Quadruple{words[i], words[*xp], words[k], words[*yp]}};
    }
  return {};
}

} // namespace fseg
