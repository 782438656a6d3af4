#pragma once

// Finite metric spaces whose distances are final segments: d(p, p) = A*,
// d(p, r) ⊇ d(p, q)·d(q, r) and d(p, q) = involute(d(q, p)).

#include <optional>
#include <string>
#include <vector>

#include "segments.hpp"

namespace fseg {

struct MetricSpace {
  AlphabetPtr alphabet;
  std::vector<std::vector<FinalSegment>> d;

  std::size_t size() const { return d.size(); }
  const FinalSegment& operator()(std::size_t p, std::size_t q) const { return d[p][q]; }
};

/// A metric space with two base points.
struct PointedSpace {
  MetricSpace space;
  std::size_t x = 0;
  std::size_t y = 0;
};

struct AxiomViolation {
  std::string axiom; // "identity", "triangle" or "symmetry"
  std::size_t p = 0, q = 0, r = 0;
};

inline std::optional<AxiomViolation> check_metric_axioms(const MetricSpace& m) {
  const std::size_t n = m.size();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      if (m(p, q).is_universe() != (p == q)) return AxiomViolation{"identity", p, q, q};
      if (m(p, q) != involute(m(q, p))) return AxiomViolation{"symmetry", p, q, q};
    }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        if (!subset_of(concat(m(p, q), m(q, r)), m(p, r))) return AxiomViolation{"triangle", p, q, r};
  return std::nullopt;
}

struct ConvexityReport {
  bool convex = true;
  // First failure: w = alpha·beta ∈ d(p, q) has no midpoint.
  std::size_t p = 0, q = 0;
  std::optional<Word> alpha, beta;
};

/// For every basis word w of every d(p, q) and every split w = αβ there is
/// some z with α ∈ d(p, z) and β ∈ d(z, q).
inline ConvexityReport check_convexity(const MetricSpace& m) {
  const std::size_t n = m.size();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (const auto& w : m(p, q).basis())
        for (std::size_t cut = 0; cut <= w.size(); ++cut) {
          Word alpha = w.prefix(cut), beta = w.suffix_from(cut);
          bool found = false;
          for (std::size_t z = 0; z < n && !found; ++z)
            found = m(p, z).contains(alpha) && m(z, q).contains(beta);
          if (!found) return {false, p, q, std::move(alpha), std::move(beta)};
        }
  return {};
}

inline MetricSpace subspace(const MetricSpace& m, const std::vector<std::size_t>& points) {
  MetricSpace out{m.alphabet, {}};
  for (std::size_t p : points) {
    std::vector<FinalSegment> row;
    for (std::size_t q : points) row.push_back(m(p, q));
    out.d.push_back(std::move(row));
  }
  return out;
}

/// Searches an injective distance-preserving map from `from` into `to`.
/// `fixed` pins some images in advance (pairs source, target).
inline std::optional<std::vector<std::size_t>> find_isometric_embedding(
    const MetricSpace& from, const MetricSpace& to,
    const std::vector<std::pair<std::size_t, std::size_t>>& fixed = {}) {
  const std::size_t n = from.size(), k = to.size();
  if (n > k) return std::nullopt;
  std::vector<std::optional<std::size_t>> pinned(n);
  for (auto [s, t] : fixed) pinned[s] = t;
  std::vector<std::size_t> image(n);
  std::vector<std::uint8_t> used(k, 0);
  auto fits = [&](std::size_t p, std::size_t c) {
    if (used[c]) return false;
    for (std::size_t s = 0; s < p; ++s)
      if (to(image[s], c) != from(s, p) || to(c, image[s]) != from(p, s)) return false;
    return true;
  };
  auto search = [&](auto&& self, std::size_t p) -> bool {
    if (p == n) return true;
    for (std::size_t c = 0; c < k; ++c) {
      if (pinned[p] && *pinned[p] != c) continue;
      if (!fits(p, c)) continue;
      image[p] = c;
      used[c] = 1;
      if (self(self, p + 1)) return true;
      used[c] = 0;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return image;
}

/// True iff the space admits no isometric embedding into a proper subspace
/// of itself. It suffices to try the subspaces missing one point.
inline bool no_proper_isometric_subspace(const MetricSpace& m) {
  const std::size_t n = m.size();
  for (std::size_t drop = 0; drop < n; ++drop) {
    std::vector<std::size_t> keep;
    for (std::size_t p = 0; p < n; ++p)
      if (p != drop) keep.push_back(p);
    if (find_isometric_embedding(m, subspace(m, keep))) return false;
  }
  return true;
}

/// True iff the identity is the only non-expansive self-map (d(f p, f q) ⊇
/// d(p, q)) fixing both base points. This is the finite face of minimality
/// for an envelope of {x, y}.
inline bool is_rigid_over_base(const PointedSpace& s) {
  const MetricSpace& m = s.space;
  const std::size_t n = m.size();
  // Candidates for f(p) only depend on the distances to the fixed points.
  std::vector<std::vector<std::size_t>> cands(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t c = 0; c < n; ++c)
      if (subset_of(m(s.x, p), m(s.x, c)) && subset_of(m(p, s.x), m(c, s.x)) &&
          subset_of(m(s.y, p), m(s.y, c)) && subset_of(m(p, s.y), m(c, s.y)))
        cands[p].push_back(c);
  std::vector<std::size_t> image(n);
  bool non_identity = false;
  auto search = [&](auto&& self, std::size_t p, bool moved) -> void {
    if (non_identity) return;
    if (p == n) {
      non_identity = moved;
      return;
    }
    for (std::size_t c : cands[p]) {
      if ((p == s.x && c != s.x) || (p == s.y && c != s.y)) continue;
      bool ok = true;
      for (std::size_t q = 0; q < p && ok; ++q)
        ok = subset_of(m(p, q), m(c, image[q])) && subset_of(m(q, p), m(image[q], c));
      if (!ok) continue;
      image[p] = c;
      self(self, p + 1, moved || c != p);
    }
  };
  search(search, 0, false);
  return !non_identity;
}

/// Glues y of the first space to x of the second. The result lists the
/// points of `a` first, then those of `b` except its x; cross distances are
/// d(p, y_a)·d(x_b, q).
inline PointedSpace concat_pointed(const PointedSpace& a, const PointedSpace& b) {
  if (!same_alphabet(a.space.alphabet, b.space.alphabet)) throw alphabet_mismatch();
  const std::size_t na = a.space.size(), nb = b.space.size();
  std::vector<std::size_t> b_index(nb); // position of b's points in the result
  std::size_t next = na;
  for (std::size_t q = 0; q < nb; ++q) b_index[q] = (q == b.x) ? a.y : next++;
  const std::size_t n = next;

  // origin[p] = (0, index in a) or (1, index in b)
  std::vector<std::pair<int, std::size_t>> origin(n);
  for (std::size_t p = 0; p < na; ++p) origin[p] = {0, p};
  for (std::size_t q = 0; q < nb; ++q)
    if (q != b.x) origin[b_index[q]] = {1, q};

  PointedSpace out;
  out.space.alphabet = a.space.alphabet;
  out.space.d.assign(n, std::vector<FinalSegment>(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      auto [sp, ip] = origin[p];
      auto [sq, iq] = origin[q];
      FinalSegment d;
      if (sp == 0 && sq == 0) d = a.space(ip, iq);
      else if (sp == 1 && sq == 1) d = b.space(ip, iq);
      else if (sp == 0) d = concat(a.space(ip, a.y), b.space(b.x, iq));
      else d = concat(b.space(ip, b.x), a.space(a.y, iq));
      out.space.d[p][q] = std::move(d);
    }
  out.x = a.x;
  out.y = b_index[b.y];
  return out;
}

} // namespace fseg
