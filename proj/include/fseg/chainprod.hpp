#pragma once

// Up-sets of a product of finite chains n_0 ⊗ ... ⊗ n_{k-1}, and the maps
// between S_F and those up-sets for F = ↑{u_0, ..., u_{k-1}}, n_i = |u_i|.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "envelope.hpp"

namespace fseg {

using Tuple = std::vector<std::size_t>;

/// The grid of tuples x with 0 <= x_i < dims[i], ordered componentwise.
/// A zero dimension gives the empty product.
class ChainProduct {
public:
  ChainProduct() = default;
  explicit ChainProduct(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    size_ = 1;
    for (std::size_t d : dims_) size_ *= d;
    if (dims_.empty()) size_ = 1;
  }

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t size() const { return size_; }

  /// The last coordinate varies fastest.
  Tuple point(std::size_t index) const {
    Tuple t(dims_.size());
    for (std::size_t i = dims_.size(); i-- > 0;) {
      t[i] = index % dims_[i];
      index /= dims_[i];
    }
    return t;
  }

  std::size_t index(const Tuple& t) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i) idx = idx * dims_[i] + t[i];
    return idx;
  }

  static bool below(const Tuple& a, const Tuple& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  }

  friend bool operator==(const ChainProduct&, const ChainProduct&) = default;

private:
  std::vector<std::size_t> dims_;
  std::size_t size_ = 1;
};

/// An up-closed subset of a chain product, stored as a membership mask over
/// the points. Masks compare lexicographically, which fixes a canonical order.
class UpSet {
public:
  UpSet() = default;
  UpSet(ChainProduct product, std::vector<bool> members)
      : product_(std::move(product)), members_(std::move(members)) {
    if (members_.size() != product_.size()) throw input_error("up-set mask has the wrong size");
  }

  static UpSet empty(const ChainProduct& p) { return UpSet(p, std::vector<bool>(p.size(), false)); }
  static UpSet full(const ChainProduct& p) { return UpSet(p, std::vector<bool>(p.size(), true)); }

  /// ↑{generators}
  static UpSet generated(const ChainProduct& p, const std::vector<Tuple>& generators) {
    std::vector<bool> m(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Tuple t = p.point(i);
      m[i] = std::any_of(generators.begin(), generators.end(),
                         [&](const Tuple& g) { return ChainProduct::below(g, t); });
    }
    return UpSet(p, std::move(m));
  }

  const ChainProduct& product() const { return product_; }
  const std::vector<bool>& mask() const { return members_; }
  bool contains(const Tuple& t) const { return members_[product_.index(t)]; }
  std::size_t count() const { return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true)); }

  bool is_up_closed() const {
    for (std::size_t i = 0; i < product_.size(); ++i)
      if (members_[i])
        for (std::size_t j = 0; j < product_.size(); ++j)
          if (!members_[j] && ChainProduct::below(product_.point(i), product_.point(j))) return false;
    return true;
  }

  /// The antichain of minimal tuples, in index order.
  std::vector<Tuple> minimal_tuples() const {
    std::vector<Tuple> out;
    for (std::size_t i = 0; i < product_.size(); ++i) {
      if (!members_[i]) continue;
      const Tuple t = product_.point(i);
      bool minimal = true;
      for (std::size_t k = 0; k < t.size() && minimal; ++k)
        if (t[k] > 0) {
          Tuple s = t;
          --s[k];
          minimal = !contains(s);
        }
      if (minimal) out.push_back(t);
    }
    return out;
  }

  friend UpSet operator&(const UpSet& a, const UpSet& b) {
    std::vector<bool> m(a.members_.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = a.members_[i] && b.members_[i];
    return UpSet(a.product_, std::move(m));
  }

  friend bool subset_of(const UpSet& a, const UpSet& b) {
    for (std::size_t i = 0; i < a.members_.size(); ++i)
      if (a.members_[i] && !b.members_[i]) return false;
    return true;
  }

  friend bool operator==(const UpSet& a, const UpSet& b) { return a.members_ == b.members_; }
  friend bool operator<(const UpSet& a, const UpSet& b) { return a.members_ < b.members_; }

private:
  ChainProduct product_;
  std::vector<bool> members_;
};

inline std::string to_string(const Tuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t[i]);
  }
  return out + ")";
}

inline std::string to_string(const UpSet& u) {
  std::string out = "{";
  const auto mins = u.minimal_tuples();
  for (std::size_t i = 0; i < mins.size(); ++i) {
    if (i) out += ',';
    out += to_string(mins[i]);
  }
  return out + "}";
}

namespace detail {

// Visits every up-set: points are decided from the top rank down, and a
// point may join only once all its upper covers are in.
template <class Visit>
void for_each_upset(const ChainProduct& p, Visit&& visit) {
  std::vector<std::size_t> order(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<std::size_t> rank(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Tuple t = p.point(i);
    for (std::size_t c : t) rank[i] += c;
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rank[a] > rank[b]; });
  std::vector<std::vector<std::size_t>> covers(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Tuple t = p.point(i);
    for (std::size_t k = 0; k < t.size(); ++k)
      if (t[k] + 1 < p.dims()[k]) {
        Tuple s = t;
        ++s[k];
        covers[i].push_back(p.index(s));
      }
  }
  std::vector<bool> members(p.size(), false);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      visit(members);
      return;
    }
    const std::size_t i = order[pos];
    self(self, pos + 1);
    if (std::all_of(covers[i].begin(), covers[i].end(), [&](std::size_t c) { return members[c]; })) {
      members[i] = true;
      self(self, pos + 1);
      members[i] = false;
    }
  };
  rec(rec, 0);
}

} // namespace detail

/// Number of up-sets of n_0 ⊗ ... ⊗ n_{k-1}, by exhaustive enumeration.
inline std::uint64_t count_upsets(const std::vector<std::size_t>& dims) {
  for (std::size_t d : dims)
    if (d == 0) return 1; // empty product: only the empty up-set
  std::uint64_t count = 0;
  detail::for_each_upset(ChainProduct(dims), [&](const std::vector<bool>&) { ++count; });
  return count;
}

/// All up-sets of the product in canonical (mask) order.
inline std::vector<UpSet> all_upsets(const ChainProduct& p) {
  std::vector<UpSet> out;
  if (p.size() == 0) return {UpSet::empty(p)};
  detail::for_each_upset(p, [&](const std::vector<bool>& m) { out.emplace_back(p, m); });
  std::sort(out.begin(), out.end());
  return out;
}

/// Letter classes X_0, ..., X_{n-1}; generates ↑(X_0 ⋯ X_{n-1}).
struct LetterProduct {
  AlphabetPtr alphabet;
  std::vector<std::vector<Letter>> factors;

  FinalSegment segment() const {
    std::vector<std::vector<Letter>> words{{}};
    for (const auto& x : factors) {
      std::vector<std::vector<Letter>> next;
      for (const auto& w : words)
        for (Letter a : x) {
          auto v = w;
          v.push_back(a);
          next.push_back(std::move(v));
        }
      words = std::move(next);
    }
    std::vector<Word> out;
    for (auto& w : words) out.emplace_back(alphabet, std::move(w));
    return FinalSegment(alphabet, std::move(out));
  }
};

/// The coding (f, g) of the complement of F = ↑(X_0 ⋯ X_{n-1}) into the
/// chain n: f(v) is the largest m with v ∈ ↑(X_0 ⋯ X_{m-1}); g(v) + 1 is the
/// least q with v ∈ ↑(X_q ⋯ X_{n-1}). For u, v ∉ F, uv ∈ F iff f(u) > g(v).
struct Coding {
  std::size_t f = 0;
  std::size_t g = 0;
};

inline Coding coding_maps(const LetterProduct& x, const Word& v) {
  const Alphabet& alpha = *x.alphabet;
  const std::size_t n = x.factors.size();
  auto fits = [&](std::size_t factor, Letter c) {
    const auto& cls = x.factors[factor];
    return std::any_of(cls.begin(), cls.end(), [&](Letter a) { return alpha.leq(a, c); });
  };
  std::size_t front = 0;
  for (std::size_t j = 0; j < v.size() && front < n; ++j)
    if (fits(front, v[j])) ++front;
  std::size_t back = 0;
  for (std::size_t j = v.size(); j-- > 0 && back < n;)
    if (fits(n - 1 - back, v[j])) ++back;
  if (front == n) throw precondition_error("coding maps are defined outside F only");
  return {front, n - back - 1};
}

/// (|v'_0|, ..., |v'_{k-1}|) where u_i = v'_i v''_i and v''_i is the longest
/// suffix of u_i below v.
inline Tuple tuple_of_word(const std::vector<Word>& generators, const Word& v) {
  Tuple t;
  for (const auto& u : generators) t.push_back(max_embeddable_suffix(u, v).prefix.size());
  return t;
}

/// Every tuple realised by some word, with a shortest witness. Reading a
/// word right to left advances each generator's matched suffix greedily, so
/// the tuples are the reachable states of that deterministic product.
inline std::map<Tuple, Word> achievable_tuples(const std::vector<Word>& generators, const AlphabetPtr& alpha) {
  const Alphabet& a = *alpha;
  Tuple start;
  for (const auto& u : generators) start.push_back(u.size());
  std::map<Tuple, Word> seen{{start, Word(alpha)}};
  std::deque<Tuple> queue{start};
  while (!queue.empty()) {
    Tuple t = queue.front();
    queue.pop_front();
    for (std::size_t c = 0; c < a.size(); ++c) {
      Tuple s = t;
      for (std::size_t i = 0; i < generators.size(); ++i)
        if (s[i] > 0 && a.leq(generators[i][s[i] - 1], static_cast<Letter>(c))) --s[i];
      if (!seen.count(s)) {
        seen.emplace(s, concat(Word(alpha, {static_cast<Letter>(c)}), seen.at(t)));
        queue.push_back(s);
      }
    }
  }
  return seen;
}

/// The grid n_0 ⊗ ... ⊗ n_{k-1} of a basis.
inline ChainProduct product_of(const std::vector<Word>& generators) {
  std::vector<std::size_t> dims;
  for (const auto& u : generators) dims.push_back(u.size());
  return ChainProduct(dims);
}

/// F v⁻¹ for any word v with the given tuple: ↑{prefix of u_i of length t_i}.
inline FinalSegment residual_of_tuple(const std::vector<Word>& generators, const Tuple& t, const AlphabetPtr& alpha) {
  std::vector<Word> words;
  for (std::size_t i = 0; i < generators.size(); ++i) words.push_back(generators[i].prefix(t[i]));
  return FinalSegment(alpha, std::move(words));
}

/// φ(X) = ⋂ τ(v) over words v with X ⊆ F v⁻¹, where τ(v) is the complement
/// of the box s(v) = {x : x_i < |v'_i|}. Both the condition and τ(v) depend
/// on v only through its tuple, so the achievable tuples suffice.
inline UpSet phi(const EnvelopeLattice& env, const FinalSegment& x) {
  const auto& gens = env.target().basis();
  const ChainProduct p = product_of(gens);
  std::vector<bool> members(p.size(), true);
  for (const auto& [t, witness] : achievable_tuples(gens, env.alphabet())) {
    if (!subset_of(x, residual_of_tuple(gens, t, env.alphabet()))) continue;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Tuple pt = p.point(i);
      bool in_box = true;
      for (std::size_t k = 0; k < pt.size() && in_box; ++k) in_box = pt[k] < t[k];
      if (in_box) members[i] = false;
    }
  }
  return UpSet(p, std::move(members));
}

inline UpSet phi(const EnvelopeLattice& env, StateId x) { return phi(env, env[x]); }

/// μ(x) = ↑{prefix of u_i of length x_i + 1}.
inline FinalSegment mu(const std::vector<Word>& generators, const Tuple& x, const AlphabetPtr& alpha) {
  Tuple t = x;
  for (auto& c : t) ++c;
  return residual_of_tuple(generators, t, alpha);
}

/// Ψ(Y) = ⋂ μ(x) over the points x outside Y.
inline FinalSegment psi(const ChainProduct& p, const UpSet& y, const std::vector<Word>& generators,
                        const AlphabetPtr& alpha) {
  FinalSegment out = FinalSegment::universe(alpha);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!y.mask()[i]) out = intersect(out, mu(generators, p.point(i), alpha));
  return out;
}

/// For i ≠ j no letter lies below a letter of u_i and a letter of u_j, i.e.
/// ↓u_i ∩ ↓u_j = {□}.
inline bool disjoint_downsets(const std::vector<Word>& generators) {
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      const Alphabet& alpha = *generators[i].alphabet();
      for (std::size_t c = 0; c < alpha.size(); ++c) {
        auto below = [&](const Word& u) {
          for (Letter a : u.letters())
            if (alpha.leq(static_cast<Letter>(c), a)) return true;
          return false;
        };
        if (below(generators[i]) && below(generators[j])) return false;
      }
    }
  return true;
}

struct FullEmbeddingReport {
  std::size_t envelope_size = 0;
  std::uint64_t upset_count = 0;
  bool phi_bijective = false;

  bool ok() const { return envelope_size == upset_count && phi_bijective; }
};

/// When the generators have pairwise disjoint down-sets, φ maps S_F onto all
/// up-sets of the grid.
inline FullEmbeddingReport verify_full_embedding(const FinalSegment& f) {
  if (!disjoint_downsets(f.basis()))
    throw precondition_error("generators of " + to_string(f) + " share a lower letter");
  const EnvelopeLattice env = build_envelope(f);
  const ChainProduct p = product_of(f.basis());
  FullEmbeddingReport r;
  r.envelope_size = env.size();
  r.upset_count = count_upsets(p.dims());
  std::set<UpSet> images;
  for (const auto& e : env.elements()) images.insert(phi(env, e));
  const auto all = all_upsets(p);
  r.phi_bijective = images.size() == env.size() && images == std::set<UpSet>(all.begin(), all.end());
  return r;
}

} // namespace fseg
