#pragma once

// Final segments (up-closed languages) of A* under the Higman ordering,
// stored by their finite antichain basis.

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "words.hpp"

namespace fseg {

/// An up-closed subset of A*. The basis is the antichain of its minimal
/// words in canonical order, so two segments are equal iff their bases are.
/// An empty basis is the empty set; the basis {□} is A* itself.
class FinalSegment {
public:
  FinalSegment() = default;
  FinalSegment(AlphabetPtr alphabet, std::vector<Word> generators)
      : alphabet_(std::move(alphabet)) {
    for (const auto& w : generators)
      if (w.alphabet() && !same_alphabet(w.alphabet(), alphabet_)) throw alphabet_mismatch();
    basis_ = minimal_words(std::move(generators));
    for (auto& w : basis_)
      if (!w.alphabet()) w = Word(alphabet_, {});
  }

  static FinalSegment universe(AlphabetPtr alphabet) {
    Word empty(alphabet);
    return FinalSegment(std::move(alphabet), {std::move(empty)});
  }
  static FinalSegment empty_set(AlphabetPtr alphabet) { return FinalSegment(std::move(alphabet), {}); }

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<Word>& basis() const { return basis_; }
  bool is_empty() const { return basis_.empty(); }
  bool is_universe() const { return basis_.size() == 1 && basis_.front().empty(); }

  bool contains(const Word& w) const {
    for (const auto& b : basis_)
      if (embeds(b, w)) return true;
    return false;
  }

  friend bool operator==(const FinalSegment& l, const FinalSegment& r) { return l.basis_ == r.basis_; }
  friend std::strong_ordering operator<=>(const FinalSegment& l, const FinalSegment& r) {
    return l.basis_ <=> r.basis_;
  }

private:
  AlphabetPtr alphabet_;
  std::vector<Word> basis_;
};

inline FinalSegment canonicalize(const AlphabetPtr& alphabet, std::vector<Word> words) {
  return FinalSegment(alphabet, std::move(words));
}

/// ↑{words}, each word parsed over `alphabet`.
inline FinalSegment make_segment(const AlphabetPtr& alphabet, const std::vector<std::string>& words) {
  std::vector<Word> parsed;
  for (const auto& w : words) parsed.push_back(parse_word(alphabet, w));
  return FinalSegment(alphabet, std::move(parsed));
}

inline FinalSegment make_segment(const AlphabetPtr& alphabet, std::initializer_list<std::string_view> words) {
  std::vector<Word> parsed;
  for (auto w : words) parsed.push_back(parse_word(alphabet, w));
  return FinalSegment(alphabet, std::move(parsed));
}

inline bool contains(const FinalSegment& f, const Word& w) { return f.contains(w); }

namespace detail {
inline void require_same(const FinalSegment& f, const FinalSegment& g) {
  if (!same_alphabet(f.alphabet(), g.alphabet())) throw alphabet_mismatch();
}
} // namespace detail

inline FinalSegment unite(const FinalSegment& f, const FinalSegment& g) {
  detail::require_same(f, g);
  std::vector<Word> words = f.basis();
  words.insert(words.end(), g.basis().begin(), g.basis().end());
  return FinalSegment(f.alphabet(), std::move(words));
}

inline FinalSegment intersect(const FinalSegment& f, const FinalSegment& g) {
  detail::require_same(f, g);
  if (f.is_universe()) return g;
  if (g.is_universe()) return f;
  std::vector<Word> words;
  for (const auto& u : f.basis())
    for (const auto& v : g.basis()) {
      auto ub = min_upper_bounds(u, v);
      words.insert(words.end(), std::make_move_iterator(ub.begin()), std::make_move_iterator(ub.end()));
    }
  return FinalSegment(f.alphabet(), std::move(words));
}

/// F·G = {uv : u ∈ F, v ∈ G}; generated by the pairwise products of bases.
inline FinalSegment concat(const FinalSegment& f, const FinalSegment& g) {
  detail::require_same(f, g);
  std::vector<Word> words;
  for (const auto& u : f.basis())
    for (const auto& v : g.basis()) words.push_back(concat(u, v));
  return FinalSegment(f.alphabet(), std::move(words));
}

/// F w⁻¹ = {x : xw ∈ F}.
inline FinalSegment right_residual(const FinalSegment& f, const Word& w) {
  std::vector<Word> words;
  for (const auto& u : f.basis()) words.push_back(max_embeddable_suffix(u, w).prefix);
  return FinalSegment(f.alphabet(), std::move(words));
}

/// w⁻¹ F = {x : wx ∈ F}.
inline FinalSegment left_residual(const Word& w, const FinalSegment& f) {
  std::vector<Word> words;
  for (const auto& u : f.basis()) words.push_back(max_embeddable_prefix(u, w).suffix);
  return FinalSegment(f.alphabet(), std::move(words));
}

/// G ⊆ F.
inline bool subset_of(const FinalSegment& g, const FinalSegment& f) {
  detail::require_same(f, g);
  for (const auto& w : g.basis())
    if (!f.contains(w)) return false;
  return true;
}

/// The algebra's order: F ≤ G iff F ⊇ G. A* is the least element, ∅ the top.
inline bool leq(const FinalSegment& f, const FinalSegment& g) { return subset_of(g, f); }

inline FinalSegment involute(const FinalSegment& f) {
  std::vector<Word> words;
  for (const auto& w : f.basis()) words.push_back(involute(w));
  return FinalSegment(f.alphabet(), std::move(words));
}

/// "∅", "A*", "↑w" or "↑{w1,w2,...}".
inline std::string to_string(const FinalSegment& f) {
  if (f.is_empty()) return "∅";
  if (f.is_universe()) return "A*";
  if (f.basis().size() == 1) return "↑" + to_string(f.basis().front());
  std::string out = "↑{";
  for (std::size_t i = 0; i < f.basis().size(); ++i) {
    if (i) out += ',';
    out += display(f.basis()[i]);
  }
  return out + "}";
}

} // namespace fseg
