#pragma once

// Ordered alphabets with an involution, words over them and the Higman
// (subword) ordering.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace fseg {

using Letter = std::uint16_t;

namespace detail {

// Length in bytes of the UTF-8 sequence starting with `lead`.
inline std::size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 1;
}

inline bool is_single_code_point(std::string_view s) {
  return !s.empty() && utf8_length(static_cast<unsigned char>(s[0])) == s.size();
}

} // namespace detail

/// A finite alphabet with a partial order and an order-preserving involution.
///
/// The order is given as a list of pairs (a, b) meaning a <= b and is closed
/// reflexively and transitively here; a cycle between distinct letters is
/// rejected. The involution is given as pairs (a, b) meaning bar(a) = b; the
/// reverse pair is implied and unlisted letters are fixed points.
class Alphabet {
public:
  using Pairs = std::vector<std::pair<std::string, std::string>>;

  Alphabet(std::vector<std::string> names, const Pairs& order = {},
           const Pairs& involution = {})
      : names_(std::move(names)) {
    const std::size_t n = names_.size();
    if (n == 0) throw input_error("alphabet has no letters");
    if (n > 0xFFFF) throw input_error("alphabet too large");
    for (std::size_t i = 0; i < n; ++i) {
      if (names_[i].empty()) throw input_error("empty letter name");
      if (names_[i].find_first_of("[]") != std::string::npos)
        throw input_error("letter name '" + names_[i] + "' contains a bracket");
      if (!index_.emplace(names_[i], static_cast<Letter>(i)).second)
        throw input_error("duplicate letter '" + names_[i] + "'");
    }

    leq_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = 1;
    for (const auto& [lo, hi] : order) leq_[lookup(lo) * n + lookup(hi)] = 1;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq_[i * n + k])
          for (std::size_t j = 0; j < n; ++j)
            if (leq_[k * n + j]) leq_[i * n + j] = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (leq_[i * n + j] && leq_[j * n + i])
          throw input_error("letter order is not antisymmetric: '" + names_[i] +
                            "' and '" + names_[j] + "'");

    std::vector<std::optional<Letter>> bar(n);
    auto assign = [&](Letter a, Letter b) {
      if (bar[a] && *bar[a] != b)
        throw input_error("involution maps '" + names_[a] + "' twice");
      bar[a] = b;
    };
    for (const auto& [from, to] : involution) {
      const Letter a = lookup(from), b = lookup(to);
      assign(a, b);
      assign(b, a);
    }
    bar_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      bar_[i] = bar[i].value_or(static_cast<Letter>(i));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq_[i * n + j] && !leq_[bar_[i] * n + bar_[j]])
          throw input_error("involution does not preserve the order on '" +
                            names_[i] + "' <= '" + names_[j] + "'");
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Letter a) const { return names_.at(a); }

  std::optional<Letter> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool leq(Letter a, Letter b) const { return leq_[a * size() + b] != 0; }
  Letter bar(Letter a) const { return bar_[a]; }

  /// Minimal elements of the set of common upper bounds of two letters.
  std::vector<Letter> minimal_upper_bounds(Letter a, Letter b) const {
    std::vector<Letter> common;
    for (std::size_t c = 0; c < size(); ++c)
      if (leq(a, static_cast<Letter>(c)) && leq(b, static_cast<Letter>(c)))
        common.push_back(static_cast<Letter>(c));
    std::vector<Letter> out;
    for (Letter c : common) {
      bool minimal = std::none_of(common.begin(), common.end(),
                                  [&](Letter d) { return d != c && leq(d, c); });
      if (minimal) out.push_back(c);
    }
    return out;
  }

  /// The pairs (a, b), a != b, with a <= b, in index order.
  Pairs order_pairs() const {
    Pairs out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (i != j && leq(static_cast<Letter>(i), static_cast<Letter>(j)))
          out.emplace_back(names_[i], names_[j]);
    return out;
  }

  bool trivial_order() const { return order_pairs().empty(); }

  friend bool operator==(const Alphabet& l, const Alphabet& r) {
    return l.names_ == r.names_ && l.leq_ == r.leq_ && l.bar_ == r.bar_;
  }

private:
  Letter lookup(const std::string& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw input_error("unknown letter '" + s + "'");
    return it->second;
  }

  std::vector<std::string> names_;
  std::map<std::string, Letter, std::less<>> index_;
  std::vector<std::uint8_t> leq_;
  std::vector<Letter> bar_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr make_alphabet(std::vector<std::string> names,
                                 const Alphabet::Pairs& order = {},
                                 const Alphabet::Pairs& involution = {}) {
  return std::make_shared<const Alphabet>(std::move(names), order, involution);
}

/// One letter per character, trivial order, identity involution.
inline AlphabetPtr plain_alphabet(std::string_view chars) {
  std::vector<std::string> names;
  for (char c : chars) names.emplace_back(1, c);
  return make_alphabet(std::move(names));
}

inline bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// A finite sequence of letters. Words compare length-lexicographically by
/// letter index; the alphabet does not take part in comparisons.
class Word {
public:
  Word() = default;
  explicit Word(AlphabetPtr alphabet, std::vector<Letter> letters = {})
      : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    for (Letter a : letters_)
      if (!alphabet_ || a >= alphabet_->size())
        throw input_error("letter index out of range");
  }

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word prefix(std::size_t n) const {
    return Word(alphabet_, std::vector<Letter>(letters_.begin(),
                                               letters_.begin() + static_cast<std::ptrdiff_t>(n)));
  }
  Word suffix_from(std::size_t i) const {
    return Word(alphabet_, std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(i),
                                               letters_.end()));
  }

  friend bool operator==(const Word& l, const Word& r) { return l.letters_ == r.letters_; }
  friend std::strong_ordering operator<=>(const Word& l, const Word& r) {
    if (auto c = l.letters_.size() <=> r.letters_.size(); c != 0) return c;
    return l.letters_ <=> r.letters_;
  }

private:
  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

inline Word concat(const Word& u, const Word& v) {
  if (!same_alphabet(u.alphabet(), v.alphabet())) throw alphabet_mismatch();
  std::vector<Letter> out(u.letters().begin(), u.letters().end());
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return Word(u.alphabet(), std::move(out));
}

/// Reverses the word and applies the letter involution pointwise.
inline Word involute(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (std::size_t i = w.size(); i-- > 0;) out.push_back(w.alphabet()->bar(w[i]));
  return Word(w.alphabet(), std::move(out));
}

/// Higman ordering: u embeds in v if some strictly increasing position map
/// sends every letter of u to a letter of v above it. Greedy leftmost
/// matching decides it.
inline bool embeds(const Word& u, const Word& v) {
  if (u.size() > v.size()) return false;
  if (u.empty()) return true;
  const Alphabet& alpha = *u.alphabet();
  std::size_t i = 0;
  for (std::size_t j = 0; j < v.size() && i < u.size(); ++j)
    if (alpha.leq(u[i], v[j])) ++i;
  return i == u.size();
}

/// u = prefix . suffix
struct Split {
  Word prefix;
  Word suffix;
};

/// Splits u so that the suffix is the longest suffix of u embeddable in w.
/// Suffix embeddability is closed under taking shorter suffixes, so
/// right-to-left greedy matching finds it.
inline Split max_embeddable_suffix(const Word& u, const Word& w) {
  if (!same_alphabet(u.alphabet(), w.alphabet()) && !u.empty() && !w.empty())
    throw alphabet_mismatch();
  std::size_t matched = 0;
  if (!u.empty()) {
    const Alphabet& alpha = *u.alphabet();
    std::size_t j = w.size();
    while (matched < u.size() && j > 0) {
      --j;
      if (alpha.leq(u[u.size() - 1 - matched], w[j])) ++matched;
    }
  }
  const std::size_t cut = u.size() - matched;
  return {u.prefix(cut), u.suffix_from(cut)};
}

/// Splits u so that the prefix is the longest prefix of u embeddable in w.
inline Split max_embeddable_prefix(const Word& u, const Word& w) {
  if (!same_alphabet(u.alphabet(), w.alphabet()) && !u.empty() && !w.empty())
    throw alphabet_mismatch();
  std::size_t matched = 0;
  if (!u.empty()) {
    const Alphabet& alpha = *u.alphabet();
    for (std::size_t j = 0; j < w.size() && matched < u.size(); ++j)
      if (alpha.leq(u[matched], w[j])) ++matched;
  }
  return {u.prefix(matched), u.suffix_from(matched)};
}

/// Removes every word above another one and sorts the rest canonically.
inline std::vector<Word> minimal_words(std::vector<Word> words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  std::vector<Word> out;
  // A word can lie above a shorter word or a distinct one of equal length.
  for (std::size_t i = 0; i < words.size(); ++i) {
    bool covered = std::any_of(out.begin(), out.end(),
                               [&](const Word& m) { return embeds(m, words[i]); });
    for (std::size_t j = i + 1; !covered && j < words.size() && words[j].size() == words[i].size(); ++j)
      covered = embeds(words[j], words[i]);
    if (!covered) out.push_back(words[i]);
  }
  return out;
}

/// Minimal common upper bounds of u and v in the Higman ordering.
///
/// A minimal common upper bound starts either with the first letter of u,
/// the first letter of v, or a minimal common upper bound of both first
/// letters; the recursion on suffix pairs is memoized and its results are
/// minimalized. No result is longer than |u| + |v|.
inline std::vector<Word> min_upper_bounds(const Word& u, const Word& v) {
  if (!same_alphabet(u.alphabet(), v.alphabet())) throw alphabet_mismatch();
  const AlphabetPtr& alpha = u.alphabet();
  using Letters = std::vector<Letter>;
  const std::size_t n = u.size(), m = v.size();
  std::vector<std::optional<std::vector<Letters>>> memo((n + 1) * (m + 1));

  auto minimalize = [&](std::vector<Letters> cands) {
    std::vector<Word> words;
    words.reserve(cands.size());
    for (auto& c : cands) words.emplace_back(alpha, std::move(c));
    std::vector<Letters> out;
    for (auto& w : minimal_words(std::move(words)))
      out.emplace_back(w.letters().begin(), w.letters().end());
    return out;
  };

  auto solve = [&](auto&& self, std::size_t i, std::size_t j) -> const std::vector<Letters>& {
    auto& slot = memo[i * (m + 1) + j];
    if (slot) return *slot;
    std::vector<Letters> cands;
    if (i == n) {
      cands.emplace_back(v.letters().begin() + static_cast<std::ptrdiff_t>(j), v.letters().end());
    } else if (j == m) {
      cands.emplace_back(u.letters().begin() + static_cast<std::ptrdiff_t>(i), u.letters().end());
    } else {
      auto prepend = [&](Letter c, const std::vector<Letters>& tails) {
        for (const auto& t : tails) {
          Letters w;
          w.reserve(t.size() + 1);
          w.push_back(c);
          w.insert(w.end(), t.begin(), t.end());
          cands.push_back(std::move(w));
        }
      };
      prepend(u[i], self(self, i + 1, j));
      prepend(v[j], self(self, i, j + 1));
      for (Letter c : alpha->minimal_upper_bounds(u[i], v[j])) prepend(c, self(self, i + 1, j + 1));
    }
    slot = minimalize(std::move(cands));
    return *slot;
  };

  std::vector<Word> out;
  for (const auto& w : solve(solve, 0, 0)) out.emplace_back(alpha, w);
  std::sort(out.begin(), out.end());
  return out;
}

/// All words of length at most `max_length`, in canonical order.
inline std::vector<Word> words_up_to(const AlphabetPtr& alpha, std::size_t max_length) {
  std::vector<Word> out{Word(alpha)};
  std::vector<std::vector<Letter>> layer{{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : layer)
      for (std::size_t a = 0; a < alpha->size(); ++a) {
        auto x = w;
        x.push_back(static_cast<Letter>(a));
        next.push_back(std::move(x));
      }
    for (const auto& w : next) out.emplace_back(alpha, w);
    layer = std::move(next);
  }
  return out;
}

/// Serialized form: single-code-point letters verbatim, others as "[name]".
/// The empty word serializes to "".
inline std::string to_string(const Word& w) {
  std::string out;
  for (Letter a : w.letters()) {
    const std::string& name = w.alphabet()->name(a);
    if (detail::is_single_code_point(name)) {
      out += name;
    } else {
      out += '[';
      out += name;
      out += ']';
    }
  }
  return out;
}

/// Human-readable form; the empty word prints as "□".
inline std::string display(const Word& w) { return w.empty() ? "□" : to_string(w); }

inline Word parse_word(const AlphabetPtr& alpha, std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    std::string_view name;
    if (text[i] == '[') {
      auto close = text.find(']', i + 1);
      if (close == std::string_view::npos)
        throw input_error("unterminated '[' in word \"" + std::string(text) + "\"");
      name = text.substr(i + 1, close - i - 1);
      i = close + 1;
    } else {
      const std::size_t len = detail::utf8_length(static_cast<unsigned char>(text[i]));
      name = text.substr(i, len);
      i += len;
    }
    auto a = alpha->find(name);
    if (!a)
      throw input_error("unknown letter '" + std::string(name) + "' in word \"" +
                        std::string(text) + "\"");
    letters.push_back(*a);
  }
  return Word(alpha, std::move(letters));
}

} // namespace fseg
