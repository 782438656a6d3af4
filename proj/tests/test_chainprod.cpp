#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace fseg;

namespace {

AlphabetPtr ab() {
  static const AlphabetPtr a = plain_alphabet("ab");
  return a;
}

FinalSegment seg(std::initializer_list<std::string_view> ws) { return make_segment(ab(), ws); }
Word w(std::string_view s) { return parse_word(ab(), s); }

LetterProduct letters(const AlphabetPtr& alpha, std::vector<std::string> classes) {
  LetterProduct x{alpha, {}};
  for (const auto& c : classes) {
    std::vector<Letter> cls;
    for (char ch : c) cls.push_back(*alpha->find(std::string(1, ch)));
    x.factors.push_back(cls);
  }
  return x;
}

} // namespace

TEST_CASE("counting up-sets") {
  CHECK(count_upsets({2, 2}) == 6);
  CHECK(count_upsets({2, 2, 2}) == 20);
  CHECK(count_upsets({2, 2, 2, 2}) == 168);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(count_upsets({n}) == n + 1);
  // the empty product has one point
  CHECK(count_upsets({}) == 2);
  CHECK(count_upsets({0, 3}) == 1);
}

TEST_CASE("counting agrees with the subset oracle") {
  const std::vector<std::vector<std::size_t>> cases{{2, 2}, {3, 3}, {2, 3}, {1, 4}, {2, 2, 2}, {3, 2, 2}, {2, 2, 2, 2}, {4, 3}};
  for (const auto& dims : cases) REQUIRE(count_upsets(dims) == oracle::count_upsets(dims));
  // two chains: lattice paths, binomial(n0 + n1, n0)
  CHECK(count_upsets({3, 3}) == 20);
  CHECK(count_upsets({4, 3}) == 35);
}

TEST_CASE("up-set representation") {
  const ChainProduct p({2, 3});
  CHECK(p.size() == 6);
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(p.index(p.point(i)) == i);
  const auto u = UpSet::generated(p, {{0, 2}, {1, 1}});
  CHECK(u.is_up_closed());
  CHECK(u.minimal_tuples() == std::vector<Tuple>{{0, 2}, {1, 1}});
  CHECK(u.contains({1, 2}));
  CHECK_FALSE(u.contains({1, 0}));
  CHECK(to_string(u) == "{(0,2),(1,1)}");
  CHECK(UpSet::empty(p).minimal_tuples().empty());
  CHECK(UpSet::full(p).minimal_tuples() == std::vector<Tuple>{{0, 0}});

  const auto all = all_upsets(p);
  CHECK(all.size() == count_upsets({2, 3}));
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (const auto& a : all) {
    REQUIRE(a.is_up_closed());
    REQUIRE(UpSet::generated(p, a.minimal_tuples()) == a);
    const auto mins = a.minimal_tuples();
    for (const auto& s : mins)
      for (const auto& t : mins)
        if (s != t) REQUIRE_FALSE(ChainProduct::below(s, t));
    for (const auto& b : all) REQUIRE(subset_of(a & b, a));
  }
}

TEST_CASE("coding maps") {
  const auto x = letters(ab(), {"a", "a"});
  CHECK(coding_maps(x, w("")).f == 0);
  CHECK(coding_maps(x, w("a")).f == 1);
  CHECK(coding_maps(x, w("b")).f == 0);
  CHECK(coding_maps(x, w("bab")).g == 0);
  CHECK(coding_maps(x, w("")).g == 1);
  REQUIRE_THROWS_AS(coding_maps(x, w("aba")), precondition_error);
  CHECK(x.segment() == seg({"aa"}));
}

TEST_CASE("coding law uv ∈ F iff f(u) > g(v)") {
  auto abc = plain_alphabet("abc");
  const std::vector<LetterProduct> products{letters(ab(), {"a", "a"}), letters(ab(), {"a", "b"}),
                                            letters(ab(), {"ab", "a", "b"}), letters(abc, {"ab", "bc"}),
                                            letters(abc, {"c", "ab", "a"})};
  for (const auto& x : products) {
    const auto f = x.segment();
    const std::size_t n = x.factors.size();
    const auto words = words_up_to(x.alphabet, x.alphabet->size() == 2 ? 5 : 4);
    for (const auto& v : words) {
      if (f.contains(v)) continue;
      const auto c = coding_maps(x, v);
      REQUIRE(c.f < n);
      REQUIRE(c.g < n);
      // f(v) = largest m with v ∈ ↑(X_0 ⋯ X_{m-1})
      LetterProduct prefix{x.alphabet, {x.factors.begin(), x.factors.begin() + static_cast<long>(c.f)}};
      REQUIRE(prefix.segment().contains(v));
      LetterProduct longer{x.alphabet, {x.factors.begin(), x.factors.begin() + static_cast<long>(c.f + 1)}};
      REQUIRE_FALSE(longer.segment().contains(v));
    }
    for (const auto& u : words) {
      if (f.contains(u)) continue;
      const auto cu = coding_maps(x, u);
      for (const auto& v : words) {
        if (f.contains(v)) continue;
        REQUIRE(f.contains(concat(u, v)) == (cu.f > coding_maps(x, v).g));
      }
    }
  }
}

TEST_CASE("tuples of words") {
  const std::vector<Word> gens{w("aa"), w("bb")};
  CHECK(tuple_of_word(gens, w("")) == Tuple{2, 2});
  CHECK(tuple_of_word(gens, w("b")) == Tuple{2, 1});
  CHECK(tuple_of_word(gens, w("ab")) == Tuple{1, 1});
  CHECK(tuple_of_word(gens, w("aabb")) == Tuple{0, 0});

  // achievable tuples are exactly the tuples of all short words
  for (const auto& f : {seg({"aa", "bb"}), seg({"aba", "bb"}), seg({"ab", "ba", "aaa"})}) {
    std::set<Tuple> seen;
    for (const auto& v : words_up_to(ab(), 7)) seen.insert(tuple_of_word(f.basis(), v));
    std::set<Tuple> got;
    for (const auto& [t, witness] : achievable_tuples(f.basis(), ab())) {
      got.insert(t);
      REQUIRE(tuple_of_word(f.basis(), witness) == t);
      REQUIRE(right_residual(f, witness) == residual_of_tuple(f.basis(), t, ab()));
    }
    REQUIRE(got == seen);
  }
}

TEST_CASE("phi and psi on the square") {
  const auto f = seg({"aa", "bb"});
  const auto env = build_envelope(f);
  const ChainProduct grid({2, 2});
  CHECK(phi(env, f) == UpSet::empty(grid));
  CHECK(phi(env, FinalSegment::universe(ab())) == UpSet::full(grid));
  std::set<UpSet> images;
  for (const auto& e : env.elements()) images.insert(phi(env, e));
  CHECK(images.size() == 6);
  CHECK(psi(grid, UpSet::full(grid), f.basis(), ab()).is_universe());
  CHECK(psi(grid, UpSet::empty(grid), f.basis(), ab()) == f);
  for (const auto& e : env.elements()) CHECK(psi(grid, phi(env, e), f.basis(), ab()) == e);
  CHECK(to_string(phi(env, seg({"a", "bb"}))) == "{(1,0)}");
}

TEST_CASE("psi uses prefixes of length x_i + 1") {
  // The other readings of the prefix length do not invert phi on the square.
  const auto f = seg({"aa", "bb"});
  const auto env = build_envelope(f);
  auto psi_with = [&](const UpSet& y, int shift) {
    FinalSegment out = FinalSegment::universe(ab());
    for (std::size_t i = 0; i < y.product().size(); ++i) {
      if (y.mask()[i]) continue;
      const Tuple x = y.product().point(i);
      std::vector<Word> ws;
      for (std::size_t k = 0; k < x.size(); ++k) {
        const long len = static_cast<long>(x[k]) + shift;
        ws.push_back(f.basis()[k].prefix(static_cast<std::size_t>(std::max(0L, len))));
      }
      out = intersect(out, FinalSegment(ab(), ws));
    }
    return out;
  };
  std::size_t hits[3] = {0, 0, 0};
  for (const auto& e : env.elements())
    for (int shift = -1; shift <= 1; ++shift) hits[shift + 1] += psi_with(phi(env, e), shift) == e;
  CHECK(hits[0] < env.size());
  CHECK(hits[1] < env.size());
  CHECK(hits[2] == env.size());
}

TEST_CASE("round trip, intersections and order on the regression set") {
  for (const auto& f : oracle::regression_set(ab())) {
    const auto env = build_envelope(f);
    const auto grid = product_of(f.basis());
    const bool exact = disjoint_downsets(f.basis());
    std::vector<UpSet> images;
    for (const auto& e : env.elements()) images.push_back(phi(env, e));
    for (std::size_t i = 0; i < env.size(); ++i) {
      REQUIRE(images[i].is_up_closed());
      REQUIRE(psi(grid, images[i], f.basis(), ab()) == env[i]);
      for (std::size_t j = 0; j < env.size(); ++j) {
        const auto meet = *env.index_of(intersect(env[i], env[j]));
        REQUIRE(subset_of(images[meet], images[i] & images[j]));
        if (exact) REQUIRE(images[meet] == (images[i] & images[j]));
        if (i != j) REQUIRE(images[i] != images[j]);
        if (subset_of(env[i], env[j])) REQUIRE(subset_of(images[i], images[j]));
      }
    }
    if (grid.size() <= 16) {
      const auto all = all_upsets(grid);
      for (const auto& y : all)
        for (const auto& z : all)
          REQUIRE(psi(grid, y & z, f.basis(), ab()) ==
                  intersect(psi(grid, y, f.basis(), ab()), psi(grid, z, f.basis(), ab())));
    }
  }
}

TEST_CASE("phi misses intersections when the coding is not onto") {
  // no word outside ↑{ab,ba} has tuple (1,1), so φ(↑a) ∩ φ(↑b) keeps it
  const auto f = seg({"ab", "ba"});
  const auto env = build_envelope(f);
  const auto both = phi(env, seg({"a"})) & phi(env, seg({"b"}));
  CHECK(to_string(both) == "{(1,1)}");
  CHECK(phi(env, intersect(seg({"a"}), seg({"b"}))).count() == 0);
  CHECK(psi(product_of(f.basis()), both, f.basis(), ab()) == f);
  CHECK_FALSE(disjoint_downsets(f.basis()));
}

TEST_CASE("disjoint down-sets") {
  CHECK(disjoint_downsets({w("aa"), w("bb")}));
  auto abc = plain_alphabet("abc");
  CHECK_FALSE(disjoint_downsets({parse_word(abc, "ab"), parse_word(abc, "bc")}));
  auto below = make_alphabet({"a", "b", "c"}, {{"c", "a"}, {"c", "b"}});
  CHECK_FALSE(disjoint_downsets({parse_word(below, "a"), parse_word(below, "b")}));
  auto above = make_alphabet({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
  CHECK(disjoint_downsets({parse_word(above, "a"), parse_word(above, "b")}));
}

TEST_CASE("full embedding") {
  auto r = verify_full_embedding(seg({"aa", "bb"}));
  CHECK(r.ok());
  CHECK(r.envelope_size == 6);
  CHECK(r.upset_count == 6);
  auto abc = plain_alphabet("abc");
  r = verify_full_embedding(make_segment(abc, {"aa", "bb", "cc"}));
  CHECK(r.ok());
  CHECK(r.envelope_size == 20);
  r = verify_full_embedding(seg({"ab"}));
  CHECK(r.ok());
  CHECK(r.envelope_size == 3);
  CHECK(verify_full_embedding(seg({"aaa", "bbb"})).envelope_size == 20);
  CHECK(verify_full_embedding(seg({"a", "bbb"})).ok());
  CHECK(verify_full_embedding(make_segment(abc, {"ab", "c"})).ok());
  REQUIRE_THROWS_AS(verify_full_embedding(seg({"ab", "ba"})), precondition_error);
}
