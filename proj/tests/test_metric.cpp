#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace fseg;

namespace {

AlphabetPtr ab() {
  static const AlphabetPtr a = plain_alphabet("ab");
  return a;
}

FinalSegment seg(std::initializer_list<std::string_view> ws) { return make_segment(ab(), ws); }
FinalSegment universe() { return FinalSegment::universe(ab()); }

MetricSpace two_points(const FinalSegment& f) { return {ab(), {{universe(), f}, {involute(f), universe()}}}; }

} // namespace

TEST_CASE("axioms hold on every envelope of the regression set") {
  for (const auto& f : oracle::regression_set(ab())) {
    const auto env = build_envelope(f);
    const auto m = metric_space(env);
    REQUIRE_FALSE(check_metric_axioms(m));
    REQUIRE(check_convexity(m).convex);
    REQUIRE(no_proper_isometric_subspace(m));
    REQUIRE(is_rigid_over_base(pointed_space(env)));
  }
}

TEST_CASE("axiom violations are reported") {
  MetricSpace bad_identity{ab(), {{universe(), universe()}, {universe(), universe()}}};
  auto v = check_metric_axioms(bad_identity);
  REQUIRE(v);
  CHECK(v->axiom == "identity");

  MetricSpace bad_symmetry{ab(), {{universe(), seg({"ab"})}, {seg({"ab"}), universe()}}};
  v = check_metric_axioms(bad_symmetry);
  REQUIRE(v);
  CHECK(v->axiom == "symmetry");

  // d(0,2) = ↑a is not ⊇ d(0,1)·d(1,2) = ↑bb
  MetricSpace bad_triangle{ab(),
                           {{universe(), seg({"b"}), seg({"aa"})},
                            {seg({"b"}), universe(), seg({"b"})},
                            {seg({"aa"}), seg({"b"}), universe()}}};
  v = check_metric_axioms(bad_triangle);
  REQUIRE(v);
  CHECK(v->axiom == "triangle");
}

TEST_CASE("convexity") {
  CHECK(check_convexity(metric_space(build_envelope(seg({"aa", "bb"})))).convex);
  CHECK(check_convexity(metric_space(build_envelope(seg({"ab"})))).convex);
  const auto r = check_convexity(two_points(seg({"ab"})));
  CHECK_FALSE(r.convex);
  REQUIRE(r.alpha);
  CHECK(to_string(*r.alpha) == "a");
  CHECK(to_string(*r.beta) == "b");
}

TEST_CASE("isometric subspaces") {
  MetricSpace point{ab(), {{universe()}}};
  CHECK(no_proper_isometric_subspace(point));
  CHECK(no_proper_isometric_subspace(metric_space(build_envelope(seg({"aa", "bb"})))));
  CHECK(no_proper_isometric_subspace(metric_space(build_envelope(seg({"ab"})))));

  const auto m = metric_space(build_envelope(seg({"aa", "bb"})));
  const auto sub = subspace(m, {0, 2, 5});
  auto emb = find_isometric_embedding(sub, m);
  REQUIRE(emb);
  CHECK(*emb == std::vector<std::size_t>{0, 2, 5});
  CHECK_FALSE(find_isometric_embedding(m, sub));
}

TEST_CASE("rigidity over the base points") {
  CHECK(is_rigid_over_base(pointed_space(build_envelope(seg({"aa", "bb"})))));
  // a space with a redundant copy of a point is not rigid
  const auto m = metric_space(build_envelope(seg({"ab"})));
  MetricSpace doubled{ab(), {}};
  const std::vector<std::size_t> src{0, 1, 2, 1};
  for (std::size_t p : src) {
    std::vector<FinalSegment> row;
    for (std::size_t q : src) row.push_back(m(p, q));
    doubled.d.push_back(row);
  }
  CHECK_FALSE(is_rigid_over_base({doubled, 0, 2}));
}

TEST_CASE("gluing pointed spaces") {
  const auto a = pointed_space(build_envelope(seg({"a"})));
  const auto b = pointed_space(build_envelope(seg({"b"})));
  const auto g = concat_pointed(a, b);
  CHECK(g.space.size() == 3);
  CHECK(g.space(g.x, g.y) == seg({"ab"}));
  CHECK_FALSE(check_metric_axioms(g.space));
  const PointedSpace point{{ab(), {{universe()}}}, 0, 0};
  const auto same = concat_pointed(a, point);
  CHECK(same.space.d == a.space.d);
  const auto left = concat_pointed(point, a);
  CHECK(left.space(left.x, left.y) == seg({"a"}));
  REQUIRE_THROWS_AS(concat_pointed(a, pointed_space(build_envelope(make_segment(plain_alphabet("abc"), {"c"})))),
                    alphabet_mismatch);
}
