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

Automaton random_saturated(std::mt19937& rng, const AlphabetPtr& alpha, std::size_t states, std::size_t edges) {
  std::uniform_int_distribution<StateId> state(0, static_cast<StateId>(states - 1));
  std::uniform_int_distribution<std::size_t> letter(0, alpha->size() - 1);
  std::vector<Transition> ts;
  for (std::size_t i = 0; i < edges; ++i) ts.push_back({state(rng), static_cast<Letter>(letter(rng)), state(rng)});
  return Automaton(saturate(TransitionSystem(alpha, states, ts)), {0}, {static_cast<StateId>(states - 1)});
}

} // namespace

TEST_CASE("saturate") {
  TransitionSystem empty(ab(), 2, {});
  CHECK(saturate(empty).transitions().size() == 4);

  TransitionSystem one(ab(), 2, {{0, 0, 1}});
  const auto s = saturate(one);
  CHECK(s.transitions().size() == 6);
  CHECK(s.has(0, 0, 1));
  CHECK(s.has(1, 0, 0));

  auto ordered = make_alphabet({"a", "b"}, {{"a", "b"}});
  const auto o = saturate(TransitionSystem(ordered, 2, {{0, 0, 1}}));
  CHECK(o.has(0, 1, 1));
  CHECK(o.has(1, 1, 0));
  CHECK(o.has(1, 0, 0));
  CHECK(o.transitions().size() == 8);
  CHECK(saturate(o).transitions() == o.transitions());

  auto p = main_example::alphabet();
  const auto inv = saturate(TransitionSystem(p, 2, {{0, *p->find("a"), 1}}));
  CHECK(inv.has(1, *p->find("a′"), 0));
  CHECK_FALSE(inv.has(1, *p->find("a"), 0));
}

TEST_CASE("reflexive involutive check") {
  CHECK(is_reflexive_involutive(saturate(TransitionSystem(ab(), 3, {{0, 1, 2}}))));
  CHECK_FALSE(is_reflexive_involutive(TransitionSystem(ab(), 1, {})));
  auto full = saturate(TransitionSystem(ab(), 2, {{0, 0, 1}})).transitions();
  full.erase(std::find(full.begin(), full.end(), Transition{1, 0, 0}));
  CHECK_FALSE(is_reflexive_involutive(TransitionSystem(ab(), 2, full)));
  auto ordered = make_alphabet({"a", "b"}, {{"a", "b"}});
  auto o = saturate(TransitionSystem(ordered, 2, {{0, 0, 1}})).transitions();
  o.erase(std::find(o.begin(), o.end(), Transition{0, 1, 1}));
  CHECK_FALSE(is_reflexive_involutive(TransitionSystem(ordered, 2, o)));
}

TEST_CASE("acceptance") {
  Automaton single(saturate(TransitionSystem(ab(), 1, {})), {0}, {0});
  CHECK(accepts(single, w("")));
  const auto env = build_envelope(seg({"aa", "bb"}));
  CHECK(accepts(env.automaton(), w("aa")));
  CHECK(accepts(env.automaton(), w("abb")));
  CHECK_FALSE(accepts(env.automaton(), w("ab")));
  CHECK_FALSE(accepts(env.automaton(), w("")));
}

TEST_CASE("accepted basis") {
  CHECK(accepted_basis(build_envelope(seg({"aa", "bb"})).automaton()) == seg({"aa", "bb"}));
  Automaton loops(saturate(TransitionSystem(ab(), 2, {})), {0}, {1});
  CHECK(accepted_basis(loops).is_empty());
  Automaton single(saturate(TransitionSystem(ab(), 1, {})), {0}, {0});
  CHECK(accepted_basis(single).is_universe());
  REQUIRE_THROWS_AS(accepted_basis(Automaton(TransitionSystem(ab(), 2, {{0, 0, 1}}), {0}, {1})),
                    precondition_error);
}

TEST_CASE("accepted language of saturated automata is up-closed and matches the basis") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto aut = random_saturated(rng, ab(), 2 + trial % 4, 1 + trial % 5);
    const auto basis = accepted_basis(aut);
    const auto& b = basis.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        if (i != j) REQUIRE_FALSE(embeds(b[i], b[j]));
    REQUIRE(language_equals_segment(aut, basis).equal);
    REQUIRE_FALSE(oracle::language_difference(aut, basis, 6));
    for (const auto& x : words_up_to(ab(), 4))
      if (accepts(aut, x))
        for (const auto& y : words_up_to(ab(), 5))
          if (embeds(x, y)) REQUIRE(accepts(aut, y));
    // d(p, q) and d(q, p) are mirror images
    Automaton back(aut.system, aut.final, aut.initial);
    REQUIRE(accepted_basis(back) == involute(basis));
  }
}

TEST_CASE("nondeterministic simulation agrees with path search") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto aut = random_saturated(rng, ab(), 4, 3);
    for (const auto& x : words_up_to(ab(), 5)) REQUIRE(accepts(aut, x) == oracle::accepts(aut, x));
  }
}

TEST_CASE("language equality with witnesses") {
  const auto f = seg({"aa", "bb"});
  CHECK(language_equals_segment(build_envelope(f).automaton(), f).equal);
  Automaton loops(saturate(TransitionSystem(ab(), 2, {})), {0}, {1});
  auto r = language_equals_segment(loops, seg({"a"}));
  CHECK_FALSE(r.equal);
  REQUIRE(r.witness);
  CHECK(*r.witness == w("a"));
  Automaton single(saturate(TransitionSystem(ab(), 1, {})), {0}, {0});
  CHECK(language_equals_segment(single, FinalSegment::universe(ab())).equal);

  // accepts too much: ↑a instead of ↑aa
  Automaton one_step(saturate(TransitionSystem(ab(), 2, {{0, 0, 1}})), {0}, {1});
  r = language_equals_segment(one_step, seg({"aa"}));
  CHECK_FALSE(r.equal);
  CHECK(*r.witness == w("a"));
  // accepts too little: ↑ab instead of ↑{ab, ba}
  r = language_equals_segment(build_envelope(seg({"ab"})).automaton(), seg({"ab", "ba"}));
  CHECK_FALSE(r.equal);
  CHECK(*r.witness == w("ba"));
}

TEST_CASE("minimal dfa") {
  auto m = minimal_dfa(seg({"ab"}));
  CHECK(m.dfa.size() == 3);
  std::set<FinalSegment> states(m.residuals.begin(), m.residuals.end());
  CHECK(states == std::set<FinalSegment>{seg({"ab"}), seg({"b"}), FinalSegment::universe(ab())});
  CHECK(minimal_dfa(FinalSegment::universe(ab())).dfa.size() == 1);
  auto e = minimal_dfa(seg({}));
  CHECK(e.dfa.size() == 1);
  CHECK_FALSE(e.dfa.accepts(w("")));

  auto big = minimal_dfa(seg({"aa", "bb"}));
  CHECK(big.residuals.front() == seg({"aa", "bb"}));
  std::set<FinalSegment> got(big.residuals.begin(), big.residuals.end());
  CHECK(got == std::set<FinalSegment>{seg({"aa", "bb"}), seg({"a", "bb"}), seg({"b", "aa"}), seg({"a", "b"}),
                                      FinalSegment::universe(ab())});

  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = oracle::random_segment(rng, ab(), 3, 3);
    const auto d = minimal_dfa(f);
    for (std::size_t s = 0; s < d.dfa.size(); ++s) REQUIRE(d.dfa.accepting[s] == d.residuals[s].is_universe());
    for (const auto& x : words_up_to(ab(), 6)) REQUIRE(d.dfa.accepts(x) == oracle::in_segment(f, x));
    // no two states recognise the same language
    for (std::size_t p = 0; p < d.dfa.size(); ++p)
      for (std::size_t q = p + 1; q < d.dfa.size(); ++q) REQUIRE(d.residuals[p] != d.residuals[q]);
  }
}

TEST_CASE("determinize and complement") {
  const auto f = seg({"ab", "bba"});
  const auto d = determinize(build_envelope(f).automaton());
  const auto c = complement(d);
  for (const auto& x : words_up_to(ab(), 6)) {
    REQUIRE(d.accepts(x) == f.contains(x));
    REQUIRE(c.accepts(x) != f.contains(x));
  }
  const auto finite = dfa_from_words(ab(), {w("ab"), w("")});
  CHECK(finite.accepts(w("ab")));
  CHECK(finite.accepts(w("")));
  CHECK_FALSE(finite.accepts(w("a")));
  CHECK_FALSE(finite.accepts(w("abb")));
}

TEST_CASE("difference witnesses") {
  const auto m = minimal_dfa(seg({"aa", "bb"}));
  for (const auto& [p, wp] : reachable_states(m.dfa))
    for (const auto& [q, wq] : reachable_states(m.dfa)) {
      auto x = difference_witness(m.dfa, p, q);
      REQUIRE(x.has_value() == !subset_of(m.residuals[p], m.residuals[q]));
      if (x) {
        REQUIRE(m.residuals[p].contains(*x));
        REQUIRE_FALSE(m.residuals[q].contains(*x));
      }
      REQUIRE(left_residual(wp, seg({"aa", "bb"})) == m.residuals[p]);
    }
}

TEST_CASE("isomorphism") {
  const auto env = build_envelope(seg({"aa", "bb"}));
  const auto a = env.automaton();
  CHECK(isomorphic(a, a));
  CHECK_FALSE(isomorphic(a, build_envelope(seg({"ab"})).automaton()));

  // a relabelled copy is isomorphic, and the witness map carries transitions over
  std::vector<StateId> perm{3, 5, 0, 1, 4, 2};
  std::vector<Transition> moved;
  for (const auto& t : a.system.transitions()) moved.push_back({perm[t.from], t.letter, perm[t.to]});
  Automaton b(TransitionSystem(ab(), 6, moved), {perm[a.initial[0]]}, {perm[a.final[0]]});
  auto iso = isomorphism(a, b);
  REQUIRE(iso);
  for (const auto& t : a.system.transitions()) CHECK(b.system.has((*iso)[t.from], t.letter, (*iso)[t.to]));

  // swapping initial and final breaks it unless the language is symmetric
  CHECK(isomorphic(a, Automaton(a.system, a.final, a.initial)));
  const auto chain = build_envelope(seg({"ab"})).automaton();
  CHECK_FALSE(isomorphic(chain, Automaton(chain.system, chain.final, chain.initial)));

  const auto alpha = main_example::alphabet();
  CHECK_FALSE(isomorphic(main_example::build(alpha, main_example::first_edges()),
                         main_example::build(alpha, main_example::second_edges())));
}

TEST_CASE("articulation states") {
  const auto chain = build_envelope(seg({"ab"}));
  const auto cut = articulation_states(chain.system(), chain.x(), chain.y());
  REQUIRE(cut.size() == 1);
  CHECK(chain[cut[0]] == seg({"a"}));
  const auto square = build_envelope(seg({"aa", "bb"}));
  CHECK(articulation_states(square.system(), square.x(), square.y()).empty());
  CHECK(articulation_states(saturate(TransitionSystem(ab(), 2, {{0, 0, 1}})), 0, 1).empty());

  const auto longer = build_envelope(seg({"aba"}));
  const auto order = articulation_states(longer.system(), longer.x(), longer.y());
  REQUIRE(order.size() == 2);
  CHECK(longer[order[0]] == seg({"a"}));
  CHECK(longer[order[1]] == seg({"ab"}));
}
