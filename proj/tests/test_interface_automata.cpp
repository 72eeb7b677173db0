#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "preheap/heap.hpp"
#include "preheap/ia_corpus.hpp"
#include "preheap/interface_automata.hpp"

using namespace preheap;

namespace {

using Strings = std::set<std::string>;

InterfaceAutomaton ia(std::vector<std::string> states, std::optional<std::size_t> initial,
                      Strings in, Strings out, Strings hid, std::set<IaStep> steps) {
  return InterfaceAutomaton(std::move(states), initial, std::move(in), std::move(out),
                            std::move(hid), std::move(steps));
}

// Single state, no actions: the unit of composition up to renaming.
InterfaceAutomaton trivial() { return ia({"t"}, 0, {}, {}, {}, {}); }

}  // namespace

TEST_CASE("construction rejects malformed automata") {
  CHECK_THROWS_AS(ia({"v", "v"}, 0, {}, {}, {}, {}), ValidationError);
  CHECK_THROWS_AS(ia({"v"}, 3, {}, {}, {}, {}), ValidationError);
  CHECK_THROWS_AS(ia({"v"}, 0, {"a"}, {"a"}, {}, {}), ValidationError);
  CHECK_THROWS_AS(ia({"v"}, 0, {"a"}, {}, {"a"}, {}), ValidationError);
  CHECK_THROWS_AS(ia({"v"}, 0, {"a"}, {}, {}, {{0, "z", 0}}), ValidationError);
  CHECK_THROWS_AS(ia({"v"}, 0, {"a"}, {}, {}, {{0, "a", 7}}), ValidationError);
}

TEST_CASE("shared actions") {
  const auto p = ia({"v"}, 0, {"i"}, {"o"}, {}, {});
  const auto q = ia({"u"}, 0, {"x"}, {"y"}, {}, {});
  CHECK(shared_actions(p, q).empty());

  const auto q2 = ia({"u"}, 0, {"o"}, {}, {}, {});
  CHECK(shared_actions(p, q2) == Strings{"o"});

  // Same-direction overlap is not shared.
  const auto q3 = ia({"u"}, 0, {"i"}, {}, {}, {});
  CHECK(shared_actions(p, q3).empty());
}

TEST_CASE("composability") {
  const auto p = ia({"v"}, 0, {"i"}, {"o"}, {}, {});
  CHECK(composable(p, ia({"u"}, 0, {"x"}, {"y"}, {}, {})));
  CHECK(!composable(p, ia({"u"}, 0, {}, {"o"}, {}, {})));         // output clash
  CHECK(!composable(p, ia({"u"}, 0, {}, {}, {"i"}, {})));         // hidden overlaps p's action
  CHECK(!composable(ia({"v"}, 0, {}, {}, {"h"}, {}), ia({"u"}, 0, {"h"}, {}, {}, {})));
}

TEST_CASE("product") {
  SUBCASE("with the trivial automaton: isomorphic copy") {
    const auto p = ia({"v0", "v1"}, 0, {"i"}, {"o"}, {}, {{0, "i", 1}, {1, "o", 0}});
    const auto prod = product(p, trivial());
    CHECK(prod.states().size() == 2);
    CHECK(prod.inputs() == p.inputs());
    CHECK(prod.outputs() == p.outputs());
    CHECK(prod.steps().size() == 2);
    CHECK(prod.states()[0] == "(v0,t)");
  }

  SUBCASE("shared action synchronizes and becomes hidden") {
    const auto p = ia({"v0", "v1"}, 0, {}, {"a"}, {}, {{0, "a", 1}});
    const auto q = ia({"u0", "u1"}, 0, {"a"}, {}, {}, {{0, "a", 1}});
    const auto prod = product(p, q);
    CHECK(prod.hidden() == Strings{"a"});
    CHECK(prod.inputs().empty());
    CHECK(prod.outputs().empty());
    REQUIRE(prod.steps().size() == 1);
    const auto step = *prod.steps().begin();
    CHECK(prod.states()[step.from] == "(v0,u0)");
    CHECK(prod.states()[step.to] == "(v1,u1)");
  }

  SUBCASE("private actions interleave over every peer state") {
    const auto p = ia({"v0", "v1"}, 0, {}, {"b"}, {}, {{0, "b", 1}});
    const auto q = ia({"u0", "u1", "u2"}, 0, {"a"}, {}, {}, {{0, "a", 1}, {1, "a", 2}});
    const auto prod = product(p, q);
    std::size_t b_steps = 0;
    for (const auto& s : prod.steps())
      if (s.action == "b") ++b_steps;
    CHECK(b_steps == q.states().size());
  }

  SUBCASE("non-composable operands are refused") {
    CHECK_THROWS_AS(product(ia({"v"}, 0, {}, {"o"}, {}, {}), ia({"u"}, 0, {}, {"o"}, {}, {})),
                    ComposabilityError);
  }
}

TEST_CASE("illegal states") {
  SUBCASE("no shared actions, no illegal states") {
    const auto p = ia({"v"}, 0, {"i"}, {}, {}, {});
    const auto q = ia({"u"}, 0, {"x"}, {}, {}, {});
    CHECK(illegal_states(p, q).empty());
  }

  SUBCASE("unreceived shared output is illegal") {
    const auto p = ia({"v"}, 0, {}, {"a"}, {}, {{0, "a", 0}});
    const auto q = ia({"u0", "u1"}, 0, {"a"}, {}, {}, {{1, "a", 1}});
    const auto bad = illegal_states(p, q);
    CHECK(bad == std::set<StatePair>{{0, 0}});
  }

  SUBCASE("always input-enabled peer leaves nothing illegal") {
    const auto p = ia({"v"}, 0, {}, {"a"}, {}, {{0, "a", 0}});
    const auto q = ia({"u"}, 0, {"a"}, {}, {}, {{0, "a", 0}});
    CHECK(illegal_states(p, q).empty());
  }
}

TEST_CASE("incompatible states") {
  SUBCASE("empty illegal set stays empty") {
    const auto p = ia({"v"}, 0, {"i"}, {}, {}, {});
    const auto q = ia({"u"}, 0, {"x"}, {}, {}, {});
    CHECK(incompatible_states(p, q).empty());
  }

  SUBCASE("an output step into an illegal state spreads incompatibility") {
    const auto p = ia({"v0", "v1"}, 0, {}, {"x", "a"}, {}, {{0, "x", 1}, {1, "a", 1}});
    const auto q = ia({"u"}, 0, {"a"}, {}, {}, {});
    const auto bad = incompatible_states(p, q);
    CHECK(bad.count({1, 0}));  // illegal: a! not accepted
    CHECK(bad.count({0, 0}));  // reaches it by the local step x!
  }

  SUBCASE("an input step into an illegal state does not spread") {
    const auto p = ia({"v0", "v1"}, 0, {"i"}, {"a"}, {}, {{0, "i", 1}, {1, "a", 1}});
    const auto q = ia({"u"}, 0, {"a"}, {}, {}, {});
    const auto bad = incompatible_states(p, q);
    CHECK(bad.count({1, 0}));
    CHECK(!bad.count({0, 0}));  // the environment can withhold i
  }
}

TEST_CASE("composition") {
  SUBCASE("no illegal states: composition equals the product") {
    const auto p = ia({"v0", "v1"}, 0, {}, {"a"}, {}, {{0, "a", 1}});
    const auto q = ia({"u0", "u1"}, 0, {"a"}, {}, {}, {{0, "a", 1}, {1, "a", 1}});
    const auto prod = product(p, q);
    const auto comp = compose(p, q);
    CHECK(comp.states() == prod.states());
    CHECK(comp.steps() == prod.steps());
  }

  SUBCASE("incompatible initial state is an error distinct from non-composable") {
    const auto p = ia({"v"}, 0, {}, {"a"}, {}, {{0, "a", 0}});
    const auto q = ia({"u"}, 0, {"a"}, {}, {}, {});
    CHECK_THROWS_AS(compose(p, q), IncompatibilityError);
  }

  SUBCASE("pruning removes the branch that runs into illegality, keeps the rest") {
    const auto p = ia({"v0", "v1", "v2", "v3"}, 0, {"i"}, {"x", "a", "o"}, {},
                      {{0, "i", 1}, {1, "x", 2}, {2, "a", 2}, {0, "o", 3}});
    const auto q = ia({"u"}, 0, {"a"}, {}, {}, {});
    const auto comp = compose(p, q);

    std::set<std::string> names(comp.states().begin(), comp.states().end());
    CHECK(names.count("(v0,u)"));
    CHECK(names.count("(v3,u)"));
    CHECK(!names.count("(v1,u)"));
    CHECK(!names.count("(v2,u)"));
    for (const auto& s : comp.steps()) CHECK(s.action == "o");
  }
}

TEST_CASE("mirror") {
  const auto p = ia({"v"}, 0, {"a"}, {"b"}, {"h"}, {{0, "h", 0}});
  const auto m = mirror(p);
  CHECK(m.inputs() == Strings{"b"});
  CHECK(m.outputs() == Strings{"a"});
  CHECK(m.hidden() == Strings{"h"});
  CHECK(mirror(m) == p);
}

TEST_CASE("hidden closure and external enabling") {
  SUBCASE("no hidden steps: the closure is the state itself") {
    const auto p = ia({"v"}, 0, {"i"}, {}, {}, {{0, "i", 0}});
    CHECK(eps_closure(p, 0) == std::set<std::size_t>{0});
  }

  const auto p = ia({"v0", "v1", "v2"}, 0, {"i"}, {"o"}, {"h"},
                    {{0, "h", 1}, {1, "o", 2}, {1, "h", 1}, {2, "i", 0}, {0, "o", 0}});

  SUBCASE("closure follows hidden chains") {
    CHECK(eps_closure(p, 0) == std::set<std::size_t>{0, 1});
  }

  SUBCASE("outputs behind hidden steps are externally enabled") {
    const auto ext = ext_enabled(p, 0);
    CHECK(ext.outputs == Strings{"o"});
    CHECK(ext.inputs.empty());
  }

  SUBCASE("ext_dest collects successors from the whole closure") {
    CHECK(ext_dest(p, 0, "o") == std::set<std::size_t>{0, 2});
    CHECK_THROWS_AS(ext_dest(p, 0, "nope"), ValidationError);
  }
}

TEST_CASE("alternating simulation") {
  SUBCASE("identity: the diagonal survives") {
    const auto p = ia({"v0", "v1"}, 0, {"i"}, {"o"}, {}, {{0, "i", 1}, {1, "o", 0}});
    const auto rel = alternating_simulation(p, p);
    CHECK(rel.count({0, 0}));
    CHECK(rel.count({1, 1}));
  }

  SUBCASE("input enabling is contravariant") {
    const auto rich = ia({"v"}, 0, {"i"}, {}, {}, {{0, "i", 0}});
    const auto poor = ia({"v"}, 0, {}, {}, {}, {});
    CHECK(alternating_simulation(rich, poor).count({0, 0}));
    CHECK(!alternating_simulation(poor, rich).count({0, 0}));
  }

  SUBCASE("greatest fixpoint: an independent audit finds no slack") {
    const auto q = ia({"u0", "u1"}, 0, {"i"}, {"o"}, {}, {{0, "i", 1}, {1, "o", 1}});
    const auto p = ia({"v0", "v1"}, 0, {"i"}, {"o"}, {}, {{0, "i", 1}, {1, "o", 0}});
    const auto rel = alternating_simulation(q, p);

    const auto conditions_hold = [&](std::size_t u, std::size_t v) {
      const auto qe = ext_enabled(q, u);
      const auto pe = ext_enabled(p, v);
      for (const auto& a : pe.inputs)
        if (!qe.inputs.count(a)) return false;
      for (const auto& a : qe.outputs)
        if (!pe.outputs.count(a)) return false;
      for (const auto& a : qe.outputs)
        for (auto u2 : ext_dest(q, u, a)) {
          bool any = false;
          for (auto v2 : ext_dest(p, v, a)) any = any || rel.count({u2, v2});
          if (!any) return false;
        }
      for (const auto& a : pe.inputs)
        for (auto v2 : ext_dest(p, v, a)) {
          bool any = false;
          for (auto u2 : ext_dest(q, u, a)) any = any || rel.count({u2, v2});
          if (!any) return false;
        }
      return true;
    };

    for (std::size_t u = 0; u < q.states().size(); ++u)
      for (std::size_t v = 0; v < p.states().size(); ++v)
        CHECK(rel.count({u, v}) == (conditions_hold(u, v) ? 1 : 0));
  }
}

TEST_CASE("refinement") {
  const auto p = ia({"v0", "v1"}, 0, {"i"}, {"o"}, {}, {{0, "i", 1}, {1, "o", 0}});

  CHECK(refines(p, p));

  SUBCASE("empty-initial automata refine nothing") {
    const auto empty_init = ia({"v"}, std::nullopt, {"i"}, {}, {}, {});
    CHECK(!refines(empty_init, p));
    CHECK(!refines(p, empty_init));
    CHECK(!refines(empty_init, empty_init));
  }

  SUBCASE("an extra declared output blocks refinement despite equal structure") {
    auto q = ia({"v0", "v1"}, 0, {"i"}, {"o", "z"}, {}, {{0, "i", 1}, {1, "o", 0}});
    CHECK(!refines(q, p));
    CHECK(refines(p, q));  // the other direction only widens the output budget
  }

  SUBCASE("dropping an output step is a refinement") {
    const auto q = ia({"v0", "v1"}, 0, {"i"}, {"o"}, {}, {{0, "i", 1}});
    CHECK(refines(q, p));
    CHECK(!refines(p, q));
  }
}

TEST_CASE("quotient") {
  SUBCASE("dividing by the trivial automaton returns the dividend up to renaming") {
    const auto p = ia({"v0", "v1"}, 0, {"i"}, {"o"}, {}, {{0, "i", 1}, {1, "o", 0}});
    const auto r = ia_quotient(p, trivial());
    CHECK(refines(r, p));
    CHECK(refines(p, r));
  }

  SUBCASE("serial decomposition: the quotient consumes u and emits o") {
    const auto p = ia({"p0", "p1"}, 0, {"i"}, {"o"}, {}, {{0, "i", 1}, {1, "o", 0}});
    const auto q = ia({"q0"}, 0, {}, {"u"}, {}, {{0, "u", 0}});
    const auto r = ia_quotient(p, q);
    CHECK(r.inputs().count("u"));
    CHECK(r.inputs().count("i"));
    CHECK(r.outputs() == Strings{"o"});
    CHECK(refines(compose(q, r), p));
  }

  SUBCASE("undefined when the mirrored dividend clashes with the divisor") {
    const auto p = ia({"p"}, 0, {"c"}, {}, {}, {{0, "c", 0}});
    const auto q = ia({"q"}, 0, {"c"}, {}, {}, {});
    CHECK_THROWS_AS(ia_quotient(p, q), TheoryError);
  }

  SUBCASE("surfaced counterexample: a divisor consuming the dividend's visible "
          "output defeats the closed form") {
    // P must show o1 before o2; Q consumes o1. The quotient is defined and
    // the follow-up composition evaluates, but hiding o1 lets the composite
    // offer o2 where P still requires o1, so the regularity instance
    // compose(Q, quotient) <= P fails. Genuine solutions still exist below
    // the quotient (the trivial automaton is one). Overlapping signatures of
    // this shape are therefore outside the corpus used by the sampled
    // quotient checks; this test pins the observed behavior.
    const auto p = ia({"p0", "p1"}, 0, {}, {"o1", "o2"}, {}, {{0, "o1", 1}, {1, "o2", 1}});
    const auto q = ia({"q0", "q1"}, 0, {"o1"}, {}, {}, {{0, "o1", 1}});
    const auto r = ia_quotient(p, q);
    const auto composed = compose(q, r);
    CHECK(!refines(composed, p));

    const auto still_a_solution = compose(q, trivial());
    CHECK(refines(still_a_solution, p));
    CHECK(refines(trivial(), r));
  }

  SUBCASE("closed form equals the generic heap quotient") {
    const IaHeap h;
    const auto p = ia({"p0", "p1"}, 0, {"i"}, {"o"}, {}, {{0, "i", 1}, {1, "o", 0}});
    const auto q = ia({"q0"}, 0, {}, {"u"}, {}, {{0, "u", 0}});
    CHECK(quotient_right(h, q, p) == ia_quotient(p, q));
  }
}

TEST_CASE("merging and separation") {
  const auto p = ia({"p0", "p1"}, 0, {"i"}, {"o"}, {}, {{0, "i", 1}, {1, "o", 0}});

  SUBCASE("the trivial automaton is a unit for merging") {
    const auto merged = ia_merge(p, trivial());
    CHECK(refines(merged, p));
    CHECK(refines(p, merged));
  }

  SUBCASE("mirror duality") {
    const auto q = ia({"q0"}, 0, {"m"}, {}, {}, {{0, "m", 0}});
    CHECK(ia_merge(p, q) == mirror(compose(mirror(p), mirror(q))));
    CHECK(ia_separation(p, q) == compose(p, mirror(q)));
  }

  SUBCASE("sampled adjunction between merging and separation") {
    IaCorpus corpus(CorpusParams{2, 2, 77});
    std::size_t evaluated = 0;
    for (std::size_t n = 0; n < 60; ++n) {
      const auto a = corpus.any_automaton();
      const auto q = corpus.any_automaton();
      const auto x = corpus.any_automaton();
      bool lhs, rhs;
      try {
        lhs = refines(a, ia_merge(q, x));
        rhs = refines(ia_separation(a, q), x);
      } catch (const TheoryError&) {
        continue;
      }
      ++evaluated;
      CHECK(lhs == rhs);
    }
    CHECK(evaluated > 5);
  }
}

TEST_CASE("action partition survives the whole pipeline") {
  const auto p = ia({"p0", "p1"}, 0, {"i"}, {"o"}, {}, {{0, "i", 1}, {1, "o", 0}});
  const auto q = ia({"q0"}, 0, {}, {"u"}, {}, {{0, "u", 0}});
  for (const auto& r : {product(mirror(p), q), ia_quotient(p, q), ia_merge(p, q)}) {
    for (const auto& a : r.inputs()) {
      CHECK(!r.outputs().count(a));
      CHECK(!r.hidden().count(a));
    }
    for (const auto& a : r.outputs()) CHECK(!r.hidden().count(a));
  }
}

TEST_CASE("composition is commutative up to the pair-swap isomorphism") {
  const auto p = ia({"v0", "v1"}, 0, {}, {"a"}, {}, {{0, "a", 1}});
  const auto q = ia({"u0", "u1"}, 0, {"a"}, {}, {}, {{0, "a", 1}, {1, "a", 1}});
  CHECK(refines(compose(p, q), compose(q, p)));
  CHECK(refines(compose(q, p), compose(p, q)));
}

TEST_CASE("corpus properties at reduced size") {
  const auto check = run_corpus_checks(CorpusParams{4, 3, 2024}, 20, 5);
  for (const auto& v : check.report.violations) MESSAGE(v.axiom, ": ", v.witness);
  CHECK(check.report.ok());
  CHECK(check.quotients_defined == 20);
  CHECK(check.compositions_evaluated > 0);
  CHECK(check.candidates_accepted == 5);
}

TEST_CASE("corpus generation is deterministic in the seed") {
  IaCorpus c1(CorpusParams{4, 3, 9});
  IaCorpus c2(CorpusParams{4, 3, 9});
  for (int i = 0; i < 5; ++i) {
    const auto [p1, q1] = c1.quotient_pair();
    const auto [p2, q2] = c2.quotient_pair();
    CHECK(p1 == p2);
    CHECK(q1 == q2);
  }
}
