#include "doctest.h"
#include "fixtures.hpp"
#include "leveltree/enumerate.hpp"
#include "leveltree/transitions.hpp"

using namespace leveltree;

TEST_CASE("the transition between equal special choices is the identity") {
  const LevelTree t = fixture::fig2();
  const SpecialChoice s = default_special(t);
  const Chart x(t, s), xa(t, s, {}, Decor::kPrime);
  const MonomialMap g = special_vertex_transition(x, xa);
  for (const auto& [target, image] : g.assignment()) {
    Symbol plain = target;
    plain.decor = Decor::kNone;
    CHECK(image == Monomial(plain));
  }
  CHECK(verify_special_vertex_transition(t, s, s).ok);
}

TEST_CASE("all special choices on a tree with three children at one level") {
  const LevelTree t = fixture::tree(
      R"({"root":"o","parents":{"a":"o","b":"o","c":"o","d":"a","e":"a"},)"
      R"("weights":{"o":0,"a":0,"b":1,"c":1,"d":1,"e":1},)"
      R"("levels":{"o":"0","a":"-1","b":"-1","c":"-1","d":"-2","e":"-2"}})");
  const auto choices = all_special_choices(t);
  CHECK(choices.size() == 3);
  for (const auto& v : choices)
    for (const auto& w : choices) {
      const CheckResult r = verify_special_vertex_transition(t, v, w);
      CHECK_MESSAGE(r.ok, r.detail);
    }
}

TEST_CASE("parameter change with symbolic units on the worked example") {
  const LevelTree t = fixture::fig2();
  const CheckResult r = verify_parameter_transition(t, default_special(t));
  CHECK_MESSAGE(r.ok, r.detail);
  CHECK(r.cases > 0);
}

TEST_CASE("recentering at strata of the worked example") {
  const LevelTree t = fixture::fig2();
  const SpecialChoice s = default_special(t);
  for (const IndexSubset& I : t.all_index_subsets()) {
    const CheckResult r = verify_stratum_transition(t, s, I);
    CHECK_MESSAGE(r.ok, r.detail);
  }
  const CheckResult r = verify_stratum_transition(t, s, IndexSubset{{Rational(-2)}, {}});
  CHECK(r.ok);
  CHECK(r.cases > 0);
}

TEST_CASE("every transition on every instance with at most four edges") {
  EnumSpec spec;
  spec.max_edges = 4;
  for_each_level_tree(spec, [&](const LevelTree& t) {
    const CheckResult r = run_transition_checks(t);
    CHECK_MESSAGE(r.ok, r.detail);
  });
}
