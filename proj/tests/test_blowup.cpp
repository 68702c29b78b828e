#include <map>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "leveltree/blowup.hpp"
#include "leveltree/enumerate.hpp"
#include "leveltree/errors.hpp"
#include "oracles.hpp"

using namespace leveltree;

namespace {

Monomial M(const char* s) { return parse_monomial(s); }

std::set<std::set<std::string>> as_sets(const std::vector<TraverseSection>& ss) {
  std::set<std::set<std::string>> out;
  for (const auto& s : ss) out.insert(std::set<std::string>(s.edges.begin(), s.edges.end()));
  return out;
}

std::string point_key(const BlowupPoint& p) {
  std::string k;
  for (const Divisor& d : p.divisors) k += std::to_string(d.index) + to_string(d.section) + ";";
  k += "|";
  for (const auto& z : p.vanishing_zc) k += z + ",";
  return k;
}

RootedTree parents(std::map<std::string, std::string> p) { return RootedTree::from_parents("o", p); }

}  // namespace

TEST_CASE("traverse sections of small trees") {
  const LevelTree t = fixture::fig2();
  CHECK(as_sets(traverse_sections(t.tree())) ==
        std::set<std::set<std::string>>{{"a", "b"}, {"a", "c", "d"}});
  CHECK(as_sets(traverse_sections(parents({{"e", "o"}}))) == std::set<std::set<std::string>>{{"e"}});
  CHECK(as_sets(traverse_sections(parents({{"a", "o"}, {"b", "o"}, {"c", "o"}}))) ==
        std::set<std::set<std::string>>{{"a", "b", "c"}});
  CHECK(traverse_sections(RootedTree()).empty());
  CHECK(is_traverse_section(t.tree(), make_section({"b", "a"})));
  CHECK_FALSE(is_traverse_section(t.tree(), make_section({"a", "b", "c"})));
  CHECK_FALSE(is_traverse_section(t.tree(), make_section({"a", "zz"})));
}

TEST_CASE("traverse sections agree with brute force over edge subsets") {
  EnumSpec spec;
  spec.max_edges = 6;
  spec.max_weight = 0;
  spec.require_positive_weight = false;
  spec.stable = false;
  long trees = 0;
  for (const WeightedTree& w : gen_weighted_trees(spec)) {
    const auto got = traverse_sections(w.tree);
    CHECK(as_sets(got) == oracle::sections(w.tree));
    CHECK(got.size() == as_sets(got).size());
    for (const auto& s : got) CHECK(is_traverse_section(w.tree, s));
    ++trees;
  }
  // Rooted unlabelled trees with 1..7 vertices: 1 + 1 + 2 + 4 + 9 + 20 + 48.
  CHECK(trees == 85);
}

TEST_CASE("section order") {
  const RootedTree g = parents({{"a", "o"}, {"b", "o"}, {"a1", "a"}, {"a2", "a"}, {"b1", "b"}, {"b2", "b"}});
  const auto ab = make_section({"a", "b"});
  const auto left = make_section({"a1", "a2", "b"});
  const auto right = make_section({"a", "b1", "b2"});
  const auto leaves = make_section({"a1", "a2", "b1", "b2"});
  CHECK(section_compare(g, ab, ab) == Order::kEqual);
  CHECK(section_compare(g, ab, left) == Order::kGreater);
  CHECK(section_compare(g, leaves, right) == Order::kLess);
  CHECK(section_compare(g, left, right) == Order::kIncomparable);
  const CheckResult r = check_schedule(BlowupSchedule{g, {{2, ab}, {3, left}, {3, right}, {4, leaves}}});
  CHECK(r.ok);
  CHECK_FALSE(check_schedule(BlowupSchedule{g, {{3, ab}, {3, left}}}).ok);
}

TEST_CASE("gamma_bar stops at the first weighted vertex") {
  const LevelTree t = fixture::fig1();
  const RootedTree g = gamma_bar(t.base());
  // v3, x1, x2, x3 carry weight; y1, z1, z2 hang below weighted vertices.
  CHECK(g.names() == std::vector<std::string>{"o", "v1", "v2", "v3", "w2", "x1", "x2", "x3", "y2", "y3",
                                              "z1", "z2"});
  CHECK_FALSE(g.find("y1").has_value());
}

TEST_CASE("Y_k on the worked example") {
  const LevelTree t = fixture::fig2();
  CHECK(zk_components(t, 1).empty());
  CHECK(as_sets(zk_components(t, 2)) == std::set<std::set<std::string>>{{"a", "b"}});
  CHECK(as_sets(zk_components(t, 3)) == std::set<std::set<std::string>>{{"a", "b"}, {"a", "c", "d"}});
  const Chart x(t, default_special(t));
  CHECK(yk_pullback(x, 1).divisor.is_one());
  CHECK(yk_pullback(x, 2).divisor == M("eps(-1)"));
  CHECK(yk_pullback(x, 3).divisor == M("eps(-1) * eps(-2)"));
  for (int k = 1; k <= 4; ++k) CHECK(yk_pullback(x, k).check.ok);
  CHECK_THROWS_AS(zk_components(t, 0), Error);
}

TEST_CASE("psi2 on the worked example") {
  const LevelTree t = fixture::fig2();
  const BlowupPoint p = psi2_point(t);
  REQUIRE(p.divisors.size() == 2);
  CHECK(p.divisors[0].index == 2);
  CHECK(to_string(p.divisors[0].section) == "{a,b}");
  CHECK(p.divisors[1].index == 3);
  CHECK(to_string(p.divisors[1].section) == "{a,c,d}");
  CHECK(p.vanishing_zc.empty());
  const LevelTree back = psi2_level_tree(t.base(), p);
  CHECK(is_equivalent(back, t));
  CHECK(back.plus_levels() == std::vector<Rational>{Rational(-2), Rational(-3)});

  BlowupPoint swapped = p;
  std::swap(swapped.divisors[0].index, swapped.divisors[1].index);
  CHECK_THROWS_AS(psi2_level_tree(t.base(), swapped), Error);
  BlowupPoint bogus = p;
  bogus.divisors[0].section = make_section({"a", "c"});
  CHECK_THROWS_AS(psi2_level_tree(t.base(), bogus), Error);
}

TEST_CASE("psi2 with no divisor") {
  const WeightedTree tau = fixture::load("root_weighted.json").base;
  const LevelTree t = psi2_level_tree(tau, BlowupPoint{});
  CHECK(t.m() == Rational(0));
  CHECK(t.plus_levels().empty());
  CHECK_THROWS_AS(psi2_level_tree(fixture::fig2().base(), BlowupPoint{}), Error);
}

TEST_CASE("divisor data determines the level class") {
  EnumSpec spec;
  spec.max_edges = 5;
  spec.max_levels = 12;
  long classes = 0;
  for (const WeightedTree& tau : gen_weighted_trees(spec)) {
    std::map<std::string, int> seen;
    for (const LevelTree& t : gen_level_trees(tau, spec)) {
      const BlowupPoint p = psi2_point(t);
      CHECK(++seen[point_key(p)] == 1);
      CHECK(is_equivalent(psi2_level_tree(tau, p), t));
      ++classes;
    }
  }
  CHECK(classes > 0);
}

TEST_CASE("bundles on the worked example and a single edge") {
  const LevelTree t = fixture::fig2();
  const BundleTable b = build_bundles(t, default_special(t));
  CHECK(b.level.at(1).str() == "L_b");
  CHECK(b.level.at(2).str() == "L_a - L_b");
  CHECK(b.edge.at(t.tree().edge("c")) == FormalBundle::basis("c"));
  CHECK(bundle_identity(t, default_special(t)).ok);

  const LevelTree one = fixture::tree(
      R"({"root":"o","parents":{"e":"o"},"weights":{"o":0,"e":1},"levels":{"o":"0","e":"-1"}})");
  const BundleTable b1 = build_bundles(one, default_special(one));
  CHECK(b1.level.at(1) == FormalBundle::basis("e"));
  CHECK(bundle_identity(one, default_special(one)).ok);
}

TEST_CASE("psi2 chart map on the worked example") {
  const LevelTree t = fixture::fig2();
  const Chart x(t, default_special(t));
  const MonomialMap pi = blowup_pullback(x);
  CHECK(pi.at(zeta_symbol("c")) == M("eps~(-2) * rho_c"));
  CHECK(pi.at(zeta_symbol("a")) == M("eps~(-1) * eps~(-2)"));
  const MonomialMap psi = psi2_map(x);
  CHECK(psi.at(x.u(t.tree().edge("c"))) == M("rho_c"));
  CHECK(psi2_chart_check(t, default_special(t)).ok);
}

TEST_CASE("the first figure routes Im edges through zc") {
  const LevelTree t = fixture::fig1();
  const Chart x(t, default_special(t));
  const MonomialMap pi = blowup_pullback(x);
  CHECK(pi.at(zeta_symbol("y2")).exponent(zcheck_symbol("y2")) == 1);
  CHECK(pi.at(zeta_symbol("z1")) == M("z~_z1"));
  for (const SpecialChoice& s : all_special_choices(t)) CHECK(psi2_chart_check(t, s).ok);
}

TEST_CASE("ideal transforms of the worked example") {
  const LevelTree t = fixture::fig2();
  const SpecialChoice s = default_special(t);
  const BlowupTrace trace = simulate_blowup(Chart(t, s, default_tags()));
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].factor.is_one());
  CHECK(trace.steps[1].factor == M("eps~(-1)"));
  CHECK(trace.pullback.at(zeta_symbol("c")) == M("eps~(-2) * rho_c"));
  CHECK(ideal_transform_check(t, s, 1).ok);
  CHECK(ideal_transform_check(t, s, 2).ok);
  CHECK_THROWS_AS(ideal_transform_check(t, s, 0), Error);
  CHECK_THROWS_AS(ideal_transform_check(t, s, 3), Error);
  CHECK(ideal_transform_all(t, s).ok);
}

TEST_CASE("every blowup check on every instance with at most five edges") {
  EnumSpec spec;
  spec.max_edges = 5;
  for_each_level_tree(spec, [&](const LevelTree& t) {
    const CheckResult r = run_blowup_checks(t);
    CHECK_MESSAGE(r.ok, r.detail);
  });
}
