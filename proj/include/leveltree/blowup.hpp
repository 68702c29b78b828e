#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "leveltree/charts.hpp"
#include "leveltree/check.hpp"
#include "leveltree/level_tree.hpp"
#include "leveltree/monomial.hpp"

namespace leveltree {

// An edge set meeting every root-to-leaf path exactly once.
struct TraverseSection {
  std::vector<std::string> edges;  // sorted ids

  std::size_t size() const { return edges.size(); }
  bool contains(const std::string& e) const;
  bool operator==(const TraverseSection& o) const { return edges == o.edges; }
  // By size, then lexicographically.
  bool operator<(const TraverseSection& o) const;
};

std::string to_string(const TraverseSection& s);
TraverseSection make_section(std::vector<std::string> edges);

bool is_traverse_section(const RootedTree& g, const TraverseSection& s);
// Every traverse section, sorted. An edgeless tree has none: the path to
// the root alone contains no edge.
std::vector<TraverseSection> traverse_sections(const RootedTree& g);
// s1 > s2 iff s1 != s2 and each edge of s1 lies at or above some edge of s2.
Order section_compare(const RootedTree& g, const TraverseSection& s1, const TraverseSection& s2);

// The tree left after contracting every edge e with a positively weighted
// vertex at or above v_e^+. Surviving vertices keep their ids.
RootedTree gamma_bar(const WeightedTree& w);

// The partition of sections of gamma_bar by size: section S is blown up at
// step |S|.
struct BlowupSchedule {
  RootedTree gamma_bar;
  std::vector<std::pair<int, TraverseSection>> sections;  // (step, section)
};

BlowupSchedule blowup_schedule(const WeightedTree& w);
// S' > S'' must force step(S') < step(S'').
CheckResult check_schedule(const BlowupSchedule& b);

// { S in Xi(gamma_bar) : |S| <= k, S meets the hat edges outside Im }.
std::vector<TraverseSection> zk_components(const LevelTree& t, int k);

// Generators of the pullback of {zeta_e = 0 : e in S} to the chart, one per
// edge with the units u_e (e outside Im) dropped.
std::vector<Monomial> yk_generators(const Chart& x, const TraverseSection& s);

struct YkResult {
  Monomial divisor;  // prod eps_i over i in I+ with |E_i| <= k
  CheckResult check;
  // For each component, the edge whose generator lies on the divisor.
  std::vector<std::pair<TraverseSection, std::string>> witnesses;
};

// The divisor of the pullback of Y_k, with the locus equality checked in
// both directions: every component is caught by a witness generator whose
// support lies in the divisor, and every factor eps_i comes from the
// component E_i.
YkResult yk_pullback(const Chart& x, int k);

// A point of the blowup: the exceptional divisors through it, each with the
// component of the proper transform it came from, and the Im edges whose
// coordinate zc_e vanishes there.
struct Divisor {
  int index = 0;
  TraverseSection section;
  bool operator==(const Divisor& o) const { return index == o.index && section == o.section; }
};

struct BlowupPoint {
  std::vector<Divisor> divisors;  // increasing index
  std::set<std::string> vanishing_zc;
  bool operator==(const BlowupPoint& o) const {
    return divisors == o.divisors && vanishing_zc == o.vanishing_zc;
  }
};

// Divisor data of the level class of t: one divisor per level i of I+, from
// the top, with index |E_i| and section E_i, plus Im. Throws kDomain when the
// sizes do not increase strictly downwards (possible only for unstable trees).
BlowupPoint psi2_point(const LevelTree& t);

// The weighted level tree over tau with I+ = { -index } and cross-sections
// the given sections; vertices below m sit at m - depth. Throws kDomain when
// no level map realizes the data.
LevelTree psi2_level_tree(const WeightedTree& tau, const BlowupPoint& p);

// Formal tensor combination of the basis bundles L_e.
struct FormalBundle {
  std::map<std::string, int> exponents;

  static FormalBundle basis(const std::string& edge);
  FormalBundle& operator+=(const FormalBundle& o);
  FormalBundle& operator-=(const FormalBundle& o);
  friend FormalBundle operator+(FormalBundle a, const FormalBundle& b) { return a += b; }
  friend FormalBundle operator-(FormalBundle a, const FormalBundle& b) { return a -= b; }
  bool operator==(const FormalBundle& o) const { return exponents == o.exponents; }
  // "L_a + L_b - L_c"; "0" when trivial.
  std::string str() const;
};

struct BundleTable {
  std::map<int, FormalBundle> level;  // by occupied index in I+
  std::map<Edge, FormalBundle> edge;  // by hat edge
};

BundleTable build_bundles(const LevelTree& t, const SpecialChoice& s);
// For every hat edge e,
//   L_e (x) prod_{e' > e} (L_{e'} (x) L_{l(e')}^v) = L_e^>= (x) prod_{(l(e),0)} L_j^v,
// and the twist is shared by the edges ending at one level.
CheckResult bundle_identity(const LevelTree& t, const SpecialChoice& s);

// Blowup coordinates: eps~(i), rho_e, zc_e, z~_e and s_j.
Symbol rho_symbol(const std::string& edge);
Symbol zcheck_symbol(const std::string& edge);
Symbol ztilde_symbol(const std::string& edge);
Symbol s_symbol(const std::string& tag);

// pi^*: zeta_e and sigma_j in blowup coordinates.
MonomialMap blowup_pullback(const Chart& x);
// psi_2^*: the chart coordinates of x in blowup coordinates.
MonomialMap psi2_map(const Chart& x);
// theta_x after psi_2 equals pi, exactly.
CheckResult psi2_chart_check(const LevelTree& t, const SpecialChoice& s);

// Sequential monomial blowup at the point of the chart: the centers are the
// cross-sections E_i from the top level down.
struct BlowupStep {
  Rational level;
  std::vector<Monomial> proper;  // generators of the proper transform
  Monomial factor;               // product of the earlier exceptional coordinates
  bool proper_ok = false;        // distinct coordinates zc_e / z~_e as expected
  bool total_ok = false;         // total transform of Y = proper x factor as loci
  std::string detail;
};

struct BlowupTrace {
  std::vector<BlowupStep> steps;
  MonomialMap pullback;  // zeta_e in the final coordinates
};

BlowupTrace simulate_blowup(const Chart& x);
// Step k is 1-based; throws kDomain outside 1..|I+|.
CheckResult ideal_transform_check(const LevelTree& t, const SpecialChoice& s, int step);
// Every step, plus agreement of the final pullback with blowup_pullback.
CheckResult ideal_transform_all(const LevelTree& t, const SpecialChoice& s);

struct BlowupOptions {
  bool all_special = true;  // bundle, psi2 and transform checks for every choice
};

// Named groups: schedule, cross_sections, yk_pullback, psi2_round_trip,
// bundle_identity, psi2_chart and ideal_transform.
std::vector<std::pair<std::string, CheckResult>> blowup_checks(const LevelTree& t,
                                                              const BlowupOptions& opt = {});
CheckResult run_blowup_checks(const LevelTree& t, const BlowupOptions& opt = {});

}  // namespace leveltree
