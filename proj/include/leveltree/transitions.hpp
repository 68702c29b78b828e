#pragma once

#include "leveltree/charts.hpp"

namespace leveltree {

// Transition g from the chart x (special vertices v) to the chart xa (special
// vertices w, primed coordinates): xa coordinates in terms of x coordinates.
MonomialMap special_vertex_transition(const Chart& x, const Chart& xa);
// theta^a after g equals theta, and g^* mu^a_{e;i;I} = mu_{e;i;I} / mu_{d_i;i;I}.
CheckResult verify_special_vertex_transition(const LevelTree& t, const SpecialChoice& v,
                                             const SpecialChoice& w);

// f_e: the unit relating two choices of base parameters, zeta#_e = f_e zeta_e.
Symbol f_symbol(const std::string& edge);
// Transition from x to the chart xh built on the parameters zeta#.
MonomialMap parameter_transition(const Chart& x, const Chart& xh);
CheckResult verify_parameter_transition(const LevelTree& t, const SpecialChoice& s);

// Recentering at a point of the stratum of I: the chart x' on t_(I) with the
// same special vertices, whose extra parameters are the tags of x and the
// contracted edges.
Chart recentered_chart(const Chart& x, const ContractionResult& c);
MonomialMap stratum_transition(const Chart& x, const Chart& xp, const IndexSubset& I,
                               const ContractionResult& c);
// theta_{x'} after g equals theta_x, and g^* mu'_{e;i;I'} = mu_{e;i;I u I'}
// for every subset I' of the index set of t_(I).
CheckResult verify_stratum_transition(const LevelTree& t, const SpecialChoice& s,
                                      const IndexSubset& I);

struct TransitionOptions {
  bool special_pairs = true;   // every ordered pair of special choices
  bool parameters = true;
  bool strata = true;
};

CheckResult run_transition_checks(const LevelTree& t, const TransitionOptions& opt = {});

}  // namespace leveltree
