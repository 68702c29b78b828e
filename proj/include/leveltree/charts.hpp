#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "leveltree/check.hpp"
#include "leveltree/contraction.hpp"
#include "leveltree/level_tree.hpp"
#include "leveltree/monomial.hpp"

namespace leveltree {

// Base coordinates zeta_e, sigma_j and the twisted-field coordinates mu_e.
Symbol zeta_symbol(const std::string& edge);
Symbol sigma_symbol(const std::string& tag);
Symbol mu_symbol(const std::string& edge);

// Coordinates eps_k (k in I+), u_e (hat edges off the special ones), z_e
// (e in I-), w_j (tags) and we_e (edge tags), all carrying one decoration.
// Levels are addressed by occupied index.
class Chart {
 public:
  Chart(LevelTree t, SpecialChoice special, std::vector<std::string> tags = {},
        Decor decor = Decor::kNone, std::vector<std::string> edge_tags = {});

  const LevelTree& tree() const { return t_; }
  const SpecialChoice& special() const { return special_; }
  const std::vector<std::string>& tags() const { return tags_; }
  const std::vector<std::string>& edge_tags() const { return edge_tags_; }
  Decor decor() const { return decor_; }
  int m_index() const { return t_.m_index(); }

  Edge special_edge(int k) const { return special_.vertex[k]; }
  // e_k^+, or kNoVertex when v_k^+ is the root.
  Edge special_plus(int k) const;
  bool is_special(Edge e) const { return special_flag_[e] != 0; }
  // i[1] for the occupied index k.
  int ascent_next(int k) const;

  Symbol eps(int k) const { return Symbol::eps(t_.occupied()[k], decor_); }
  Symbol u(Edge e) const;
  Symbol z(Edge e) const;
  Symbol w(const std::string& tag) const { return Symbol::keyed(Kind::kW, tag, decor_); }
  Symbol we(const std::string& edge) const { return Symbol::keyed(Kind::kWEdge, edge, decor_); }

  // u_e as a monomial: 1 on special edges and for the missing edge above the root.
  Monomial u_factor(Edge e) const;
  // u_{e_k^+} u_{e_{k[1]}^+} ...; chain(0) = 1.
  const Monomial& chain(int k) const { return chain_[k]; }
  // Product of eps_h over occupied indices top < h <= bottom.
  Monomial eps_between(int top, int bottom) const;

  std::vector<Symbol> coords() const;
  const Monomial& theta_zeta(Edge e) const { return theta_[e]; }
  MonomialMap theta() const;

  // mu_{e;k;I}. With base_zeta set, the I-spanned factors use the base
  // coordinates zeta instead of their theta pullbacks.
  Monomial mu(Edge e, int k, const IndexMask& I, bool base_zeta = false) const;

  // Zeros and units of the stratum attached to I.
  Stratum stratum(const IndexMask& I) const;
  // Units of the open set where every I-indexed coordinate is invertible.
  Stratum open_set(const IndexMask& I) const;

  bool span_inside(Edge e, const IndexMask& I) const;

 private:
  LevelTree t_;
  SpecialChoice special_;
  std::vector<std::string> tags_;
  Decor decor_;
  std::vector<std::string> edge_tags_;
  std::vector<char> special_flag_;
  std::vector<Monomial> chain_;
  std::vector<Monomial> theta_;
};

// Default J used by the suites.
std::vector<std::string> default_tags();

// mu_{e;i;I} for i in I+ \ I+-part and e in the cross-section at i, keyed by
// (level, edge id).
std::map<std::pair<Rational, std::string>, Monomial> build_mu(const Chart& x,
                                                             const IndexSubset& I);

// Psi_{x;(I)}: each chart coordinate in terms of zeta_e (contracted e),
// sigma_j and mu_e (e in E[t_(I)]). Throws kIllDefined when the induction
// divides by a vanishing quantity.
MonomialMap build_inverse(const Chart& x, const IndexSubset& I);

// Sources of Psi and their images under Phi, as functions on the chart.
MonomialMap phi_coordinates(const Chart& x, const IndexSubset& I);

CheckResult check_mu_vanishing(const Chart& x, const IndexSubset& I);
CheckResult verify_round_trip(const Chart& x, const IndexSubset& I);
// theta^* zeta_e vanishes on the stratum exactly for the surviving edges.
CheckResult check_stratum_image(const Chart& x, const IndexSubset& I);
CheckResult remark_identities(const Chart& x);

// Every chart check for every subset I, with J empty and |J| = 2.
CheckResult run_chart_checks(const LevelTree& t, const SpecialChoice& s);

}  // namespace leveltree
