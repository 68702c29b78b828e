#include "leveltree/charts.hpp"

#include "leveltree/errors.hpp"

namespace leveltree {

Symbol zeta_symbol(const std::string& edge) { return Symbol::keyed(Kind::kZeta, edge); }
Symbol sigma_symbol(const std::string& tag) { return Symbol::keyed(Kind::kSigma, tag); }
Symbol mu_symbol(const std::string& edge) { return Symbol::keyed(Kind::kMu, edge); }

std::vector<std::string> default_tags() { return {"j1", "j2"}; }

Chart::Chart(LevelTree t, SpecialChoice special, std::vector<std::string> tags, Decor decor,
             std::vector<std::string> edge_tags)
    : t_(std::move(t)),
      special_(std::move(special)),
      tags_(std::move(tags)),
      decor_(decor),
      edge_tags_(std::move(edge_tags)) {
  validate_special(t_, special_);
  const RootedTree& tr = t_.tree();
  const int m = t_.m_index();
  special_flag_.assign(tr.size(), 0);
  for (int k = 1; k <= m; ++k) special_flag_[special_.vertex[k]] = 1;

  chain_.assign(m + 1, Monomial());
  for (int k = 1; k <= m; ++k) chain_[k] = u_factor(special_plus(k)) * chain_[ascent_next(k)];

  theta_.assign(tr.size(), Monomial());
  for (Edge e : tr.edges()) {
    if (t_.in_minus(e)) {
      theta_[e] = Monomial(z(e));
      continue;
    }
    const Vertex vp = tr.parent(e);
    const int lo = t_.edge_level_index(e);
    const int hi = t_.level_index(vp);
    Edge above = vp == tr.root() ? kNoVertex : vp;
    theta_[e] = u_factor(e) * chain_[lo] / (u_factor(above) * chain_[hi]) * eps_between(hi, lo);
  }
}

Edge Chart::special_plus(int k) const {
  const Vertex vp = t_.tree().parent(special_.vertex[k]);
  return vp == t_.tree().root() ? kNoVertex : vp;
}

int Chart::ascent_next(int k) const {
  return t_.level_index(t_.tree().parent(special_.vertex[k]));
}

Symbol Chart::u(Edge e) const { return Symbol::keyed(Kind::kU, t_.tree().name(e), decor_); }
Symbol Chart::z(Edge e) const { return Symbol::keyed(Kind::kZ, t_.tree().name(e), decor_); }

Monomial Chart::u_factor(Edge e) const {
  if (e == kNoVertex || e == t_.tree().root() || is_special(e)) return Monomial();
  return Monomial(u(e));
}

Monomial Chart::eps_between(int top, int bottom) const {
  Monomial out;
  for (int h = top + 1; h <= bottom; ++h) out *= Monomial(eps(h));
  return out;
}

std::vector<Symbol> Chart::coords() const {
  std::vector<Symbol> out;
  for (int k = 1; k <= t_.m_index(); ++k) out.push_back(eps(k));
  for (Edge e : t_.tree().edges())
    if (t_.is_hat(e) && !is_special(e)) out.push_back(u(e));
  for (Edge e : t_.tree().edges())
    if (t_.in_minus(e)) out.push_back(z(e));
  for (const auto& j : tags_) out.push_back(w(j));
  for (const auto& e : edge_tags_) out.push_back(we(e));
  return out;
}

MonomialMap Chart::theta() const {
  MonomialMap g;
  for (const Symbol& s : coords()) g.add_source(s);
  for (Edge e : t_.tree().edges()) g.set(zeta_symbol(t_.tree().name(e)), theta_[e]);
  for (const auto& j : tags_) g.set(sigma_symbol(j), Monomial(w(j)));
  for (const auto& e : edge_tags_) g.set(zeta_symbol(e), Monomial(we(e)));
  return g;
}

bool Chart::span_inside(Edge e, const IndexMask& I) const {
  for (int h : t_.span_indices(e))
    if (!I.level[h]) return false;
  return true;
}

Monomial Chart::mu(Edge e, int k, const IndexMask& I, bool base_zeta) const {
  const RootedTree& tr = t_.tree();
  const int lo = t_.edge_level_index(e);
  if (k < 1 || k > t_.m_index() || lo < k)
    fail(ErrorKind::kDomain, "mu needs l(e) <= i for edge '" + tr.name(e) + "'");
  auto factor = [&](Edge f) {
    return base_zeta ? Monomial(zeta_symbol(tr.name(f))) : theta_[f];
  };
  Monomial out = u_factor(e) * chain_[lo] / chain_[k];
  for (Edge f : tr.edges_above(special_edge(k)))
    if (span_inside(f, I)) out *= factor(f);
  for (Edge f : tr.edges_above(e))
    if (span_inside(f, I)) out /= factor(f);
  return out * eps_between(k, lo);
}

Stratum Chart::stratum(const IndexMask& I) const {
  Stratum s;
  for (int k = 1; k <= t_.m_index(); ++k) (I.level[k] ? s.units : s.zeros).insert(eps(k));
  for (Edge e : t_.tree().edges()) {
    if (t_.in_minus(e)) {
      (I.edge[e] ? s.units : s.zeros).insert(z(e));
    } else if (!is_special(e)) {
      (t_.in_m(e) && !I.edge[e] ? s.zeros : s.units).insert(u(e));
    }
  }
  return s;
}

Stratum Chart::open_set(const IndexMask& I) const {
  Stratum s;
  for (int k = 1; k <= t_.m_index(); ++k)
    if (I.level[k]) s.units.insert(eps(k));
  for (Edge e : t_.tree().edges()) {
    if (t_.in_minus(e)) {
      if (I.edge[e]) s.units.insert(z(e));
    } else if (!is_special(e) && (!t_.in_m(e) || I.edge[e])) {
      s.units.insert(u(e));
    }
  }
  return s;
}

std::map<std::pair<Rational, std::string>, Monomial> build_mu(const Chart& x,
                                                             const IndexSubset& I) {
  const LevelTree& t = x.tree();
  const IndexMask mk = t.mask(I);
  std::map<std::pair<Rational, std::string>, Monomial> out;
  for (int k = 1; k <= t.m_index(); ++k) {
    if (mk.level[k]) continue;
    for (Edge e : t.cross_section_at(k))
      out[{t.occupied()[k], t.tree().name(e)}] = x.mu(e, k, mk);
  }
  return out;
}

namespace {

// Stratum data of t_(I) seen from t.
struct Contracted {
  ContractionResult c;
  std::vector<char> gone;      // by edge of t
  std::vector<char> special;   // special in t_(I)
  std::vector<char> im;        // in Im(t_(I))
  std::vector<int> edge_level; // occupied index in t of l_(I)(e), -1 off the hat edges of t_(I)
  std::vector<Rational> lower; // l_(I)(v_e^-)
};

Contracted describe(const Chart& x, const IndexSubset& I, const IndexMask& mk) {
  const LevelTree& t = x.tree();
  const RootedTree& tr = t.tree();
  Contracted d{contract(t, I), {}, {}, {}, {}, {}};
  const LevelTree& s = d.c.tree;
  d.gone.assign(tr.size(), 0);
  d.special.assign(tr.size(), 0);
  d.im.assign(tr.size(), 0);
  d.edge_level.assign(tr.size(), -1);
  d.lower.assign(tr.size(), Rational(0));
  for (Edge e : tr.edges()) {
    if (d.c.contracted.count(tr.name(e))) {
      d.gone[e] = 1;
      continue;
    }
    const Edge f = s.tree().edge(tr.name(e));
    d.lower[e] = s.level(f);
    if (s.is_hat(f)) {
      d.im[e] = s.in_m(f);
      d.edge_level[e] = t.occupied_index(s.edge_level(f));
    }
  }
  for (int k = 1; k <= t.m_index(); ++k)
    if (!mk.level[k]) d.special[x.special_edge(k)] = 1;
  return d;
}

// Value of mu_e on the chart of t_(I): 1 on special edges, 0 on Im.
Monomial mu_target(const Contracted& d, const RootedTree& tr, Edge e) {
  if (d.special[e]) return Monomial();
  if (d.im[e]) return Monomial::zero();
  return Monomial(mu_symbol(tr.name(e)));
}

bool is_source_kind(Kind k) { return k == Kind::kZeta || k == Kind::kSigma || k == Kind::kMu; }

MonomialMap inverse_from(const Chart& x, const IndexMask& mk, const Contracted& d) {
  const LevelTree& t = x.tree();
  const RootedTree& tr = t.tree();
  MonomialMap psi;
  for (Edge e : tr.edges()) {
    if (d.gone[e]) psi.add_source(zeta_symbol(tr.name(e)));
    else if (d.edge_level[e] >= 0 && !d.special[e] && !d.im[e]) psi.add_source(mu_symbol(tr.name(e)));
  }
  for (const auto& j : x.tags()) {
    psi.add_source(sigma_symbol(j));
    psi.set(x.w(j), Monomial(sigma_symbol(j)));
  }
  for (const auto& e : x.edge_tags()) {
    psi.add_source(zeta_symbol(e));
    psi.set(x.we(e), Monomial(zeta_symbol(e)));
  }
  for (Edge e : tr.edges()) {
    if (!t.in_minus(e)) continue;
    psi.set(x.z(e), d.gone[e] ? Monomial(zeta_symbol(tr.name(e))) : Monomial::zero());
  }

  // Solves target = F for the one unknown symbol of F not yet assigned.
  auto solve = [&](const Symbol& unknown, const Monomial& target, const Monomial& F) {
    const int k = F.exponent(unknown);
    if (k != 1 && k != -1)
      fail(ErrorKind::kDomain, "equation for " + unknown.str() + " is not linear in it");
    Monomial rest = substitute(F / Monomial(unknown, k), psi, true);
    Monomial value = (target / rest).pow(k);
    for (const auto& term : value.terms())
      if (!is_source_kind(term.first.kind))
        fail(ErrorKind::kDomain, "value of " + unknown.str() + " still involves " + term.first.str());
    psi.set(unknown, value);
  };

  for (int k = 1; k <= t.m_index(); ++k) {
    const Edge ek = x.special_edge(k);
    if (!mk.level[k]) {
      psi.set(x.eps(k), Monomial::zero());
    } else {
      int hat_i = -1;
      for (int j = k; j > x.ascent_next(k); --j) {
        if (!mk.level[j]) {
          hat_i = j;
          break;
        }
      }
      if (hat_i >= 0) {
        solve(x.eps(k), mu_target(d, tr, ek), x.mu(ek, hat_i, mk, true));
      } else {
        solve(x.eps(k), Monomial(zeta_symbol(tr.name(ek))), x.theta_zeta(ek));
      }
    }
    for (Edge e : tr.edges()) {
      if (!t.is_hat(e) || t.edge_level_index(e) != k || x.is_special(e)) continue;
      int kappa = -1;
      for (int h : t.span_indices(e))
        if (!mk.level[h]) kappa = std::max(kappa, h);
      if (kappa >= 0) {
        solve(x.u(e), mu_target(d, tr, e), x.mu(e, kappa, mk, true));
      } else {
        Monomial target = d.gone[e] ? Monomial(zeta_symbol(tr.name(e))) : Monomial::zero();
        solve(x.u(e), target, x.theta_zeta(e));
      }
    }
  }
  return psi;
}

MonomialMap phi_from(const Chart& x, const IndexMask& mk, const Contracted& d) {
  const LevelTree& t = x.tree();
  const RootedTree& tr = t.tree();
  MonomialMap phi;
  for (const Symbol& s : x.coords()) phi.add_source(s);
  for (Edge e : tr.edges()) {
    if (d.gone[e]) {
      phi.set(zeta_symbol(tr.name(e)), x.theta_zeta(e));
    } else if (d.edge_level[e] >= 0 && !d.special[e] && !d.im[e]) {
      phi.set(mu_symbol(tr.name(e)), x.mu(e, d.edge_level[e], mk));
    }
  }
  for (const auto& j : x.tags()) phi.set(sigma_symbol(j), Monomial(x.w(j)));
  for (const auto& e : x.edge_tags()) phi.set(zeta_symbol(e), Monomial(x.we(e)));
  return phi;
}

std::string where(const IndexSubset& I) { return "I = " + to_string(I); }

}  // namespace

MonomialMap build_inverse(const Chart& x, const IndexSubset& I) {
  const IndexMask mk = x.tree().mask(I);
  return inverse_from(x, mk, describe(x, I, mk));
}

MonomialMap phi_coordinates(const Chart& x, const IndexSubset& I) {
  const IndexMask mk = x.tree().mask(I);
  return phi_from(x, mk, describe(x, I, mk));
}

CheckResult check_mu_vanishing(const Chart& x, const IndexSubset& I) {
  CheckResult r;
  const LevelTree& t = x.tree();
  const IndexMask mk = t.mask(I);
  const Contracted d = describe(x, I, mk);
  const Stratum s = x.stratum(mk);
  for (int k = 1; k <= t.m_index(); ++k) {
    if (mk.level[k]) continue;
    const Rational& i = t.occupied()[k];
    for (Edge e : t.cross_section_at(k)) {
      const std::string tag = where(I) + ", i = " + to_string(i) + ", e = " + t.tree().name(e);
      if (d.gone[e]) {
        r.fail("edge of a cross-section was contracted: " + tag);
        continue;
      }
      try {
        Value v = evaluate(x.mu(e, k, mk), s);
        Value want = d.lower[e] < i ? Value::kZero : Value::kUnit;
        if (d.lower[e] > i) {
          r.fail("l_(I)(v_e^-) above i: " + tag);
        } else if (!r.expect(v == want)) {
          r.note(std::string("mu is ") + to_string(v) + ", expected " + to_string(want) + ": " + tag);
        }
      } catch (const Error& err) {
        r.fail(std::string(err.what()) + ": " + tag);
      }
    }
  }
  return r;
}

CheckResult verify_round_trip(const Chart& x, const IndexSubset& I) {
  CheckResult r;
  const LevelTree& t = x.tree();
  const RootedTree& tr = t.tree();
  const IndexMask mk = t.mask(I);
  Contracted d;
  MonomialMap psi;
  try {
    d = describe(x, I, mk);
    psi = inverse_from(x, mk, d);
  } catch (const Error& err) {
    r.fail(std::string("Psi construction failed: ") + err.what() + ", " + where(I));
    return r;
  }
  const MonomialMap phi = phi_from(x, mk, d);

  try {
    // Phi after Psi on the sources of Psi.
    for (const auto& [s, f] : phi.assignment()) {
      Monomial back = substitute(f, psi);
      if (!r.expect(back == Monomial(s)))
        r.note("Phi(Psi) sends " + s.str() + " to " + back.str() + ", " + where(I));
    }
    // The whole mu family on the image of Psi.
    for (int k = 1; k <= t.m_index(); ++k) {
      if (mk.level[k]) continue;
      const Rational& i = t.occupied()[k];
      for (Edge e : t.cross_section_at(k)) {
        Monomial got = substitute(x.mu(e, k, mk), psi);
        Monomial want = d.lower[e] < i ? Monomial::zero() : mu_target(d, tr, e);
        if (!r.expect(got == want))
          r.note("mu_{" + tr.name(e) + ";" + to_string(i) + "} after Psi is " + got.str() +
                 ", expected " + want.str() + ", " + where(I));
      }
    }
    // Surviving edges keep zeta_e = 0.
    for (Edge e : tr.edges()) {
      if (d.gone[e]) continue;
      Monomial got = substitute(x.theta_zeta(e), psi);
      if (!r.expect(got.is_zero()))
        r.note("zeta_" + tr.name(e) + " after Psi is " + got.str() + ", " + where(I));
    }
  } catch (const Error& err) {
    r.fail(std::string("Phi(Psi): ") + err.what() + ", " + where(I));
  }

  // Psi after Phi on the stratum.
  const Stratum s = x.stratum(mk);
  for (const Symbol& c : x.coords()) {
    try {
      Monomial back = substitute(psi.at(c), phi);
      Monomial orig(c);
      bool zb = evaluate(back, s) == Value::kZero;
      bool zo = evaluate(orig, s) == Value::kZero;
      if (!r.expect(zb == zo && (zb || back == orig)))
        r.note("Psi(Phi) sends " + c.str() + " to " + back.str() + ", " + where(I));
    } catch (const Error& err) {
      r.fail(std::string("Psi(Phi) on ") + c.str() + ": " + err.what() + ", " + where(I));
    }
  }
  return r;
}

CheckResult check_stratum_image(const Chart& x, const IndexSubset& I) {
  CheckResult r;
  const LevelTree& t = x.tree();
  const IndexMask mk = t.mask(I);
  const std::set<std::string> gone = contracted_edges(t, I);
  const Stratum s = x.stratum(mk);
  for (Edge e : t.tree().edges()) {
    const std::string& name = t.tree().name(e);
    try {
      bool zero = evaluate(x.theta_zeta(e), s) == Value::kZero;
      if (!r.expect(zero == !gone.count(name)))
        r.note("theta^* zeta_" + name + (zero ? " vanishes" : " does not vanish") + ", " + where(I));
    } catch (const Error& err) {
      r.fail(std::string(err.what()) + ", " + where(I));
    }
  }
  return r;
}

CheckResult remark_identities(const Chart& x) {
  CheckResult r;
  const LevelTree& t = x.tree();
  const int m = t.m_index();
  if (m == 0) return r;
  const RootedTree& tr = t.tree();
  auto path_product = [&](Edge e) {
    Monomial out;
    for (Edge f : tr.descendants_geq(e)) out *= x.theta_zeta(f);
    return out;
  };
  const Monomial base = path_product(x.special_edge(m));
  const Monomial want = x.chain(m) * x.eps_between(0, m);
  if (!r.expect(base == want))
    r.note("product above the special edge at m is " + base.str() + ", expected " + want.str());
  for (Edge e : t.cross_section_at(m)) {
    Monomial got = path_product(e);
    if (!r.expect(got == x.u_factor(e) * base))
      r.note("product above " + tr.name(e) + " is " + got.str());
  }
  return r;
}

CheckResult run_chart_checks(const LevelTree& t, const SpecialChoice& s) {
  CheckResult r;
  for (const auto& tags : {std::vector<std::string>{}, default_tags()}) {
    Chart x(t, s, tags);
    r.merge(remark_identities(x));
    for (const IndexSubset& I : t.all_index_subsets()) {
      r.merge(check_mu_vanishing(x, I));
      r.merge(verify_round_trip(x, I));
      r.merge(check_stratum_image(x, I));
    }
  }
  return r;
}

}  // namespace leveltree
