#include "leveltree/transitions.hpp"

#include "leveltree/errors.hpp"

namespace leveltree {

namespace {

std::string where(const IndexSubset& I) { return "I = " + to_string(I); }

// Product of per-step factors along the ascent k, k[1], ... (excluding 0).
template <class F>
Monomial along_ascent(const Chart& x, int k, F factor) {
  Monomial out;
  while (k != 0) {
    out *= factor(k);
    k = x.ascent_next(k);
  }
  return out;
}

}  // namespace

MonomialMap special_vertex_transition(const Chart& x, const Chart& xa) {
  const LevelTree& t = x.tree();
  MonomialMap g;
  for (const Symbol& s : x.coords()) g.add_source(s);
  auto D = [&](int k) {
    return along_ascent(xa, k, [&](int j) { return x.u_factor(xa.special_edge(j)); });
  };
  auto Dp = [&](int k) {
    return along_ascent(xa, k, [&](int j) { return x.u_factor(xa.special_plus(j)); });
  };
  for (int k = 1; k <= t.m_index(); ++k) {
    const int up = k - 1;
    g.set(xa.eps(k), Monomial(x.eps(k)) * x.chain(k) / x.chain(up) * D(k) / D(up) * Dp(up) / Dp(k));
  }
  for (Edge e : t.tree().edges()) {
    if (t.in_minus(e)) {
      g.set(xa.z(e), Monomial(x.z(e)));
    } else if (!xa.is_special(e)) {
      g.set(xa.u(e), x.u_factor(e) / x.u_factor(xa.special_edge(t.edge_level_index(e))));
    }
  }
  for (const auto& j : x.tags()) g.set(xa.w(j), Monomial(x.w(j)));
  return g;
}

CheckResult verify_special_vertex_transition(const LevelTree& t, const SpecialChoice& v,
                                             const SpecialChoice& w) {
  CheckResult r;
  const Chart x(t, v, default_tags());
  const Chart xa(t, w, default_tags(), Decor::kPrime);
  const MonomialMap g = special_vertex_transition(x, xa);
  const RootedTree& tr = t.tree();
  for (Edge e : tr.edges()) {
    Monomial got = substitute(xa.theta_zeta(e), g);
    if (!r.expect(got == x.theta_zeta(e)))
      r.note("theta^a(g) at zeta_" + tr.name(e) + " is " + got.str() + ", expected " +
             x.theta_zeta(e).str());
  }
  for (const IndexSubset& I : t.all_index_subsets()) {
    const IndexMask mk = t.mask(I);
    for (int k = 1; k <= t.m_index(); ++k) {
      if (mk.level[k]) continue;
      const Monomial norm = x.mu(xa.special_edge(k), k, mk);
      for (Edge e : t.cross_section_at(k)) {
        Monomial got = substitute(xa.mu(e, k, mk), g);
        Monomial want = x.mu(e, k, mk) / norm;
        if (!r.expect(got == want))
          r.note("g^* mu^a_{" + tr.name(e) + ";" + to_string(t.occupied()[k]) + "} is " +
                 got.str() + ", expected " + want.str() + ", " + where(I));
      }
    }
  }
  return r;
}

Symbol f_symbol(const std::string& edge) { return Symbol::keyed(Kind::kF, edge); }

MonomialMap parameter_transition(const Chart& x, const Chart& xh) {
  const LevelTree& t = x.tree();
  const RootedTree& tr = t.tree();
  MonomialMap g;
  for (const Symbol& s : x.coords()) g.add_source(s);
  auto f = [&](Edge e) { return Monomial(f_symbol(tr.name(e))); };
  auto F = [&](int k) { return along_ascent(x, k, [&](int j) { return f(x.special_edge(j)); }); };
  auto path = [&](Edge e) {
    Monomial out;
    for (Edge h : tr.descendants_geq(e)) out *= f(h);
    return out;
  };
  for (int k = 1; k <= t.m_index(); ++k) g.set(xh.eps(k), Monomial(x.eps(k)) * F(k) / F(k - 1));
  for (Edge e : tr.edges()) {
    if (t.in_minus(e)) {
      g.set(xh.z(e), f(e) * Monomial(x.z(e)));
    } else if (!x.is_special(e)) {
      g.set(xh.u(e),
            Monomial(x.u(e)) * path(e) / path(x.special_edge(t.edge_level_index(e))));
    }
  }
  for (const auto& j : x.tags()) g.set(xh.w(j), Monomial(x.w(j)));
  return g;
}

CheckResult verify_parameter_transition(const LevelTree& t, const SpecialChoice& s) {
  CheckResult r;
  const Chart x(t, s, default_tags());
  const Chart xh(t, s, default_tags(), Decor::kHat);
  const MonomialMap g = parameter_transition(x, xh);
  const RootedTree& tr = t.tree();
  for (Edge e : tr.edges()) {
    Monomial got = substitute(xh.theta_zeta(e), g);
    Monomial want = Monomial(f_symbol(tr.name(e))) * x.theta_zeta(e);
    if (!r.expect(got == want))
      r.note("theta#(g) at zeta#_" + tr.name(e) + " is " + got.str() + ", expected " + want.str());
  }
  for (const IndexSubset& I : t.all_index_subsets()) {
    const IndexMask mk = t.mask(I);
    auto open_f = [&](Edge e) {
      Monomial out;
      for (Edge h : tr.descendants_geq(e))
        if (!x.span_inside(h, mk)) out *= Monomial(f_symbol(tr.name(h)));
      return out;
    };
    for (int k = 1; k <= t.m_index(); ++k) {
      if (mk.level[k]) continue;
      const Monomial rhs_norm = open_f(x.special_edge(k));
      for (Edge e : t.cross_section_at(k)) {
        Monomial got = substitute(xh.mu(e, k, mk), g) / open_f(e);
        Monomial want = x.mu(e, k, mk) / rhs_norm;
        if (!r.expect(got == want))
          r.note("g^* mu#_{" + tr.name(e) + ";" + to_string(t.occupied()[k]) + "} / f is " +
                 got.str() + ", expected " + want.str() + ", " + where(I));
      }
    }
  }
  return r;
}

Chart recentered_chart(const Chart& x, const ContractionResult& c) {
  const LevelTree& t = x.tree();
  const LevelTree& s = c.tree;
  SpecialChoice sp;
  sp.vertex.assign(s.m_index() + 1, kNoVertex);
  for (int k = 1; k <= t.m_index(); ++k) {
    const int k2 = s.occupied_index(t.occupied()[k]);
    if (k2 >= 1) sp.vertex[k2] = s.tree().vertex(t.tree().name(x.special_edge(k)));
  }
  std::vector<std::string> edge_tags(c.contracted.begin(), c.contracted.end());
  return Chart(s, sp, x.tags(), Decor::kPrime, edge_tags);
}

MonomialMap stratum_transition(const Chart& x, const Chart& xp, const IndexSubset& I,
                               const ContractionResult& c) {
  const LevelTree& t = x.tree();
  const RootedTree& tr = t.tree();
  const LevelTree& s = c.tree;
  const RootedTree& sr = s.tree();
  const IndexMask mk = t.mask(I);
  auto t_index = [&](int k2) { return k2 == 0 ? 0 : t.occupied_index(s.occupied()[k2]); };
  auto t_edge = [&](Edge f) { return tr.vertex(sr.name(f)); };

  // mu_{e+_j; j(1); I} mu_{e+_{j(1)}; j(2); I} ... along the ascent of t_(I).
  auto M = [&](int k2) {
    return along_ascent(xp, k2, [&](int j) {
      const Edge up = xp.special_plus(j);
      if (up == kNoVertex) return Monomial();
      return x.mu(t_edge(up), t_index(xp.ascent_next(j)), mk);
    });
  };
  auto spanned_above = [&](Edge e) {
    Monomial out;
    for (Edge h : tr.edges_above(e))
      if (x.span_inside(h, mk)) out *= x.theta_zeta(h);
    return out;
  };

  MonomialMap g;
  for (const Symbol& sym : x.coords()) g.add_source(sym);
  for (int k2 = 1; k2 <= s.m_index(); ++k2) {
    const int k = t_index(k2);
    const int up = t_index(k2 - 1);
    Monomial top = up == 0 ? Monomial() : spanned_above(x.special_edge(up));
    g.set(xp.eps(k2), Monomial(x.eps(k)) * x.eps_between(up, k - 1) * top /
                          spanned_above(x.special_edge(k)) * x.chain(k) / x.chain(up) * M(k2 - 1) /
                          M(k2));
  }
  for (Edge f : sr.edges()) {
    const Edge e = t_edge(f);
    if (s.in_minus(f)) {
      // Im edges of t that drop to m(t_(I)) become I- edges of t_(I).
      g.set(xp.z(f), t.in_minus(e) ? Monomial(x.z(e)) : x.theta_zeta(e));
    } else if (!xp.is_special(f)) {
      g.set(xp.u(f), x.mu(e, t_index(s.edge_level_index(f)), mk));
    }
  }
  for (const auto& j : x.tags()) g.set(xp.w(j), Monomial(x.w(j)));
  for (const auto& name : c.contracted) g.set(xp.we(name), x.theta_zeta(tr.vertex(name)));
  return g;
}

CheckResult verify_stratum_transition(const LevelTree& t, const SpecialChoice& sp,
                                      const IndexSubset& I) {
  CheckResult r;
  const Chart x(t, sp, default_tags());
  ContractionResult c;
  try {
    c = contract(t, I);
  } catch (const Error& err) {
    r.fail(std::string("t_(I) failed: ") + err.what() + ", " + where(I));
    return r;
  }
  const Chart xp = recentered_chart(x, c);
  const MonomialMap g = stratum_transition(x, xp, I, c);
  const RootedTree& tr = t.tree();
  const LevelTree& s = c.tree;
  const RootedTree& sr = s.tree();

  const MonomialMap lhs = compose(xp.theta(), g);
  const MonomialMap rhs = x.theta();
  for (const auto& [sym, want] : rhs.assignment()) {
    if (!lhs.contains(sym)) {
      r.fail("theta' has no component " + sym.str() + ", " + where(I));
      continue;
    }
    const Monomial& got = lhs.at(sym);
    if (!r.expect(got == want))
      r.note("theta'(g) at " + sym.str() + " is " + got.str() + ", expected " + want.str() + ", " +
             where(I));
  }

  for (const IndexSubset& I2 : s.all_index_subsets()) {
    IndexSubset U = I;
    U.levels.insert(I2.levels.begin(), I2.levels.end());
    U.edges.insert(I2.edges.begin(), I2.edges.end());
    IndexMask mu_mask;
    try {
      mu_mask = t.mask(U);
    } catch (const Error& err) {
      r.fail("I u I' is not a subset of the index set: " + to_string(U));
      continue;
    }
    const IndexMask mk2 = s.mask(I2);
    for (int k2 = 1; k2 <= s.m_index(); ++k2) {
      if (mk2.level[k2]) continue;
      const int k = t.occupied_index(s.occupied()[k2]);
      for (Edge f : s.cross_section_at(k2)) {
        const Edge e = tr.vertex(sr.name(f));
        try {
          Monomial got = substitute(xp.mu(f, k2, mk2), g);
          Monomial want = x.mu(e, k, mu_mask);
          if (!r.expect(got == want))
            r.note("g^* mu'_{" + sr.name(f) + ";" + to_string(s.occupied()[k2]) + ";" +
                   to_string(I2) + "} is " + got.str() + ", expected " + want.str() + ", " +
                   where(I));
        } catch (const Error& err) {
          r.fail(std::string(err.what()) + ", " + where(I) + ", I' = " + to_string(I2));
        }
      }
    }
  }
  return r;
}

CheckResult run_transition_checks(const LevelTree& t, const TransitionOptions& opt) {
  CheckResult r;
  const std::vector<SpecialChoice> choices = all_special_choices(t);
  if (opt.special_pairs)
    for (const auto& a : choices)
      for (const auto& b : choices) r.merge(verify_special_vertex_transition(t, a, b));
  if (opt.parameters)
    for (const auto& a : choices) r.merge(verify_parameter_transition(t, a));
  if (opt.strata) {
    const SpecialChoice s = default_special(t);
    for (const IndexSubset& I : t.all_index_subsets()) r.merge(verify_stratum_transition(t, s, I));
  }
  return r;
}

}  // namespace leveltree
