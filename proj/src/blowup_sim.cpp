// Toy model of the sequential blowup at one point: every center is a
// coordinate subspace in the current chart, so each step is a monomial
// substitution, and ideals are compared through their radicals.

#include <algorithm>
#include <set>

#include "leveltree/blowup.hpp"
#include "leveltree/errors.hpp"

namespace leveltree {
namespace {

// The radical of a monomial ideal: minimal supports of its generators.
using Support = std::set<Symbol>;
using Radical = std::set<Support>;

Support support(const Monomial& m) {
  Support s;
  for (const auto& term : m.terms()) s.insert(term.first);
  return s;
}

Radical minimize(const std::vector<Support>& gens) {
  Radical out;
  for (const Support& g : gens) {
    bool redundant = false;
    for (const Support& h : gens)
      if (h != g && std::includes(g.begin(), g.end(), h.begin(), h.end())) redundant = true;
    if (!redundant) out.insert(g);
  }
  return out;
}

Radical radical_of(const std::vector<Monomial>& gens) {
  std::vector<Support> s;
  for (const Monomial& g : gens) s.push_back(support(g));
  return minimize(s);
}

// V(A B) = V(A) u V(B).
Radical product(const Radical& a, const Radical& b) {
  std::vector<Support> out;
  for (const Support& x : a)
    for (const Support& y : b) {
      Support u = x;
      u.insert(y.begin(), y.end());
      out.push_back(std::move(u));
    }
  return minimize(out);
}

// Removing the exceptional coordinates saturates a monomial ideal by them.
Monomial saturate(const Monomial& m, const std::set<Symbol>& exceptional) {
  Monomial out;
  for (const auto& [s, p] : m.terms())
    if (!exceptional.count(s)) out *= Monomial(s, p);
  return out;
}

std::string join(const std::vector<Monomial>& gens) {
  std::string out;
  for (const Monomial& g : gens) out += (out.empty() ? "" : ", ") + g.str();
  return "<" + out + ">";
}

}  // namespace

BlowupTrace simulate_blowup(const Chart& x) {
  const LevelTree& t = x.tree();
  const RootedTree& tr = t.tree();
  const int K = t.m_index();
  BlowupTrace trace;

  std::map<Edge, Monomial> image;
  for (Edge e : tr.edges()) image[e] = Monomial(ztilde_symbol(tr.name(e)));
  std::set<Symbol> exceptional;
  Monomial factor;
  std::vector<char> prev_center(tr.size(), 0);

  for (int k = 1; k <= K; ++k) {
    BlowupStep st;
    st.level = t.occupied()[k];
    st.factor = factor;
    const std::vector<Edge> center = t.cross_section_at(k);
    std::vector<char> in_center(tr.size(), 0);
    for (Edge e : center) in_center[e] = 1;

    std::map<Edge, Symbol> coord;
    st.proper_ok = true;
    for (Edge e : center) {
      Monomial g = saturate(image[e], exceptional);
      st.proper.push_back(g);
      const Symbol want = prev_center[e] ? zcheck_symbol(tr.name(e)) : ztilde_symbol(tr.name(e));
      if (g != Monomial(want)) {
        st.proper_ok = false;
        if (st.detail.empty())
          st.detail = "proper transform generator of " + tr.name(e) + " is " + g.str() +
                      ", expected " + want.str();
      } else {
        coord.emplace(e, want);
      }
    }

    // Total transform of the union of this center with the earlier ones, in
    // the current chart, against (proper transform) x (earlier exceptionals).
    Radical total{Support{}};
    for (int j = 1; j <= k; ++j) {
      std::vector<Monomial> gens;
      for (Edge e : t.cross_section_at(j)) gens.push_back(image[e]);
      total = product(total, radical_of(gens));
    }
    const Radical expect = product(radical_of(st.proper), radical_of({factor}));
    st.total_ok = total == expect;
    if (!st.total_ok && st.detail.empty())
      st.detail = "total transform differs from " + join(st.proper) + " times " + factor.str();
    trace.steps.push_back(st);
    if (!st.proper_ok) return trace;

    // Blow up in the chart where the special coordinate generates.
    const Monomial eps = Monomial(Symbol::eps(st.level, Decor::kTilde));
    MonomialMap g;
    for (Edge e : center) {
      const std::string& n = tr.name(e);
      Monomial rest;
      if (e == x.special_edge(k)) {
        rest = Monomial();
      } else if (t.edge_level_index(e) > k || t.in_m(e)) {
        rest = Monomial(zcheck_symbol(n));
      } else {
        rest = Monomial(rho_symbol(n));
      }
      g.set(coord.at(e), eps * rest);
    }
    for (auto& [e, m] : image) m = substitute(m, g, true);
    exceptional.insert(Symbol::eps(st.level, Decor::kTilde));
    factor *= eps;
    prev_center = in_center;
  }

  for (const auto& [e, m] : image) trace.pullback.set(zeta_symbol(tr.name(e)), m);
  for (const auto& j : x.tags()) trace.pullback.set(sigma_symbol(j), Monomial(s_symbol(j)));
  return trace;
}

CheckResult ideal_transform_check(const LevelTree& t, const SpecialChoice& s, int step) {
  if (!t.has_level_data() || step < 1 || step > t.m_index())
    fail(ErrorKind::kDomain, "blowup step " + std::to_string(step) + " is outside 1.." +
                                 std::to_string(t.has_level_data() ? t.m_index() : 0));
  const BlowupTrace trace = simulate_blowup(Chart(t, s, default_tags()));
  CheckResult r;
  if (static_cast<int>(trace.steps.size()) < step) {
    r.fail("simulation stopped at step " + std::to_string(trace.steps.size()) + ": " +
           trace.steps.back().detail);
    return r;
  }
  const BlowupStep& st = trace.steps[step - 1];
  if (!r.expect(st.proper_ok && st.total_ok)) r.note("step " + std::to_string(step) + ": " + st.detail);
  return r;
}

CheckResult ideal_transform_all(const LevelTree& t, const SpecialChoice& s) {
  if (!t.has_level_data()) fail(ErrorKind::kDomain, "blowup data needs a vertex of positive weight");
  const Chart x(t, s, default_tags());
  const BlowupTrace trace = simulate_blowup(x);
  CheckResult r;
  for (std::size_t k = 0; k < trace.steps.size(); ++k)
    if (!r.expect(trace.steps[k].proper_ok && trace.steps[k].total_ok))
      r.note("blowup step " + std::to_string(k + 1) + ": " + trace.steps[k].detail);
  if (!r.expect(static_cast<int>(trace.steps.size()) == t.m_index() &&
                (trace.steps.empty() || trace.steps.back().proper_ok)))
    return r;
  const MonomialMap pi = blowup_pullback(x);
  for (const auto& [sym, img] : pi.assignment()) {
    if (!r.expect(trace.pullback.contains(sym) && trace.pullback.at(sym) == img))
      r.note("sequential blowup gives " + sym.str() + " = " +
             (trace.pullback.contains(sym) ? trace.pullback.at(sym).str() : "?") +
             ", pi gives " + img.str());
  }
  return r;
}

}  // namespace leveltree
