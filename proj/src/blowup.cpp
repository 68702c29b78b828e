#include "leveltree/blowup.hpp"

#include <algorithm>

#include "leveltree/errors.hpp"

namespace leveltree {
namespace {

using EdgeList = std::vector<Edge>;

// Sections of the subtree hanging from the edge into c.
std::vector<EdgeList> sections_below(const RootedTree& g, Vertex c);

std::vector<EdgeList> product_over_children(const RootedTree& g, Vertex v) {
  std::vector<EdgeList> acc{{}};
  for (Vertex c : g.children(v)) {
    std::vector<EdgeList> next;
    for (const EdgeList& opt : sections_below(g, c))
      for (const EdgeList& a : acc) {
        EdgeList x = a;
        x.insert(x.end(), opt.begin(), opt.end());
        next.push_back(std::move(x));
      }
    acc = std::move(next);
  }
  return acc;
}

std::vector<EdgeList> sections_below(const RootedTree& g, Vertex c) {
  std::vector<EdgeList> out{{c}};
  if (!g.is_leaf(c))
    for (EdgeList& s : product_over_children(g, c)) out.push_back(std::move(s));
  return out;
}

TraverseSection named(const RootedTree& g, const EdgeList& es) {
  std::vector<std::string> names;
  for (Edge e : es) names.push_back(g.name(e));
  return make_section(std::move(names));
}

TraverseSection cross_section_named(const LevelTree& t, int k) {
  return named(t.tree(), t.cross_section_at(k));
}

// Edge indices of a section, looked up by id in g.
EdgeList edges_of(const RootedTree& g, const TraverseSection& s) {
  EdgeList out;
  for (const auto& n : s.edges) out.push_back(g.edge(n));
  return out;
}

bool dominated(const RootedTree& g, const EdgeList& a, const EdgeList& b) {
  for (Edge e : a) {
    bool hit = false;
    for (Edge f : b) hit = hit || g.edge_geq(e, f);
    if (!hit) return false;
  }
  return true;
}

Monomial tilde_eps(const LevelTree& t, int k) {
  return Monomial(Symbol::eps(t.occupied()[k], Decor::kTilde));
}

Monomial tilde_span(const LevelTree& t, Edge e) {
  Monomial out;
  for (int h : t.span_indices(e)) out *= tilde_eps(t, h);
  return out;
}

// u_e with e outside Im is invertible on the chart.
Monomial strip_units(const Chart& x, const Monomial& m) {
  Monomial out;
  for (const auto& [s, p] : m.terms()) {
    if (s.kind == Kind::kU && !x.tree().in_m(x.tree().tree().edge(s.key))) continue;
    out *= Monomial(s, p);
  }
  return out;
}

bool support_within(const Monomial& m, const Monomial& d) {
  for (const auto& [s, p] : m.terms())
    if (d.exponent(s) == 0) return false;
  return true;
}

void require_levels(const LevelTree& t) {
  if (!t.has_level_data())
    fail(ErrorKind::kDomain, "blowup data needs a vertex of positive weight");
}

}  // namespace

bool TraverseSection::contains(const std::string& e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

bool TraverseSection::operator<(const TraverseSection& o) const {
  return edges.size() != o.edges.size() ? edges.size() < o.edges.size() : edges < o.edges;
}

std::string to_string(const TraverseSection& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.edges.size(); ++i) out += (i ? "," : "") + s.edges[i];
  return out + "}";
}

TraverseSection make_section(std::vector<std::string> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return TraverseSection{std::move(edges)};
}

bool is_traverse_section(const RootedTree& g, const TraverseSection& s) {
  std::vector<char> in(g.size(), 0);
  for (const auto& n : s.edges) {
    auto v = g.find(n);
    if (!v || *v == g.root()) return false;
    in[*v] = 1;
  }
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!g.is_leaf(v)) continue;
    int hits = 0;
    for (Vertex w = v; w != g.root(); w = g.parent(w)) hits += in[w];
    if (hits != 1) return false;
  }
  return true;
}

std::vector<TraverseSection> traverse_sections(const RootedTree& g) {
  std::vector<TraverseSection> out;
  if (g.is_leaf(g.root())) return out;
  for (const EdgeList& s : product_over_children(g, g.root())) out.push_back(named(g, s));
  std::sort(out.begin(), out.end());
  return out;
}

Order section_compare(const RootedTree& g, const TraverseSection& s1,
                      const TraverseSection& s2) {
  if (s1 == s2) return Order::kEqual;
  const EdgeList a = edges_of(g, s1), b = edges_of(g, s2);
  if (dominated(g, a, b)) return Order::kGreater;
  if (dominated(g, b, a)) return Order::kLess;
  return Order::kIncomparable;
}

RootedTree gamma_bar(const WeightedTree& w) {
  const RootedTree& tr = w.tree;
  std::vector<char> weighted_above(tr.size(), 0);
  std::map<std::string, std::string> parents;
  for (Vertex v : tr.preorder()) {
    const bool up = v != tr.root() && weighted_above[tr.parent(v)];
    weighted_above[v] = up || w.weight[v] > 0;
    if (v != tr.root() && !weighted_above[tr.parent(v)])
      parents[tr.name(v)] = tr.name(tr.parent(v));
  }
  return RootedTree::from_parents(tr.name(tr.root()), parents);
}

BlowupSchedule blowup_schedule(const WeightedTree& w) {
  BlowupSchedule b{gamma_bar(w), {}};
  for (auto& s : traverse_sections(b.gamma_bar))
    b.sections.emplace_back(static_cast<int>(s.size()), std::move(s));
  return b;
}

CheckResult check_schedule(const BlowupSchedule& b) {
  CheckResult r;
  for (const auto& [k1, s1] : b.sections)
    for (const auto& [k2, s2] : b.sections) {
      if (section_compare(b.gamma_bar, s1, s2) != Order::kGreater) continue;
      if (!r.expect(k1 < k2))
        r.note("schedule: " + to_string(s1) + " > " + to_string(s2) + " but steps " +
               std::to_string(k1) + " >= " + std::to_string(k2));
    }
  return r;
}

std::vector<TraverseSection> zk_components(const LevelTree& t, int k) {
  require_levels(t);
  if (k < 1) fail(ErrorKind::kDomain, "k must be positive");
  const RootedTree& tr = t.tree();
  std::vector<TraverseSection> out;
  for (auto& s : traverse_sections(gamma_bar(t.base()))) {
    if (static_cast<int>(s.size()) > k) continue;
    bool meets = false;
    for (const auto& n : s.edges) {
      Edge e = tr.edge(n);
      meets = meets || (t.is_hat(e) && !t.in_m(e));
    }
    if (meets) out.push_back(std::move(s));
  }
  return out;
}

std::vector<Monomial> yk_generators(const Chart& x, const TraverseSection& s) {
  const LevelTree& t = x.tree();
  std::vector<Monomial> out;
  for (const auto& n : s.edges) {
    const Edge e = t.tree().edge(n);
    if (t.in_minus(e)) {
      out.emplace_back(x.z(e));
      continue;
    }
    Monomial g;
    for (int h : t.span_indices(e)) g *= Monomial(x.eps(h));
    if (t.in_m(e)) g *= Monomial(x.u(e));
    out.push_back(g);
  }
  return out;
}

YkResult yk_pullback(const Chart& x, int k) {
  const LevelTree& t = x.tree();
  const RootedTree& tr = t.tree();
  YkResult res;
  std::vector<TraverseSection> comps = zk_components(t, k);
  std::vector<int> sizes(t.m_index() + 1, 0);
  for (int i = 1; i <= t.m_index(); ++i) {
    sizes[i] = static_cast<int>(t.cross_section_at(i).size());
    if (sizes[i] <= k) res.divisor *= Monomial(x.eps(i));
  }

  for (const TraverseSection& s : comps) {
    std::vector<Monomial> gens = yk_generators(x, s);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Edge e = tr.edge(s.edges[i]);
      if (!res.check.expect(gens[i] == strip_units(x, x.theta_zeta(e))))
        res.check.note("Y_k generator of " + s.edges[i] + " differs from theta");
    }
    // The edge used in the argument: off Im, hat, with every level of its
    // span carrying a cross-section no larger than S.
    std::string witness;
    for (std::size_t i = 0; i < gens.size() && witness.empty(); ++i) {
      const Edge e = tr.edge(s.edges[i]);
      if (!t.is_hat(e) || t.in_m(e)) continue;
      bool small = true;
      for (int h : t.span_indices(e)) small = small && sizes[h] <= static_cast<int>(s.size());
      if (small && support_within(gens[i], res.divisor)) witness = s.edges[i];
    }
    if (res.check.expect(!witness.empty()))
      res.witnesses.emplace_back(s, witness);
    else
      res.check.note("component " + to_string(s) + " of Y_" + std::to_string(k) +
                     " has no witness edge inside the divisor");
  }

  for (int i = 1; i <= t.m_index(); ++i) {
    if (sizes[i] > k) continue;
    TraverseSection ei = cross_section_named(t, i);
    const bool listed = std::find(comps.begin(), comps.end(), ei) != comps.end();
    bool through = true;
    for (const Monomial& g : yk_generators(x, ei)) through = through && g.exponent(x.eps(i)) > 0;
    if (!res.check.expect(listed && through))
      res.check.note("E at level " + to_string(t.occupied()[i]) +
                     " does not give the factor eps of the divisor");
  }
  return res;
}

BlowupPoint psi2_point(const LevelTree& t) {
  require_levels(t);
  BlowupPoint p;
  for (int k = 1; k <= t.m_index(); ++k) {
    TraverseSection s = cross_section_named(t, k);
    const int idx = static_cast<int>(s.size());
    if (!p.divisors.empty() && p.divisors.back().index >= idx)
      fail(ErrorKind::kDomain, "cross-section sizes do not increase below level " +
                                   to_string(t.occupied()[k - 1]));
    p.divisors.push_back({idx, std::move(s)});
  }
  for (Edge e : t.im_edges()) p.vanishing_zc.insert(t.tree().name(e));
  return p;
}

LevelTree psi2_level_tree(const WeightedTree& tau, const BlowupPoint& p) {
  const RootedTree& tr = tau.tree;
  const RootedTree g = gamma_bar(tau);
  const auto& ds = p.divisors;
  const int K = static_cast<int>(ds.size());
  for (int j = 0; j < K; ++j) {
    if (ds[j].index < 1 || (j > 0 && ds[j].index <= ds[j - 1].index))
      fail(ErrorKind::kDomain, "divisor indices must be positive and strictly increasing");
    if (!is_traverse_section(g, ds[j].section))
      fail(ErrorKind::kDomain, to_string(ds[j].section) + " is not a traverse section");
    if (j > 0 && section_compare(g, ds[j - 1].section, ds[j].section) != Order::kGreater)
      fail(ErrorKind::kDomain, "sections must decrease strictly with the index");
  }
  if (K == 0 && tau.weight[tr.root()] == 0)
    fail(ErrorKind::kDomain, "no divisor and a root of weight 0: no level map has I+ empty");

  std::vector<Rational> level(tr.size(), Rational(0));
  const Rational m = K == 0 ? Rational(0) : Rational(-ds.back().index);
  for (Vertex v : tr.preorder()) {
    if (v == tr.root()) continue;
    const std::string& n = tr.name(v);
    int last = -1;
    for (int j = 0; j < K; ++j)
      if (ds[j].section.contains(n)) {
        if (last >= 0 && last != j - 1)
          fail(ErrorKind::kDomain, "edge " + n + " crosses non-adjacent divisor levels");
        last = j;
      }
    if (last >= 0 && last < K - 1)
      level[v] = Rational(-ds[last].index);
    else if (last == K - 1 && K > 0 && !p.vanishing_zc.count(n))
      level[v] = m;
    else
      level[v] = std::min(level[tr.parent(v)], m) - 1;
  }

  LevelTree out;
  try {
    out = LevelTree(tau, level);
  } catch (const Error& e) {
    fail(ErrorKind::kDomain, std::string("divisor data gives no level map: ") + e.what());
  }
  std::vector<Rational> want;
  for (const Divisor& d : ds) want.push_back(Rational(-d.index));
  bool ok = out.has_level_data() && out.plus_levels() == want;
  for (int k = 1; ok && k <= out.m_index(); ++k)
    ok = cross_section_named(out, k) == ds[k - 1].section;
  if (ok) {
    std::set<std::string> im;
    for (Edge e : out.im_edges()) im.insert(tr.name(e));
    ok = im == p.vanishing_zc;
  }
  if (!ok) fail(ErrorKind::kDomain, "divisor data is not realized by a level map over the tree");
  return out;
}

FormalBundle FormalBundle::basis(const std::string& edge) { return FormalBundle{{{edge, 1}}}; }

FormalBundle& FormalBundle::operator+=(const FormalBundle& o) {
  for (const auto& [k, v] : o.exponents)
    if ((exponents[k] += v) == 0) exponents.erase(k);
  return *this;
}

FormalBundle& FormalBundle::operator-=(const FormalBundle& o) {
  for (const auto& [k, v] : o.exponents)
    if ((exponents[k] -= v) == 0) exponents.erase(k);
  return *this;
}

std::string FormalBundle::str() const {
  if (exponents.empty()) return "0";
  std::string out;
  for (const auto& [k, v] : exponents) {
    const int a = v < 0 ? -v : v;
    if (out.empty())
      out += v < 0 ? "-" : "";
    else
      out += v < 0 ? " - " : " + ";
    out += (a == 1 ? "" : std::to_string(a)) + "L_" + k;
  }
  return out;
}

BundleTable build_bundles(const LevelTree& t, const SpecialChoice& s) {
  require_levels(t);
  validate_special(t, s);
  const RootedTree& tr = t.tree();
  BundleTable b;
  for (int k = 1; k <= t.m_index(); ++k) {
    const int up = t.level_index(tr.parent(s.vertex[k]));
    FormalBundle f = FormalBundle::basis(tr.name(s.vertex[k]));
    for (int j = up + 1; j < k; ++j) f -= b.level.at(j);
    b.level[k] = f;
  }
  for (Edge e : t.hat_edges()) {
    FormalBundle f = FormalBundle::basis(tr.name(e));
    for (int j = t.level_index(tr.parent(e)) + 1; j < t.edge_level_index(e); ++j)
      f -= b.level.at(j);
    b.edge[e] = f;
  }
  return b;
}

CheckResult bundle_identity(const LevelTree& t, const SpecialChoice& s) {
  const RootedTree& tr = t.tree();
  const BundleTable b = build_bundles(t, s);
  CheckResult r;
  for (int k = 1; k <= t.m_index(); ++k)
    if (!r.expect(b.edge.at(s.vertex[k]) == b.level.at(k)))
      r.note("bundle of the special edge at level " + to_string(t.occupied()[k]) +
             " differs from the level bundle");

  std::map<int, FormalBundle> twist;
  for (Edge e : t.hat_edges()) {
    const int el = t.edge_level_index(e);
    FormalBundle lhs = b.edge.at(e);
    for (Edge f : tr.edges_above(e)) lhs += b.edge.at(f) - b.level.at(t.edge_level_index(f));
    FormalBundle geq;
    for (Edge f : tr.descendants_geq(e)) geq += FormalBundle::basis(tr.name(f));
    FormalBundle rhs = geq;
    for (int j = 1; j < el; ++j) rhs -= b.level.at(j);
    if (!r.expect(lhs == rhs))
      r.note("bundle identity fails at edge " + tr.name(e) + ": " + lhs.str() + " vs " +
             rhs.str());
    const int lv = t.level_index(e);
    if (lv > t.m_index()) continue;
    auto [it, fresh] = twist.emplace(lv, lhs - geq);
    if (!fresh && !r.expect(it->second == lhs - geq))
      r.note("edges ending at level " + to_string(t.occupied()[lv]) + " carry different twists");
  }
  return r;
}

Symbol rho_symbol(const std::string& edge) { return Symbol::keyed(Kind::kRho, edge); }
Symbol zcheck_symbol(const std::string& edge) { return Symbol::keyed(Kind::kZCheck, edge); }
Symbol ztilde_symbol(const std::string& edge) {
  return Symbol::keyed(Kind::kZ, edge, Decor::kTilde);
}
Symbol s_symbol(const std::string& tag) { return Symbol::keyed(Kind::kS, tag); }

namespace {

// rho_e off Im, zc_e on Im, 1 on special edges.
Monomial rho_factor(const Chart& x, Edge e) {
  const LevelTree& t = x.tree();
  if (x.is_special(e)) return Monomial();
  const std::string& n = t.tree().name(e);
  return Monomial(t.in_m(e) ? zcheck_symbol(n) : rho_symbol(n));
}

Monomial rho_chain(const Chart& x, Edge e) {
  Monomial out;
  for (Edge f : x.tree().tree().descendants_geq(e)) out *= rho_factor(x, f);
  return out;
}

void add_blowup_sources(const Chart& x, MonomialMap& g) {
  const LevelTree& t = x.tree();
  const RootedTree& tr = t.tree();
  for (int k = 1; k <= t.m_index(); ++k) g.add_source(Symbol::eps(t.occupied()[k], Decor::kTilde));
  for (Edge e : tr.edges()) {
    if (t.in_minus(e))
      g.add_source(ztilde_symbol(tr.name(e)));
    else if (!x.is_special(e))
      g.add_source(t.in_m(e) ? zcheck_symbol(tr.name(e)) : rho_symbol(tr.name(e)));
  }
  for (const auto& j : x.tags()) g.add_source(s_symbol(j));
}

}  // namespace

MonomialMap blowup_pullback(const Chart& x) {
  const LevelTree& t = x.tree();
  const RootedTree& tr = t.tree();
  MonomialMap g;
  add_blowup_sources(x, g);
  for (Edge e : tr.edges()) {
    const std::string& n = tr.name(e);
    if (t.in_minus(e))
      g.set(zeta_symbol(n), Monomial(ztilde_symbol(n)));
    else
      g.set(zeta_symbol(n), rho_factor(x, e) * tilde_span(t, e));
  }
  for (const auto& j : x.tags()) g.set(sigma_symbol(j), Monomial(s_symbol(j)));
  return g;
}

MonomialMap psi2_map(const Chart& x) {
  const LevelTree& t = x.tree();
  const RootedTree& tr = t.tree();
  MonomialMap g;
  add_blowup_sources(x, g);
  for (int k = 1; k <= t.m_index(); ++k) g.set(x.eps(k), tilde_eps(t, k));
  for (Edge e : tr.edges()) {
    if (t.in_minus(e)) {
      g.set(x.z(e), Monomial(ztilde_symbol(tr.name(e))));
    } else if (!x.is_special(e)) {
      const Edge top = x.special_edge(t.edge_level_index(e));
      g.set(x.u(e), rho_chain(x, e) / rho_chain(x, top));
    }
  }
  for (const auto& j : x.tags()) g.set(x.w(j), Monomial(s_symbol(j)));
  return g;
}

CheckResult psi2_chart_check(const LevelTree& t, const SpecialChoice& s) {
  require_levels(t);
  const Chart x(t, s, default_tags());
  const MonomialMap lhs = compose(x.theta(), psi2_map(x));
  const MonomialMap rhs = blowup_pullback(x);
  CheckResult r;
  if (!r.expect(lhs.targets() == rhs.targets())) r.note("psi2: target sets differ");
  for (const auto& [sym, img] : rhs.assignment()) {
    if (!lhs.contains(sym)) continue;
    if (!r.expect(lhs.at(sym) == img))
      r.note("psi2: theta after psi2 gives " + sym.str() + " = " + lhs.at(sym).str() +
             ", pi gives " + img.str());
  }
  return r;
}

std::vector<std::pair<std::string, CheckResult>> blowup_checks(const LevelTree& t,
                                                              const BlowupOptions& opt) {
  require_levels(t);
  std::vector<std::pair<std::string, CheckResult>> out;
  auto guarded = [&](const std::string& what, auto&& body) {
    CheckResult r;
    try {
      body(r);
    } catch (const Error& e) {
      r.fail(what + ": " + e.what());
    }
    for (auto& [name, acc] : out)
      if (name == what) {
        acc.merge(r);
        return;
      }
    out.emplace_back(what, r);
  };

  guarded("schedule", [&](CheckResult& r) { r.merge(check_schedule(blowup_schedule(t.base()))); });

  guarded("cross_sections", [&](CheckResult& r) {
    const RootedTree g = gamma_bar(t.base());
    for (int k = 1; k <= t.m_index(); ++k) {
      TraverseSection ek = cross_section_named(t, k);
      if (!r.expect(is_traverse_section(g, ek)))
        r.note("E at level " + to_string(t.occupied()[k]) + " is not a traverse section");
      if (k > 1 && !r.expect(section_compare(g, cross_section_named(t, k - 1), ek) ==
                             Order::kGreater))
        r.note("cross-sections do not decrease at level " + to_string(t.occupied()[k]));
    }
  });

  guarded("yk_pullback", [&](CheckResult& r) {
    const Chart x(t, default_special(t), default_tags());
    Monomial prev;
    for (int k = 1; k <= std::max(1, t.tree().edge_count()); ++k) {
      YkResult y = yk_pullback(x, k);
      r.merge(y.check);
      Monomial q = y.divisor / prev;
      bool divides = true;
      for (const auto& term : q.terms()) divides = divides && term.second > 0;
      if (!r.expect(divides)) r.note("Y_k divisor is not monotone at k = " + std::to_string(k));
      prev = y.divisor;
    }
  });

  guarded("psi2_round_trip", [&](CheckResult& r) {
    const BlowupPoint p = psi2_point(t);
    const LevelTree back = psi2_level_tree(t.base(), p);
    if (!r.expect(is_equivalent(t, back) && is_equivalent(back, t)))
      r.note("psi2 reconstruction is not equivalent to the source tree");
    if (!r.expect(psi2_point(back) == p)) r.note("psi2 reconstruction changes the divisor data");
  });

  std::vector<SpecialChoice> choices =
      opt.all_special ? all_special_choices(t) : std::vector<SpecialChoice>{default_special(t)};
  for (const SpecialChoice& s : choices) {
    guarded("bundle_identity", [&](CheckResult& r) { r.merge(bundle_identity(t, s)); });
    guarded("psi2_chart", [&](CheckResult& r) { r.merge(psi2_chart_check(t, s)); });
    guarded("ideal_transform", [&](CheckResult& r) { r.merge(ideal_transform_all(t, s)); });
  }
  return out;
}

CheckResult run_blowup_checks(const LevelTree& t, const BlowupOptions& opt) {
  CheckResult r;
  for (const auto& [name, c] : blowup_checks(t, opt)) {
    CheckResult named = c;
    if (!named.ok) named.detail = name + ": " + named.detail;
    r.merge(named);
  }
  return r;
}

}  // namespace leveltree
