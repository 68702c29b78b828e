#include "leveltree/contraction.hpp"

#include <algorithm>
#include <map>

#include "leveltree/errors.hpp"

namespace leveltree {
namespace {

std::vector<char> contracted_flags(const LevelTree& t, const IndexMask& mk) {
  const RootedTree& tr = t.tree();
  std::vector<char> out(tr.size(), 0);
  for (Edge e : tr.edges()) {
    if (t.in_minus(e)) {
      out[e] = mk.edge[e];
      continue;
    }
    if (t.in_m(e) && !mk.edge[e]) continue;
    bool inside = true;
    for (int k : t.span_indices(e)) inside = inside && mk.level[k];
    out[e] = inside;
  }
  return out;
}

}  // namespace

std::set<std::string> contracted_edges(const LevelTree& t, const IndexSubset& I) {
  std::vector<char> flags = contracted_flags(t, t.mask(I));
  std::set<std::string> out;
  for (Edge e : t.tree().edges())
    if (flags[e]) out.insert(t.tree().name(e));
  return out;
}

ContractionResult contract(const LevelTree& t, const IndexSubset& I) {
  const IndexMask mk = t.mask(I);
  const RootedTree& tr = t.tree();
  const std::vector<char> gone = contracted_flags(t, mk);

  std::vector<Vertex> rep(tr.size(), tr.root());
  for (Vertex v : tr.preorder())
    if (v != tr.root()) rep[v] = gone[v] ? rep[tr.parent(v)] : v;

  // Lowest remaining level of I+, and the nearest remaining level at or
  // above a given occupied index.
  auto kept = [&](int k) { return k >= 1 && k <= t.m_index() && !mk.level[k]; };
  auto lift = [&](int k) {
    for (int j = std::min(k, t.m_index()); j >= 1; --j)
      if (kept(j)) return j;
    fail(ErrorKind::kDomain, "no level of I+ outside I+-part of I lies above the lifted vertex");
  };

  std::map<std::string, std::string> parents;
  std::map<std::string, int> weights;
  std::map<std::string, Rational> levels;
  for (Vertex v = 0; v < tr.size(); ++v) weights[tr.name(rep[v])] += t.weight(v);
  levels[tr.name(tr.root())] = 0;
  for (Vertex v : tr.edges()) {
    if (gone[v]) continue;
    parents[tr.name(v)] = tr.name(rep[tr.parent(v)]);
    Rational lv;
    if (t.in_minus(v) || (t.in_m(v) && !mk.edge[v])) {
      lv = t.level(v);
    } else if (t.in_m(v)) {
      lv = t.occupied()[lift(t.m_index())];
    } else {
      lv = t.occupied()[lift(t.level_index(v))];
    }
    levels[tr.name(v)] = lv;
  }

  ContractionResult res{LevelTree::build(tr.name(tr.root()), parents, weights, levels), {}, {}};
  res.projection.resize(tr.size());
  for (Vertex v = 0; v < tr.size(); ++v) res.projection[v] = tr.name(rep[v]);
  for (Edge e : tr.edges())
    if (gone[e]) res.contracted.insert(tr.name(e));
  return res;
}

IdentityReport verify_index_identities(const LevelTree& t, const IndexSubset& I) {
  IdentityReport r;
  const IndexMask mk = t.mask(I);
  const RootedTree& tr = t.tree();
  auto note = [&](const std::string& what) {
    if (r.detail.empty()) r.detail = what;
  };

  ContractionResult c;
  try {
    c = contract(t, I);
  } catch (const Error& e) {
    note(std::string("t_(I) is not a weighted level tree: ") + e.what());
    return r;
  }
  r.valid_tree = true;
  const LevelTree& s = c.tree;
  r.weight = s.base().total_weight() == t.base().total_weight();
  if (!r.weight) note("total weight changed");

  std::vector<Rational> plus_rest;
  for (int k = 1; k <= t.m_index(); ++k)
    if (!mk.level[k]) plus_rest.push_back(t.occupied()[k]);
  const Rational expect_m = plus_rest.empty() ? Rational(0) : plus_rest.back();
  r.m = s.m() == expect_m;
  if (!r.m) note("m(t_(I)) = " + to_string(s.m()) + ", expected " + to_string(expect_m));
  r.plus = s.plus_levels() == plus_rest;
  if (!r.plus) note("I+(t_(I)) differs from I+ minus I");

  std::vector<std::string> im_expect, minus_expect, minus_amended;
  for (Edge e : tr.edges()) {
    if (t.in_m(e) && !mk.edge[e]) {
      if (t.level(tr.parent(e)) > s.m())
        im_expect.push_back(tr.name(e));
      else
        minus_amended.push_back(tr.name(e));
    }
    if (t.in_minus(e) && !mk.edge[e]) {
      minus_expect.push_back(tr.name(e));
      minus_amended.push_back(tr.name(e));
    }
  }
  std::sort(minus_amended.begin(), minus_amended.end());
  IndexPartition p = s.index_partition();
  r.im = p.m == im_expect;
  if (!r.im) note("Im(t_(I)) differs from the stated subset of Im minus I");
  r.minus = p.minus == minus_expect;
  if (!r.minus) {
    std::string extra;
    for (const auto& e : p.minus)
      if (!std::binary_search(minus_expect.begin(), minus_expect.end(), e)) extra += " " + e;
    note("I-(t_(I)) has extra edges:" + extra);
  }
  r.minus_amended = p.minus == minus_amended;
  return r;
}

bool verify_equivalence_compat(const LevelTree& t, const LevelTree& t2, const IndexSubset& I) {
  IndexSubset J = phi_bijection(t, t2, I);
  return is_equivalent(contract(t, I).tree, contract(t2, J).tree);
}

}  // namespace leveltree
