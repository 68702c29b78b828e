#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

using leveltree::Monomial;
using leveltree::Symbol;
using leveltree::Vertex;

std::set<std::set<std::string>> sections(const RootedTree& g) {
  std::vector<std::vector<Vertex>> paths;  // edges (child ids) on each root-to-leaf path
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!g.children(v).empty()) continue;
    std::vector<Vertex> p;
    for (Vertex w = v; w != g.root(); w = g.parent(w)) p.push_back(w);
    paths.push_back(p);
  }
  std::vector<Vertex> edges;
  for (Vertex v = 0; v < g.size(); ++v)
    if (v != g.root()) edges.push_back(v);
  std::set<std::set<std::string>> out;
  if (edges.empty()) return out;
  for (unsigned long mask = 1; mask < (1UL << edges.size()); ++mask) {
    std::vector<char> in(g.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (mask >> i & 1) in[edges[i]] = 1;
    bool ok = true;
    for (const auto& p : paths) {
      int hits = 0;
      for (Vertex e : p) hits += in[e];
      ok = ok && hits == 1;
    }
    if (!ok) continue;
    std::set<std::string> s;
    for (Vertex e : edges)
      if (in[e]) s.insert(g.name(e));
    out.insert(s);
  }
  return out;
}

namespace {

struct Shape {
  Rational m;
  std::vector<Rational> above;  // distinct levels >= m, descending
  int depth_below = 0;
};

Shape shape(const WeightedTree& w, const std::vector<Rational>& level) {
  const RootedTree& g = w.tree;
  Shape s;
  bool any = false;
  for (Vertex v = 0; v < g.size(); ++v)
    if (w.weight[v] > 0 && (!any || level[v] > s.m)) {
      s.m = level[v];
      any = true;
    }
  for (Vertex v = 0; v < g.size(); ++v)
    if (level[v] >= s.m) s.above.push_back(level[v]);
  std::sort(s.above.begin(), s.above.end(), std::greater<>());
  s.above.erase(std::unique(s.above.begin(), s.above.end()), s.above.end());
  for (Vertex v = 0; v < g.size(); ++v) {
    int d = 0;
    for (Vertex u = v; level[u] < s.m; u = g.parent(u)) ++d;
    s.depth_below = std::max(s.depth_below, d);
  }
  return s;
}

}  // namespace

std::string class_key(const WeightedTree& w, const std::vector<Rational>& level) {
  const Shape s = shape(w, level);
  std::string key;
  for (Vertex v = 0; v < w.tree.size(); ++v) {
    int rank = -1;
    if (level[v] >= s.m)
      rank = static_cast<int>(std::find(s.above.begin(), s.above.end(), level[v]) - s.above.begin());
    key += w.tree.name(v) + "=" + std::to_string(rank) + ";";
  }
  return key;
}

std::string class_key(const LevelTree& t) { return class_key(t.base(), t.levels()); }

std::set<std::string> level_classes(const WeightedTree& w, int max_levels) {
  const RootedTree& g = w.tree;
  const int n = g.size();
  std::set<std::string> out;
  if (!w.has_positive_weight()) return out;
  std::vector<Rational> level(n, Rational(0));
  std::vector<Vertex> order;  // parents before children
  std::vector<Vertex> stack{g.root()};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (Vertex c : g.children(v)) stack.push_back(c);
  }
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == order.size()) {
      const Shape s = shape(w, level);
      if (static_cast<int>(s.above.size()) + s.depth_below <= max_levels) out.insert(class_key(w, level));
      return;
    }
    const Vertex v = order[i];
    for (int l = -1; l >= -(n - 1); --l) {
      if (Rational(l) >= level[g.parent(v)]) continue;
      level[v] = Rational(l);
      rec(i + 1);
    }
  };
  rec(1);
  return out;
}

long weighted_tree_count(int max_edges, int max_weight, bool require_positive, bool stable) {
  long total = 0;
  for (int n = 1; n <= max_edges + 1; ++n) {
    std::set<std::string> seen;
    std::vector<int> parent(n, -1), weight(n, 0);
    std::function<std::string(int, const std::vector<std::vector<int>>&)> code =
        [&](int v, const std::vector<std::vector<int>>& kids) {
          std::vector<std::string> cs;
          for (int c : kids[v]) cs.push_back(code(c, kids));
          std::sort(cs.begin(), cs.end());
          std::string s = "[" + std::to_string(weight[v]);
          for (const auto& c : cs) s += c;
          return s + "]";
        };
    std::function<void(int)> weights = [&](int v) {
      if (v == n) {
        std::vector<std::vector<int>> kids(n);
        int sum = 0;
        for (int u = 1; u < n; ++u) kids[parent[u]].push_back(u);
        for (int u = 0; u < n; ++u) sum += weight[u];
        if (require_positive && sum == 0) return;
        if (stable)
          for (int u = 1; u < n; ++u)
            if (weight[u] == 0 && kids[u].size() < 2) return;
        seen.insert(code(0, kids));
        return;
      }
      for (int x = 0; x <= max_weight; ++x) {
        weight[v] = x;
        weights(v + 1);
      }
    };
    std::function<void(int)> parents = [&](int v) {
      if (v == n) {
        weights(0);
        return;
      }
      for (int p = 0; p < v; ++p) {
        parent[v] = p;
        parents(v + 1);
      }
    };
    parents(1);
    total += static_cast<long>(seen.size());
  }
  return total;
}

Rational evaluate(const Monomial& m, const std::map<Symbol, Rational>& at) {
  if (m.is_zero()) return Rational(0);
  Rational out(1);
  for (const auto& [s, p] : m.terms()) {
    const Rational x = at.at(s);
    for (int i = 0; i < std::abs(p); ++i) out = p > 0 ? out * x : out / x;
  }
  return out;
}

Indices indices(const LevelTree& t) {
  const RootedTree& g = t.tree();
  Indices r;
  bool any = false;
  for (Vertex v = 0; v < g.size(); ++v)
    if (t.weight(v) > 0 && (!any || t.level(v) > r.m)) {
      r.m = t.level(v);
      any = true;
    }
  std::set<Rational, std::greater<>> plus;
  for (Vertex v = 0; v < g.size(); ++v)
    if (t.level(v) >= r.m && t.level(v) < Rational(0)) plus.insert(t.level(v));
  r.plus.assign(plus.begin(), plus.end());
  for (Vertex e = 0; e < g.size(); ++e) {
    if (e == g.root()) continue;
    const Rational up = t.level(g.parent(e)), down = t.level(e);
    if (!(up > r.m)) {
      r.minus.insert(g.name(e));
      continue;
    }
    if (down < r.m) r.im.insert(g.name(e));
    const Rational le = std::max(down, r.m);
    for (const Rational& i : r.plus)
      if (le <= i && i < up) r.cross[leveltree::to_string(i)].insert(g.name(e));
  }
  return r;
}

}  // namespace oracle
