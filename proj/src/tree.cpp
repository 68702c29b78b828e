#include "leveltree/tree.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "leveltree/errors.hpp"

namespace leveltree {

const char* to_string(Order o) {
  switch (o) {
    case Order::kGreater: return "greater";
    case Order::kLess: return "less";
    case Order::kIncomparable: return "incomparable";
    case Order::kEqual: return "equal";
  }
  return "?";
}

RootedTree::RootedTree() : names_{"o"}, parent_{kNoVertex}, children_(1), root_(0) {
  finish();
}

RootedTree RootedTree::from_parents(const std::string& root,
                                    const std::map<std::string, std::string>& parents) {
  std::set<std::string> ids{root};
  for (const auto& [child, par] : parents) {
    if (child == root) fail(ErrorKind::kStructure, "root '" + root + "' must not have a parent");
    if (child.empty() || par.empty()) fail(ErrorKind::kStructure, "empty vertex id");
    ids.insert(child);
    ids.insert(par);
  }
  RootedTree t;
  t.names_.assign(ids.begin(), ids.end());
  const int n = t.size();
  t.parent_.assign(n, kNoVertex);
  t.children_.assign(n, {});
  t.root_ = t.vertex(root);
  for (const auto& [child, par] : parents) t.parent_[t.vertex(child)] = t.vertex(par);
  for (Vertex v = 0; v < n; ++v) {
    if (v != t.root_ && t.parent_[v] == kNoVertex)
      fail(ErrorKind::kStructure, "vertex '" + t.names_[v] + "' has no parent and is not the root");
  }
  // Every vertex must reach the root.
  for (Vertex v = 0; v < n; ++v) {
    Vertex w = v;
    for (int steps = 0; w != t.root_; ++steps) {
      if (steps > n) fail(ErrorKind::kStructure, "parent map has a cycle through '" + t.names_[v] + "'");
      w = t.parent_[w];
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (v != t.root_) t.children_[t.parent_[v]].push_back(v);
  t.finish();
  return t;
}

void RootedTree::finish() {
  const int n = size();
  edges_.clear();
  for (Vertex v = 0; v < n; ++v)
    if (v != root_) edges_.push_back(v);
  tin_.assign(n, 0);
  tout_.assign(n, 0);
  depth_.assign(n, 0);
  preorder_.clear();
  int clock = 0;
  std::vector<std::pair<Vertex, std::size_t>> stack{{root_, 0}};
  tin_[root_] = clock++;
  preorder_.push_back(root_);
  while (!stack.empty()) {
    auto& [v, k] = stack.back();
    if (k < children_[v].size()) {
      Vertex c = children_[v][k++];
      depth_[c] = depth_[v] + 1;
      tin_[c] = clock++;
      preorder_.push_back(c);
      stack.emplace_back(c, 0);
    } else {
      tout_[v] = clock++;
      stack.pop_back();
    }
  }
}

std::optional<Vertex> RootedTree::find(std::string_view id) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), id);
  if (it == names_.end() || *it != id) return std::nullopt;
  return static_cast<Vertex>(it - names_.begin());
}

Vertex RootedTree::vertex(std::string_view id) const {
  if (auto v = find(id)) return *v;
  fail(ErrorKind::kStructure, "unknown vertex '" + std::string(id) + "'");
}

Edge RootedTree::edge(std::string_view id) const {
  auto v = find(id);
  if (!v || *v == root_) fail(ErrorKind::kStructure, "unknown edge '" + std::string(id) + "'");
  return *v;
}

std::pair<Vertex, Vertex> RootedTree::endpoints(Edge e) const {
  if (!is_edge(e)) fail(ErrorKind::kStructure, "unknown edge index " + std::to_string(e));
  return {parent_[e], e};
}

Order RootedTree::compare_vertices(Vertex v, Vertex w) const {
  if (v == w) return Order::kEqual;
  if (geq(v, w)) return Order::kGreater;
  if (geq(w, v)) return Order::kLess;
  return Order::kIncomparable;
}

Order RootedTree::compare_edges(Edge e, Edge f) const {
  if (!is_edge(e) || !is_edge(f)) fail(ErrorKind::kStructure, "compare_edges on a non-edge");
  if (e == f) return Order::kEqual;
  if (edge_gt(e, f)) return Order::kGreater;
  if (edge_gt(f, e)) return Order::kLess;
  return Order::kIncomparable;
}

std::vector<Edge> RootedTree::descendants_geq(Edge e) const {
  if (!is_edge(e)) fail(ErrorKind::kStructure, "descendants_geq on a non-edge");
  std::vector<Edge> out;
  for (Vertex v = e; v != root_; v = parent_[v]) out.push_back(v);
  return out;
}

std::vector<Edge> RootedTree::edges_above(Edge e) const {
  std::vector<Edge> out;
  for (Vertex v = parent_[e]; v != root_; v = parent_[v]) out.push_back(v);
  return out;
}

WeightedTree::WeightedTree() : weight(1, 0) {}

WeightedTree::WeightedTree(RootedTree t, std::vector<int> w)
    : tree(std::move(t)), weight(std::move(w)) {
  if (static_cast<int>(weight.size()) != tree.size())
    fail(ErrorKind::kStructure, "weight vector size does not match the tree");
  for (Vertex v = 0; v < tree.size(); ++v)
    if (weight[v] < 0) fail(ErrorKind::kStructure, "negative weight at '" + tree.name(v) + "'");
}

WeightedTree WeightedTree::build(const std::string& root,
                                 const std::map<std::string, std::string>& parents,
                                 const std::map<std::string, int>& weights) {
  RootedTree t = RootedTree::from_parents(root, parents);
  std::vector<int> w(t.size(), -1);
  for (const auto& [id, value] : weights) {
    auto v = t.find(id);
    if (!v) fail(ErrorKind::kStructure, "weight given for unknown vertex '" + id + "'");
    w[*v] = value;
  }
  for (Vertex v = 0; v < t.size(); ++v)
    if (w[v] < 0) fail(ErrorKind::kStructure, "missing or negative weight for '" + t.name(v) + "'");
  return WeightedTree(std::move(t), std::move(w));
}

int WeightedTree::total_weight() const {
  return std::accumulate(weight.begin(), weight.end(), 0);
}

bool WeightedTree::has_positive_weight() const {
  return std::any_of(weight.begin(), weight.end(), [](int w) { return w > 0; });
}

}  // namespace leveltree
