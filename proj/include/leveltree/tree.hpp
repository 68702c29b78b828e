#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace leveltree {

// Vertices are dense indices ordered by their string id; an edge is named by
// its child vertex, so edge e_v and vertex v share an index.
using Vertex = int;
using Edge = int;
inline constexpr Vertex kNoVertex = -1;

enum class Order { kGreater, kLess, kIncomparable, kEqual };

const char* to_string(Order o);

class RootedTree {
 public:
  // The single-vertex tree with root id "o".
  RootedTree();

  // parents maps each non-root id to its parent id. Throws kStructure when
  // the map does not describe a tree rooted at `root`.
  static RootedTree from_parents(const std::string& root,
                                 const std::map<std::string, std::string>& parents);

  int size() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return size() - 1; }
  Vertex root() const { return root_; }
  Vertex parent(Vertex v) const { return parent_[v]; }
  const std::vector<Vertex>& children(Vertex v) const { return children_[v]; }
  const std::string& name(Vertex v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Vertex> find(std::string_view id) const;
  Vertex vertex(std::string_view id) const;  // throws kStructure
  Edge edge(std::string_view id) const;      // child id; throws for the root

  // All edges (non-root vertices) in index order.
  const std::vector<Edge>& edges() const { return edges_; }
  bool is_edge(Vertex v) const { return v >= 0 && v < size() && v != root_; }

  // (v_e^+, v_e^-).
  std::pair<Vertex, Vertex> endpoints(Edge e) const;

  // v ⪰ w: v lies on the path from the root to w.
  bool geq(Vertex v, Vertex w) const { return tin_[v] <= tin_[w] && tout_[w] <= tout_[v]; }
  // e ≻ f iff v_e^- ⪰ v_f^+.
  bool edge_gt(Edge e, Edge f) const { return geq(e, parent_[f]); }
  bool edge_geq(Edge e, Edge f) const { return e == f || edge_gt(e, f); }

  Order compare_vertices(Vertex v, Vertex w) const;
  Order compare_edges(Edge e, Edge f) const;

  // { e' : e' ⪰ e }, listed from e upwards to the root-incident edge.
  std::vector<Edge> descendants_geq(Edge e) const;
  // Edges strictly above e, nearest first.
  std::vector<Edge> edges_above(Edge e) const;

  int depth(Vertex v) const { return depth_[v]; }
  const std::vector<Vertex>& preorder() const { return preorder_; }
  bool is_leaf(Vertex v) const { return children_[v].empty(); }

  bool operator==(const RootedTree& other) const {
    return root_ == other.root_ && names_ == other.names_ && parent_ == other.parent_;
  }

 private:
  void finish();

  std::vector<std::string> names_;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<Edge> edges_;
  std::vector<Vertex> preorder_;
  std::vector<int> tin_, tout_, depth_;
  Vertex root_ = 0;
};

struct WeightedTree {
  RootedTree tree;
  std::vector<int> weight;  // indexed by vertex

  WeightedTree();
  WeightedTree(RootedTree t, std::vector<int> w);

  // Throws kStructure on a missing or negative weight.
  static WeightedTree build(const std::string& root,
                            const std::map<std::string, std::string>& parents,
                            const std::map<std::string, int>& weights);

  int total_weight() const;
  bool has_positive_weight() const;
  bool operator==(const WeightedTree& other) const {
    return tree == other.tree && weight == other.weight;
  }
};

}  // namespace leveltree
