#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "leveltree/rational.hpp"
#include "leveltree/tree.hpp"

namespace leveltree {

// A subset I of the index set: I+ as level values, Im and I- as edge ids.
struct IndexSubset {
  std::set<Rational> levels;
  std::set<std::string> edges;

  bool empty() const { return levels.empty() && edges.empty(); }
  bool operator==(const IndexSubset& o) const { return levels == o.levels && edges == o.edges; }
  bool operator<(const IndexSubset& o) const {
    return levels != o.levels ? levels < o.levels : edges < o.edges;
  }
};

std::string to_string(const IndexSubset& I);

// Per-tree membership flags for a subset: level flags indexed by occupied
// level index, edge flags by vertex index.
struct IndexMask {
  std::vector<char> level;
  std::vector<char> edge;
};

struct IndexPartition {
  std::vector<Rational> plus;      // descending
  std::vector<std::string> m;      // sorted ids
  std::vector<std::string> minus;  // sorted ids
  std::size_t size() const { return plus.size() + m.size() + minus.size(); }
};

// Weighted tree with a level map satisfying: a parent sits strictly above its
// children, and the root is the only vertex at level 0. Derived level data is
// computed once on construction; it is only available when some vertex has
// positive weight.
class LevelTree {
 public:
  LevelTree();  // single root with weight 1 at level 0
  LevelTree(WeightedTree base, std::vector<Rational> level);

  static LevelTree build(const std::string& root,
                         const std::map<std::string, std::string>& parents,
                         const std::map<std::string, int>& weights,
                         const std::map<std::string, Rational>& levels);

  const WeightedTree& base() const { return base_; }
  const RootedTree& tree() const { return base_.tree; }
  int weight(Vertex v) const { return base_.weight[v]; }
  const Rational& level(Vertex v) const { return level_[v]; }
  const std::vector<Rational>& levels() const { return level_; }

  // Occupied levels, descending; occupied()[0] == 0.
  const std::vector<Rational>& occupied() const { return occupied_; }
  int level_index(Vertex v) const { return lvl_idx_[v]; }
  int occupied_index(const Rational& level) const;  // -1 if unoccupied

  bool has_level_data() const { return m_idx_ >= 0; }

  // All accessors below throw kDomain without level data.
  const Rational& m() const;
  int m_index() const;  // occupied index of m; I+ is occupied indices 1..m_index()
  std::vector<Rational> plus_levels() const;
  bool is_hat(Edge e) const;
  bool in_m(Edge e) const;      // e in Im
  bool in_minus(Edge e) const;  // e in I-
  // Occupied index of l(e) = max(l(v_e^-), m), for hat edges.
  int edge_level_index(Edge e) const;
  const Rational& edge_level(Edge e) const;
  std::vector<Edge> hat_edges() const;
  std::vector<Edge> im_edges() const;
  std::vector<Edge> iminus_edges() const;
  // Occupied indices of [l(e), l(v_e^+)), from the top down.
  std::vector<int> span_indices(Edge e) const;
  // Cross-section at the occupied level index k, 1 <= k <= m_index().
  std::vector<Edge> cross_section_at(int k) const;
  std::vector<Edge> cross_section(const Rational& i) const;
  std::vector<Vertex> vertices_at(int k) const;

  IndexPartition index_partition() const;

  // Level successor: the next occupied level above i.
  Rational level_successor(const Rational& i) const;

  // Throws kDomain unless I is contained in the index set.
  IndexMask mask(const IndexSubset& I) const;
  // Every subset of the index set, in a fixed order.
  std::vector<IndexSubset> all_index_subsets() const;

 private:
  void require_data() const;

  WeightedTree base_;
  std::vector<Rational> level_;
  std::vector<Rational> occupied_;
  std::vector<int> lvl_idx_;
  int m_idx_ = -1;
  std::vector<int> edge_lvl_;  // occupied index, -1 off the hat edges
};

// Special vertices: for each occupied index k in 1..m_index(), a vertex at
// that level (entry 0 unused).
struct SpecialChoice {
  std::vector<Vertex> vertex;
  bool operator==(const SpecialChoice& o) const { return vertex == o.vertex; }
};

// Lexicographically smallest id at each level of I+.
SpecialChoice default_special(const LevelTree& t);
// Every valid choice, in lexicographic order of the choice vector.
std::vector<SpecialChoice> all_special_choices(const LevelTree& t);
void validate_special(const LevelTree& t, const SpecialChoice& s);
// Parses "-1:vb,-2:va"; unspecified levels take the default.
SpecialChoice parse_special(const LevelTree& t, const std::string& spec);

// i[0] = i < i[1] < ... < 0 as occupied indices (the last entry is 0).
std::vector<int> ascent_indices(const LevelTree& t, const SpecialChoice& s, int k);
std::vector<Rational> ascent_sequence(const LevelTree& t, const SpecialChoice& s,
                                      const Rational& i);

// Equivalence: the weighted tree together with, for each vertex, the rank of
// its level among occupied levels >= m, or -1 below m. Without level data
// every vertex is ranked.
struct EquivKey {
  WeightedTree base;
  std::vector<int> rank;
  bool operator==(const EquivKey& o) const { return base == o.base && rank == o.rank; }
  bool operator<(const EquivKey& o) const;
};

EquivKey equivalence_key(const LevelTree& t);
// Conditions E1-E3, read literally (m taken from the first argument).
bool is_equivalent(const LevelTree& t, const LevelTree& t2);
// Levels >= m become 0, -1, -2, ...; a vertex below m sits at m - d where d
// is its distance to the nearest ancestor at or above m.
LevelTree canonical_form(const LevelTree& t);
// I+ transported along the level correspondence; edge parts unchanged.
IndexSubset phi_bijection(const LevelTree& t, const LevelTree& t2, const IndexSubset& I);

}  // namespace leveltree
