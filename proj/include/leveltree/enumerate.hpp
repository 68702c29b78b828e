#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "leveltree/level_tree.hpp"

namespace leveltree {

struct EnumSpec {
  int max_edges = 5;
  int max_weight = 2;
  int max_levels = 5;
  bool require_positive_weight = true;
  // A non-root vertex of weight 0 needs at least two children.
  bool stable = true;
};

// Beyond this the level-tree count runs into the millions per suite.
inline constexpr int kMaxEnumEdges = 8;

// Throws kDomain on negative bounds and kLimit above kMaxEnumEdges.
void validate(const EnumSpec& spec);

// Root-preserving isomorphism class code: weight then the sorted codes of
// the children, e.g. "0(1()1())".
std::string tree_code(const WeightedTree& t);

// One tree per isomorphism class, ordered by edge count then code. Vertices
// are named o, v1, v2, ... in preorder.
std::vector<WeightedTree> gen_weighted_trees(const EnumSpec& spec);

// One canonical representative per equivalence class of level maps on base
// with at most spec.max_levels occupied levels.
std::vector<LevelTree> gen_level_trees(const WeightedTree& base, const EnumSpec& spec);

// Every level tree of every weighted tree, in a deterministic order.
void for_each_level_tree(const EnumSpec& spec, const std::function<void(const LevelTree&)>& fn);

struct StrataPoset {
  std::vector<LevelTree> nodes;  // canonical representatives
  // covers[a] lists b with [t_b] = [(t_a)_(I)] for some nonempty I.
  std::vector<std::vector<int>> arrows;
  int find(const LevelTree& t) const;  // -1 if absent
};

// Classes reachable from [t] by contraction.
StrataPoset strata_poset(const LevelTree& t);
// Union over every level class on base.
StrataPoset strata_poset(const WeightedTree& base, const EnumSpec& spec);

}  // namespace leveltree
