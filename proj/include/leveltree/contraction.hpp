#pragma once

#include <set>
#include <string>
#include <vector>

#include "leveltree/level_tree.hpp"

namespace leveltree {

struct ContractionResult {
  LevelTree tree;
  // For each vertex of the source tree (by index), the id of its image.
  std::vector<std::string> projection;
  std::set<std::string> contracted;
};

// { e in (hat edges minus Im) or Im-part of I : occupied [l(e), l(v_e^+)) in I+ }
// together with the I- part of I.
std::set<std::string> contracted_edges(const LevelTree& t, const IndexSubset& I);

// t_(I): contract the edges above, push weights to the surviving vertex,
// and lift levels.
ContractionResult contract(const LevelTree& t, const IndexSubset& I);

struct IdentityReport {
  bool valid_tree = false;  // t_(I) satisfied the level-tree conditions
  bool m = false;
  bool plus = false;
  bool im = false;
  bool minus = false;
  // I-(t_(I)) = (I- \ I-part) plus the Im edges that drop to or below m(t_(I)).
  bool minus_amended = false;
  bool weight = false;
  std::string detail;  // first mismatch, empty when everything holds

  bool stated_hold() const { return valid_tree && m && plus && im && minus && weight; }
};

IdentityReport verify_index_identities(const LevelTree& t, const IndexSubset& I);

// t_(I) ~ t2_(phi(I)). Throws kDomain when t and t2 are not equivalent.
bool verify_equivalence_compat(const LevelTree& t, const LevelTree& t2, const IndexSubset& I);

}  // namespace leveltree
