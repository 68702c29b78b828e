#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "leveltree/contraction.hpp"
#include "leveltree/level_tree.hpp"
#include "leveltree/monomial.hpp"

namespace leveltree {

// Objects are key-sorted, so serialization is deterministic.
using Json = nlohmann::json;

// { "root": id, "parents": {child: parent}, "weights": {vertex: int},
//   "levels": {vertex: "p/q"}, "special": {"level": vertex} }
// with "levels" and "special" optional.
struct TreeDocument {
  WeightedTree base;
  std::optional<LevelTree> tree;
  std::map<std::string, std::string> special;

  // Throws kDomain when the document carries no levels.
  const LevelTree& level_tree() const;
};

// Throws kParse with the byte offset on malformed text, kStructure or
// kInvalidLevel on semantic violations.
TreeDocument parse_tree_document(std::string_view text);
TreeDocument load_tree_document(const std::string& path);
TreeDocument tree_document_from_json(const Json& j);

Json to_json(const WeightedTree& w);
Json to_json(const LevelTree& t);

// The document's special map merged with an override "level:vertex,...".
SpecialChoice special_for(const TreeDocument& doc, const std::string& override_spec = {});

// "-1,-2" and "a,b" into a subset of the index set of t.
IndexSubset parse_index_subset(const LevelTree& t, const std::string& levels,
                               const std::string& edges);
Json to_json(const IndexSubset& I);
Json to_json(const MonomialMap& g);

// Graphviz: one dotted rail per occupied level, positive weights filled.
std::string to_dot(const LevelTree& t);
std::string to_dot(const WeightedTree& w);

// Human-readable tables.
std::string render_tree(const LevelTree& t);
std::string render_indices(const LevelTree& t, const SpecialChoice& s);

// Stable one-line id: "o:0@0 a<o:1@-2 ...".
std::string instance_id(const LevelTree& t);

}  // namespace leveltree
