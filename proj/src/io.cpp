#include "leveltree/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "leveltree/errors.hpp"

namespace leveltree {
namespace {

const Json& member(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorKind::kParse, std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& object_member(const Json& j, const char* key) {
  const Json& m = member(j, key);
  if (!m.is_object()) fail(ErrorKind::kParse, std::string("field \"") + key + "\" must be an object");
  return m;
}

std::string as_id(const Json& v, const std::string& where) {
  if (!v.is_string()) fail(ErrorKind::kParse, where + " must be a string id");
  return v.get<std::string>();
}

Rational as_level(const Json& v, const std::string& who) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  fail(ErrorKind::kParse, "level of '" + who + "' must be a rational string such as \"-3/2\"");
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string set_str(const std::vector<std::string>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
  return out + "}";
}

std::string edge_names(const RootedTree& tr, const std::vector<Edge>& es) {
  std::vector<std::string> names;
  for (Edge e : es) names.push_back(tr.name(e));
  return set_str(names);
}

}  // namespace

const LevelTree& TreeDocument::level_tree() const {
  if (!tree) fail(ErrorKind::kDomain, "the document has no \"levels\" field");
  return *tree;
}

TreeDocument tree_document_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::kParse, "a tree document must be a JSON object");
  const std::string root = as_id(member(j, "root"), "\"root\"");
  std::map<std::string, std::string> parents;
  for (const auto& [child, par] : object_member(j, "parents").items())
    parents[child] = as_id(par, "parent of '" + child + "'");
  std::map<std::string, int> weights;
  for (const auto& [v, w] : object_member(j, "weights").items()) {
    if (!w.is_number_integer()) fail(ErrorKind::kParse, "weight of '" + v + "' must be an integer");
    if (w.get<std::int64_t>() < 0 || w.get<std::int64_t>() > 1000000)
      fail(ErrorKind::kStructure, "weight of '" + v + "' must be a nonnegative integer");
    weights[v] = w.get<int>();
  }
  TreeDocument doc;
  doc.base = WeightedTree::build(root, parents, weights);
  if (auto it = j.find("levels"); it != j.end()) {
    if (!it->is_object()) fail(ErrorKind::kParse, "field \"levels\" must be an object");
    std::map<std::string, Rational> levels;
    for (const auto& [v, l] : it->items()) levels[v] = as_level(l, v);
    doc.tree = LevelTree::build(root, parents, weights, levels);
  }
  if (auto it = j.find("special"); it != j.end()) {
    if (!it->is_object()) fail(ErrorKind::kParse, "field \"special\" must be an object");
    for (const auto& [lv, v] : it->items()) doc.special[lv] = as_id(v, "special vertex");
  }
  return doc;
}

TreeDocument parse_tree_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::kParse, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return tree_document_from_json(j);
}

TreeDocument load_tree_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kParse, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_tree_document(ss.str());
  } catch (const Error& e) {
    fail(e.kind(), path + ": " + e.what());
  }
}

Json to_json(const WeightedTree& w) {
  const RootedTree& tr = w.tree;
  Json j;
  j["root"] = tr.name(tr.root());
  j["parents"] = Json::object();
  j["weights"] = Json::object();
  for (Vertex v = 0; v < tr.size(); ++v) {
    if (v != tr.root()) j["parents"][tr.name(v)] = tr.name(tr.parent(v));
    j["weights"][tr.name(v)] = w.weight[v];
  }
  return j;
}

Json to_json(const LevelTree& t) {
  Json j = to_json(t.base());
  j["levels"] = Json::object();
  for (Vertex v = 0; v < t.tree().size(); ++v) j["levels"][t.tree().name(v)] = to_string(t.level(v));
  return j;
}

SpecialChoice special_for(const TreeDocument& doc, const std::string& override_spec) {
  const LevelTree& t = doc.level_tree();
  std::string spec;
  for (const auto& [lv, v] : doc.special) spec += lv + ":" + v + ",";
  return parse_special(t, spec + override_spec);
}

IndexSubset parse_index_subset(const LevelTree& t, const std::string& levels,
                               const std::string& edges) {
  IndexSubset I;
  for (const auto& l : split_csv(levels)) I.levels.insert(parse_rational(l));
  for (const auto& e : split_csv(edges)) I.edges.insert(e);
  t.mask(I);  // validates membership
  return I;
}

Json to_json(const IndexSubset& I) {
  Json j;
  j["levels"] = Json::array();
  for (auto it = I.levels.rbegin(); it != I.levels.rend(); ++it) j["levels"].push_back(to_string(*it));
  j["edges"] = Json(std::vector<std::string>(I.edges.begin(), I.edges.end()));
  return j;
}

Json to_json(const MonomialMap& g) {
  Json j = Json::object();
  for (const auto& [s, m] : g.assignment()) j[s.str()] = m.str();
  return j;
}

std::string to_dot(const LevelTree& t) {
  const RootedTree& tr = t.tree();
  std::ostringstream os;
  os << "digraph leveltree {\n"
     << "  rankdir=TB;\n  ranksep=0.4;\n"
     << "  node [shape=circle, width=0.15, fixedsize=true, label=\"\"];\n"
     << "  edge [arrowhead=none];\n";
  const auto& occ = t.occupied();
  for (std::size_t k = 0; k < occ.size(); ++k) {
    std::string label = to_string(occ[k]);
    if (t.has_level_data() && static_cast<int>(k) == t.m_index()) label += "  (m)";
    os << "  subgraph level_" << k << " {\n    rank=same;\n"
       << "    rail_" << k << "_l [shape=plaintext, width=0.6, label=" << quoted(label) << "];\n";
    for (Vertex v : tr.preorder())
      if (t.level_index(v) == static_cast<int>(k))
        os << "    " << quoted(tr.name(v)) << " [xlabel=" << quoted(tr.name(v))
           << (t.weight(v) > 0 ? ", style=filled, fillcolor=black" : "") << "];\n";
    os << "    rail_" << k << "_r [shape=point, width=0.01];\n  }\n";
    os << "  rail_" << k << "_l -> rail_" << k << "_r [style=dotted, constraint=false];\n";
    if (k > 0) os << "  rail_" << k - 1 << "_l -> rail_" << k << "_l [style=invis];\n";
  }
  for (Edge e : tr.edges()) {
    os << "  " << quoted(tr.name(tr.parent(e))) << " -> " << quoted(tr.name(e));
    if (t.has_level_data() && t.is_hat(e)) os << " [penwidth=2]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const WeightedTree& w) {
  const RootedTree& tr = w.tree;
  std::ostringstream os;
  os << "digraph weighted_tree {\n  node [shape=circle, width=0.15, fixedsize=true, label=\"\"];\n"
     << "  edge [arrowhead=none];\n";
  for (Vertex v : tr.preorder())
    os << "  " << quoted(tr.name(v)) << " [xlabel=" << quoted(tr.name(v) + ":" + std::to_string(w.weight[v]))
       << (w.weight[v] > 0 ? ", style=filled, fillcolor=black" : "") << "];\n";
  for (Edge e : tr.edges()) os << "  " << quoted(tr.name(tr.parent(e))) << " -> " << quoted(tr.name(e)) << ";\n";
  os << "}\n";
  return os.str();
}

std::string render_tree(const LevelTree& t) {
  const RootedTree& tr = t.tree();
  std::ostringstream os;
  os << "vertex  parent  weight  level\n";
  for (Vertex v : tr.preorder())
    os << std::left << std::setw(8) << tr.name(v) << std::setw(8)
       << (v == tr.root() ? "-" : tr.name(tr.parent(v))) << std::setw(8) << t.weight(v)
       << to_string(t.level(v)) << "\n";
  return os.str();
}

std::string render_indices(const LevelTree& t, const SpecialChoice& s) {
  const RootedTree& tr = t.tree();
  std::ostringstream os;
  os << "m = " << to_string(t.m()) << "\n";
  const IndexPartition p = t.index_partition();
  std::vector<std::string> plus;
  for (const auto& l : p.plus) plus.push_back(to_string(l));
  os << "I+ = " << set_str(plus) << "\nIm = " << set_str(p.m) << "\nI- = " << set_str(p.minus)
     << "\n\nedge  v+  v-  hat  l(e)  part\n";
  for (Edge e : tr.edges()) {
    os << std::left << std::setw(6) << tr.name(e) << std::setw(4) << tr.name(tr.parent(e))
       << std::setw(4) << tr.name(e) << std::setw(5) << (t.is_hat(e) ? "yes" : "no")
       << std::setw(6) << (t.is_hat(e) ? to_string(t.edge_level(e)) : "-")
       << (t.in_m(e) ? "Im" : t.in_minus(e) ? "I-" : "E") << "\n";
  }
  if (t.m_index() > 0) os << "\nlevel  successor  special  ascent  E_i\n";
  for (int k = 1; k <= t.m_index(); ++k) {
    const Rational& i = t.occupied()[k];
    std::string ascent;
    for (const auto& a : ascent_sequence(t, s, i)) ascent += (ascent.empty() ? "" : ",") + to_string(a);
    os << std::left << std::setw(7) << to_string(i) << std::setw(11)
       << to_string(t.level_successor(i)) << std::setw(9) << tr.name(s.vertex[k]) << std::setw(8)
       << ascent << edge_names(tr, t.cross_section_at(k)) << "\n";
  }
  return os.str();
}

std::string instance_id(const LevelTree& t) {
  const RootedTree& tr = t.tree();
  std::string out;
  for (Vertex v : tr.preorder()) {
    if (!out.empty()) out += ' ';
    out += tr.name(v);
    if (v != tr.root()) out += "<" + tr.name(tr.parent(v));
    out += ":" + std::to_string(t.weight(v)) + "@" + to_string(t.level(v));
  }
  return out;
}

}  // namespace leveltree
