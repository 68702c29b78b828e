#include "leveltree/level_tree.hpp"

#include <algorithm>
#include <sstream>

#include "leveltree/errors.hpp"

namespace leveltree {

std::string to_string(const IndexSubset& I) {
  std::string out = "{";
  bool first = true;
  for (auto it = I.levels.rbegin(); it != I.levels.rend(); ++it) {
    out += (first ? "" : ",") + to_string(*it);
    first = false;
  }
  for (const auto& e : I.edges) {
    out += (first ? "" : ",") + e;
    first = false;
  }
  return out + "}";
}

LevelTree::LevelTree()
    : LevelTree(WeightedTree(RootedTree(), {1}), {Rational(0)}) {}

LevelTree::LevelTree(WeightedTree base, std::vector<Rational> level)
    : base_(std::move(base)), level_(std::move(level)) {
  const RootedTree& t = base_.tree;
  const int n = t.size();
  if (static_cast<int>(level_.size()) != n)
    fail(ErrorKind::kInvalidLevel, "level map does not cover every vertex");
  if (level_[t.root()] != Rational(0))
    fail(ErrorKind::kInvalidLevel, "root '" + t.name(t.root()) + "' must sit at level 0");
  for (Vertex v : t.edges()) {
    if (level_[v] >= Rational(0))
      fail(ErrorKind::kInvalidLevel,
           "only the root may sit at level 0; '" + t.name(v) + "' is at " + to_string(level_[v]));
    if (level_[t.parent(v)] <= level_[v])
      fail(ErrorKind::kInvalidLevel, "level must drop from '" + t.name(t.parent(v)) + "' to '" +
                                         t.name(v) + "'");
  }
  occupied_ = level_;
  std::sort(occupied_.begin(), occupied_.end(), [](const Rational& a, const Rational& b) { return a > b; });
  occupied_.erase(std::unique(occupied_.begin(), occupied_.end()), occupied_.end());
  lvl_idx_.resize(n);
  for (Vertex v = 0; v < n; ++v) lvl_idx_[v] = occupied_index(level_[v]);

  edge_lvl_.assign(n, -1);
  int best = -1;
  for (Vertex v = 0; v < n; ++v)
    if (base_.weight[v] > 0 && (best < 0 || lvl_idx_[v] < best)) best = lvl_idx_[v];
  m_idx_ = best;
  if (m_idx_ < 0) return;
  for (Vertex e : t.edges())
    if (lvl_idx_[t.parent(e)] < m_idx_) edge_lvl_[e] = std::min(lvl_idx_[e], m_idx_);
}

LevelTree LevelTree::build(const std::string& root,
                           const std::map<std::string, std::string>& parents,
                           const std::map<std::string, int>& weights,
                           const std::map<std::string, Rational>& levels) {
  WeightedTree base = WeightedTree::build(root, parents, weights);
  std::vector<Rational> lv(base.tree.size());
  std::vector<char> seen(base.tree.size(), 0);
  for (const auto& [id, value] : levels) {
    auto v = base.tree.find(id);
    if (!v) fail(ErrorKind::kStructure, "level given for unknown vertex '" + id + "'");
    lv[*v] = value;
    seen[*v] = 1;
  }
  for (Vertex v = 0; v < base.tree.size(); ++v)
    if (!seen[v]) fail(ErrorKind::kInvalidLevel, "missing level for '" + base.tree.name(v) + "'");
  return LevelTree(std::move(base), std::move(lv));
}

int LevelTree::occupied_index(const Rational& level) const {
  auto it = std::lower_bound(occupied_.begin(), occupied_.end(), level,
                             [](const Rational& a, const Rational& b) { return a > b; });
  if (it == occupied_.end() || *it != level) return -1;
  return static_cast<int>(it - occupied_.begin());
}

void LevelTree::require_data() const {
  if (m_idx_ < 0) fail(ErrorKind::kDomain, "no positively weighted vertex: m is undefined");
}

const Rational& LevelTree::m() const {
  require_data();
  return occupied_[m_idx_];
}

int LevelTree::m_index() const {
  require_data();
  return m_idx_;
}

std::vector<Rational> LevelTree::plus_levels() const {
  require_data();
  return {occupied_.begin() + 1, occupied_.begin() + m_idx_ + 1};
}

bool LevelTree::is_hat(Edge e) const {
  require_data();
  return edge_lvl_[e] >= 0;
}

bool LevelTree::in_m(Edge e) const { return is_hat(e) && lvl_idx_[e] > m_idx_; }

bool LevelTree::in_minus(Edge e) const { return !is_hat(e); }

int LevelTree::edge_level_index(Edge e) const {
  if (!is_hat(e)) fail(ErrorKind::kDomain, "l(e) is only defined on hat edges");
  return edge_lvl_[e];
}

const Rational& LevelTree::edge_level(Edge e) const { return occupied_[edge_level_index(e)]; }

std::vector<Edge> LevelTree::hat_edges() const {
  std::vector<Edge> out;
  for (Edge e : tree().edges())
    if (is_hat(e)) out.push_back(e);
  return out;
}

std::vector<Edge> LevelTree::im_edges() const {
  std::vector<Edge> out;
  for (Edge e : tree().edges())
    if (in_m(e)) out.push_back(e);
  return out;
}

std::vector<Edge> LevelTree::iminus_edges() const {
  std::vector<Edge> out;
  for (Edge e : tree().edges())
    if (in_minus(e)) out.push_back(e);
  return out;
}

std::vector<int> LevelTree::span_indices(Edge e) const {
  const int lo = edge_level_index(e);
  std::vector<int> out;
  for (int k = lvl_idx_[tree().parent(e)] + 1; k <= lo; ++k) out.push_back(k);
  return out;
}

std::vector<Edge> LevelTree::cross_section_at(int k) const {
  require_data();
  if (k < 1 || k > m_idx_) fail(ErrorKind::kDomain, "cross-section requested outside [m, 0)");
  std::vector<Edge> out;
  for (Edge e : tree().edges())
    if (edge_lvl_[e] >= k && lvl_idx_[tree().parent(e)] < k) out.push_back(e);
  return out;
}

std::vector<Edge> LevelTree::cross_section(const Rational& i) const {
  int k = occupied_index(i);
  if (k < 0) fail(ErrorKind::kDomain, "level " + to_string(i) + " is not occupied");
  return cross_section_at(k);
}

std::vector<Vertex> LevelTree::vertices_at(int k) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < tree().size(); ++v)
    if (lvl_idx_[v] == k) out.push_back(v);
  return out;
}

IndexPartition LevelTree::index_partition() const {
  IndexPartition p;
  p.plus = plus_levels();
  for (Edge e : im_edges()) p.m.push_back(tree().name(e));
  for (Edge e : iminus_edges()) p.minus.push_back(tree().name(e));
  return p;
}

Rational LevelTree::level_successor(const Rational& i) const {
  int k = occupied_index(i);
  if (k < 0) fail(ErrorKind::kDomain, "level " + to_string(i) + " is not occupied");
  if (k == 0) fail(ErrorKind::kDomain, "level 0 has no successor");
  return occupied_[k - 1];
}

IndexMask LevelTree::mask(const IndexSubset& I) const {
  require_data();
  IndexMask mk{std::vector<char>(occupied_.size(), 0), std::vector<char>(tree().size(), 0)};
  for (const Rational& i : I.levels) {
    int k = occupied_index(i);
    if (k < 1 || k > m_idx_)
      fail(ErrorKind::kDomain, "level " + to_string(i) + " is not in I+");
    mk.level[k] = 1;
  }
  for (const std::string& id : I.edges) {
    auto v = tree().find(id);
    if (!v || *v == tree().root() || !(in_m(*v) || in_minus(*v)))
      fail(ErrorKind::kDomain, "edge '" + id + "' is not in Im or I-");
    mk.edge[*v] = 1;
  }
  return mk;
}

std::vector<IndexSubset> LevelTree::all_index_subsets() const {
  IndexPartition p = index_partition();
  const std::size_t n = p.size();
  if (n > 24) fail(ErrorKind::kLimit, "index set too large to enumerate all subsets");
  std::vector<IndexSubset> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    IndexSubset I;
    std::size_t b = 0;
    for (const auto& l : p.plus)
      if (bits >> b++ & 1) I.levels.insert(l);
    for (const auto& e : p.m)
      if (bits >> b++ & 1) I.edges.insert(e);
    for (const auto& e : p.minus)
      if (bits >> b++ & 1) I.edges.insert(e);
    out.push_back(std::move(I));
  }
  return out;
}

SpecialChoice default_special(const LevelTree& t) {
  SpecialChoice s;
  s.vertex.assign(t.m_index() + 1, kNoVertex);
  for (int k = 1; k <= t.m_index(); ++k) s.vertex[k] = t.vertices_at(k).front();
  return s;
}

std::vector<SpecialChoice> all_special_choices(const LevelTree& t) {
  std::vector<std::vector<Vertex>> options(t.m_index() + 1);
  for (int k = 1; k <= t.m_index(); ++k) options[k] = t.vertices_at(k);
  std::vector<SpecialChoice> out;
  SpecialChoice cur;
  cur.vertex.assign(t.m_index() + 1, kNoVertex);
  auto rec = [&](auto&& self, int k) -> void {
    if (k > t.m_index()) {
      out.push_back(cur);
      return;
    }
    for (Vertex v : options[k]) {
      cur.vertex[k] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 1);
  return out;
}

void validate_special(const LevelTree& t, const SpecialChoice& s) {
  if (static_cast<int>(s.vertex.size()) != t.m_index() + 1)
    fail(ErrorKind::kDomain, "special choice must name one vertex per level of I+");
  for (int k = 1; k <= t.m_index(); ++k) {
    Vertex v = s.vertex[k];
    if (v < 0 || v >= t.tree().size() || t.level_index(v) != k)
      fail(ErrorKind::kDomain, "special vertex for level " + to_string(t.occupied()[k]) +
                                   " does not sit at that level");
  }
}

SpecialChoice parse_special(const LevelTree& t, const std::string& spec) {
  SpecialChoice s = default_special(t);
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.rfind(':');
    if (colon == std::string::npos)
      fail(ErrorKind::kParse, "special entry '" + item + "' is not of the form level:vertex");
    Rational lv = parse_rational(item.substr(0, colon));
    int k = t.occupied_index(lv);
    if (k < 1 || k > t.m_index())
      fail(ErrorKind::kDomain, "special entry '" + item + "' names a level outside I+");
    s.vertex[k] = t.tree().vertex(item.substr(colon + 1));
  }
  validate_special(t, s);
  return s;
}

std::vector<int> ascent_indices(const LevelTree& t, const SpecialChoice& s, int k) {
  std::vector<int> out{k};
  while (k != 0) {
    k = t.level_index(t.tree().parent(s.vertex[k]));
    out.push_back(k);
  }
  return out;
}

std::vector<Rational> ascent_sequence(const LevelTree& t, const SpecialChoice& s,
                                      const Rational& i) {
  validate_special(t, s);
  int k = t.occupied_index(i);
  if (k < 1 || k > t.m_index()) fail(ErrorKind::kDomain, "ascent sequence needs a level of I+");
  std::vector<Rational> out;
  for (int h : ascent_indices(t, s, k)) out.push_back(t.occupied()[h]);
  return out;
}

bool EquivKey::operator<(const EquivKey& o) const {
  const RootedTree& a = base.tree;
  const RootedTree& b = o.base.tree;
  if (a.names() != b.names()) return a.names() < b.names();
  for (Vertex v = 0; v < a.size(); ++v)
    if (a.parent(v) != b.parent(v)) return a.parent(v) < b.parent(v);
  if (a.root() != b.root()) return a.root() < b.root();
  if (base.weight != o.base.weight) return base.weight < o.base.weight;
  return rank < o.rank;
}

EquivKey equivalence_key(const LevelTree& t) {
  EquivKey key{t.base(), std::vector<int>(t.tree().size())};
  const int cut = t.has_level_data() ? t.m_index() : static_cast<int>(t.occupied().size());
  for (Vertex v = 0; v < t.tree().size(); ++v)
    key.rank[v] = t.level_index(v) <= cut ? t.level_index(v) : -1;
  return key;
}

bool is_equivalent(const LevelTree& t, const LevelTree& t2) {
  if (!(t.base() == t2.base())) return false;
  const int n = t.tree().size();
  const bool bounded = t.has_level_data();
  for (Vertex v = 0; v < n; ++v) {
    if (bounded && t.level(v) < t.m()) continue;
    for (Vertex w = 0; w < n; ++w) {
      if (t.level(v) == t.level(w) && t2.level(v) != t2.level(w)) return false;
      if (t.level(v) > t.level(w) && !(t2.level(v) > t2.level(w))) return false;
    }
  }
  return true;
}

LevelTree canonical_form(const LevelTree& t) {
  const RootedTree& tr = t.tree();
  const int cut = t.has_level_data() ? t.m_index() : static_cast<int>(t.occupied().size());
  std::vector<Rational> lv(tr.size());
  for (Vertex v : tr.preorder()) {
    if (t.level_index(v) <= cut)
      lv[v] = Rational(-t.level_index(v));
    else if (t.level_index(tr.parent(v)) <= cut)
      lv[v] = Rational(-cut - 1);
    else
      lv[v] = lv[tr.parent(v)] - 1;
  }
  return LevelTree(t.base(), std::move(lv));
}

IndexSubset phi_bijection(const LevelTree& t, const LevelTree& t2, const IndexSubset& I) {
  if (!is_equivalent(t, t2)) fail(ErrorKind::kDomain, "phi_bijection needs equivalent trees");
  t.mask(I);  // validates I
  IndexSubset out;
  out.edges = I.edges;
  for (const Rational& i : I.levels) {
    Vertex v = t.vertices_at(t.occupied_index(i)).front();
    out.levels.insert(t2.level(v));
  }
  return out;
}

}  // namespace leveltree
