#include "leveltree/enumerate.hpp"

#include <algorithm>
#include <set>

#include "leveltree/contraction.hpp"
#include "leveltree/errors.hpp"

namespace leveltree {

void validate(const EnumSpec& spec) {
  if (spec.max_edges < 0 || spec.max_weight < 0 || spec.max_levels < 0)
    fail(ErrorKind::kDomain, "enumeration bounds must be nonnegative");
  if (spec.max_edges > kMaxEnumEdges)
    fail(ErrorKind::kLimit, "max_edges " + std::to_string(spec.max_edges) + " exceeds the limit " +
                                std::to_string(kMaxEnumEdges));
}

namespace {

std::string code_of(const RootedTree& tr, const std::vector<int>& w, Vertex v) {
  std::vector<std::string> kids;
  for (Vertex c : tr.children(v)) kids.push_back(code_of(tr, w, c));
  std::sort(kids.begin(), kids.end());
  std::string out = std::to_string(w[v]) + "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

// Shape of a generated tree: weight and child shapes (indices into the pool).
struct Shape {
  int size;
  int weight;
  std::vector<int> kids;  // nonincreasing
  std::string code;
};

class Pool {
 public:
  Pool(const EnumSpec& spec) : spec_(spec) {
    by_size_.resize(spec.max_edges + 2);
    for (int n = 1; n <= spec.max_edges + 1; ++n) build(n);
  }

  const std::vector<Shape>& shapes() const { return shapes_; }

  // Trees with n vertices whose root is exempt from stability.
  std::vector<Shape> roots(int n) const {
    std::vector<Shape> out;
    for (int w = 0; w <= spec_.max_weight; ++w) {
      forests(n - 1, static_cast<int>(shapes_.size()), [&](const std::vector<int>& kids) {
        out.push_back(make(n, w, kids));
      });
    }
    std::sort(out.begin(), out.end(), [](const Shape& a, const Shape& b) { return a.code < b.code; });
    return out;
  }

  int total_weight(const Shape& s) const {
    int out = s.weight;
    for (int k : s.kids) out += total_weight(shapes_[k]);
    return out;
  }

 private:
  Shape make(int n, int w, const std::vector<int>& kids) const {
    std::vector<std::string> codes;
    for (int k : kids) codes.push_back(shapes_[k].code);
    std::sort(codes.begin(), codes.end());
    std::string code = std::to_string(w) + "(";
    for (const auto& c : codes) code += c;
    return Shape{n, w, kids, code + ")"};
  }

  // Multisets of pool shapes (indices < bound, nonincreasing) of total size n.
  template <class F>
  void forests(int n, int bound, F&& emit) const {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int hi) -> void {
      if (left == 0) {
        emit(cur);
        return;
      }
      for (int i = std::min(hi, bound - 1); i >= 0; --i) {
        if (shapes_[i].size > left) continue;
        cur.push_back(i);
        self(self, left - shapes_[i].size, i);
        cur.pop_back();
      }
    };
    rec(rec, n, bound - 1);
  }

  // Non-root shapes with n vertices, honouring stability.
  void build(int n) {
    const int bound = static_cast<int>(shapes_.size());
    std::vector<Shape> fresh;
    for (int w = 0; w <= spec_.max_weight; ++w) {
      forests(n - 1, bound, [&](const std::vector<int>& kids) {
        if (spec_.stable && w == 0 && kids.size() < 2) return;
        fresh.push_back(make(n, w, kids));
      });
    }
    std::sort(fresh.begin(), fresh.end(), [](const Shape& a, const Shape& b) { return a.code < b.code; });
    for (auto& s : fresh) shapes_.push_back(std::move(s));
  }

  EnumSpec spec_;
  std::vector<Shape> shapes_;
  std::vector<std::vector<int>> by_size_;
};

WeightedTree realize(const Pool& pool, const Shape& root) {
  std::map<std::string, std::string> parents;
  std::map<std::string, int> weights;
  int next = 1;
  weights["o"] = root.weight;
  // Children in code order so names follow a canonical preorder.
  auto place = [&](auto&& self, const Shape& s, const std::string& name) -> void {
    std::vector<const Shape*> kids;
    for (int k : s.kids) kids.push_back(&pool.shapes()[k]);
    std::stable_sort(kids.begin(), kids.end(),
                     [](const Shape* a, const Shape* b) { return a->code < b->code; });
    for (const Shape* k : kids) {
      std::string id = "v" + std::to_string(next++);
      parents[id] = name;
      weights[id] = k->weight;
      self(self, *k, id);
    }
  };
  place(place, root, "o");
  return WeightedTree::build("o", parents, weights);
}

}  // namespace

std::string tree_code(const WeightedTree& t) {
  return code_of(t.tree, t.weight, t.tree.root());
}

std::vector<WeightedTree> gen_weighted_trees(const EnumSpec& spec) {
  validate(spec);
  Pool pool(spec);
  std::vector<WeightedTree> out;
  for (int n = 1; n <= spec.max_edges + 1; ++n) {
    for (const Shape& s : pool.roots(n)) {
      if (spec.require_positive_weight && pool.total_weight(s) == 0) continue;
      out.push_back(realize(pool, s));
    }
  }
  return out;
}

std::vector<LevelTree> gen_level_trees(const WeightedTree& base, const EnumSpec& spec) {
  validate(spec);
  const RootedTree& tr = base.tree;
  const int n = tr.size();
  std::vector<LevelTree> out;
  if (!base.has_positive_weight()) return out;

  // rank[v] >= 0 places v at level -rank; -1 puts v below m.
  std::vector<int> rank(n, 0);
  const std::vector<Vertex>& order = tr.preorder();
  const int max_rank = std::max(0, spec.max_levels - 1);

  auto emit = [&]() {
    int top = 0;
    for (Vertex v = 0; v < n; ++v) top = std::max(top, rank[v]);
    std::vector<char> used(top + 1, 0);
    bool weighted_at_top = false;
    for (Vertex v = 0; v < n; ++v) {
      if (rank[v] >= 0) used[rank[v]] = 1;
      if (base.weight[v] > 0) {
        if (rank[v] >= 0 && rank[v] < top) return;
        if (rank[v] == top) weighted_at_top = true;
      }
    }
    if (!weighted_at_top) return;
    for (char u : used)
      if (!u) return;
    std::vector<Rational> lv(n);
    for (Vertex v : order) {
      if (rank[v] >= 0)
        lv[v] = Rational(-rank[v]);
      else if (rank[tr.parent(v)] >= 0)
        lv[v] = Rational(-top - 1);
      else
        lv[v] = lv[tr.parent(v)] - 1;
    }
    LevelTree t(base, std::move(lv));
    if (static_cast<int>(t.occupied().size()) > spec.max_levels) return;
    out.push_back(std::move(t));
  };

  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      emit();
      return;
    }
    const Vertex v = order[pos];
    const int pr = rank[tr.parent(v)];
    if (pr >= 0) {
      for (int r = pr + 1; r <= max_rank; ++r) {
        rank[v] = r;
        self(self, pos + 1);
      }
    }
    rank[v] = -1;
    self(self, pos + 1);
  };
  if (n == 1) {
    if (spec.max_levels >= 1) emit();
    return out;
  }
  rank[tr.root()] = 0;
  rec(rec, 1);  // preorder()[0] is the root
  return out;
}

void for_each_level_tree(const EnumSpec& spec, const std::function<void(const LevelTree&)>& fn) {
  for (const WeightedTree& w : gen_weighted_trees(spec))
    for (const LevelTree& t : gen_level_trees(w, spec)) fn(t);
}

int StrataPoset::find(const LevelTree& t) const {
  const EquivKey key = equivalence_key(t);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (equivalence_key(nodes[i]) == key) return static_cast<int>(i);
  return -1;
}

namespace {

void close_under_contraction(StrataPoset& p, std::map<EquivKey, int>& index, std::size_t start) {
  for (std::size_t a = start; a < p.nodes.size(); ++a) {
    const LevelTree t = p.nodes[a];
    std::set<int> targets;
    for (const IndexSubset& I : t.all_index_subsets()) {
      if (I.empty()) continue;
      LevelTree s = canonical_form(contract(t, I).tree);
      EquivKey key = equivalence_key(s);
      auto it = index.find(key);
      int b;
      if (it == index.end()) {
        b = static_cast<int>(p.nodes.size());
        index.emplace(std::move(key), b);
        p.nodes.push_back(std::move(s));
        p.arrows.emplace_back();
      } else {
        b = it->second;
      }
      targets.insert(b);
    }
    p.arrows[a].assign(targets.begin(), targets.end());
  }
}

}  // namespace

StrataPoset strata_poset(const LevelTree& t) {
  StrataPoset p;
  std::map<EquivKey, int> index;
  LevelTree c = canonical_form(t);
  index.emplace(equivalence_key(c), 0);
  p.nodes.push_back(std::move(c));
  p.arrows.emplace_back();
  close_under_contraction(p, index, 0);
  return p;
}

StrataPoset strata_poset(const WeightedTree& base, const EnumSpec& spec) {
  StrataPoset p;
  std::map<EquivKey, int> index;
  for (const LevelTree& t : gen_level_trees(base, spec)) {
    EquivKey key = equivalence_key(t);
    if (index.count(key)) continue;
    index.emplace(std::move(key), static_cast<int>(p.nodes.size()));
    p.nodes.push_back(t);
    p.arrows.emplace_back();
  }
  close_under_contraction(p, index, 0);
  return p;
}

}  // namespace leveltree
