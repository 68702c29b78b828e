#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "leveltree/errors.hpp"
#include "leveltree/tree.hpp"

using namespace leveltree;

namespace {

std::vector<std::string> names(const RootedTree& g, const std::vector<Edge>& es) {
  std::vector<std::string> out;
  for (Edge e : es) out.push_back(g.name(e));
  return out;
}

// v lies on the root path of w, by walking parents.
bool on_path(const RootedTree& g, Vertex v, Vertex w) {
  for (Vertex u = w;; u = g.parent(u)) {
    if (u == v) return true;
    if (u == g.root()) return false;
  }
}

}  // namespace

TEST_CASE("endpoints name the parent and the child") {
  const RootedTree g1 = fixture::fig1().tree();
  CHECK(g1.endpoints(g1.edge("v1")) == std::pair{g1.vertex("o"), g1.vertex("v1")});
  const RootedTree g2 = fixture::fig2().tree();
  CHECK(g2.endpoints(g2.edge("b")) == std::pair{g2.vertex("o"), g2.vertex("b")});
  for (Edge e : g1.edges()) {
    auto [up, down] = g1.endpoints(e);
    CHECK(g1.compare_vertices(up, down) == Order::kGreater);
  }
  CHECK_THROWS_AS(g1.edge("o"), Error);
  CHECK_THROWS_AS(g1.edge("nope"), Error);
}

TEST_CASE("vertex order on the first figure") {
  const RootedTree g = fixture::fig1().tree();
  CHECK(g.compare_vertices(g.vertex("o"), g.vertex("v3")) == Order::kGreater);
  CHECK(g.compare_vertices(g.vertex("v3"), g.vertex("o")) == Order::kLess);
  CHECK(g.compare_vertices(g.vertex("v2"), g.vertex("v2")) == Order::kEqual);
  CHECK(g.compare_vertices(g.vertex("v1"), g.vertex("v2")) == Order::kIncomparable);
}

TEST_CASE("vertex order agrees with explicit path walks") {
  for (const auto& g : {fixture::fig1().tree(), fixture::fig2().tree()})
    for (Vertex v = 0; v < g.size(); ++v)
      for (Vertex w = 0; w < g.size(); ++w) {
        const bool vw = on_path(g, v, w), wv = on_path(g, w, v);
        const Order want = v == w ? Order::kEqual
                           : vw   ? Order::kGreater
                           : wv   ? Order::kLess
                                  : Order::kIncomparable;
        CHECK(g.compare_vertices(v, w) == want);
      }
}

TEST_CASE("edge order on the worked example") {
  const RootedTree g = fixture::fig2().tree();
  CHECK(g.compare_edges(g.edge("b"), g.edge("c")) == Order::kGreater);
  CHECK(g.compare_edges(g.edge("c"), g.edge("c")) == Order::kEqual);
  CHECK(g.compare_edges(g.edge("a"), g.edge("c")) == Order::kIncomparable);
  CHECK(g.compare_edges(g.edge("c"), g.edge("d")) == Order::kIncomparable);
}

TEST_CASE("edge order is v_e^- above v_f^+, checked against vertex order") {
  const RootedTree g = fixture::fig1().tree();
  for (Edge e : g.edges())
    for (Edge f : g.edges()) {
      const bool gt = e != f && on_path(g, e, g.parent(f));
      CHECK(g.edge_gt(e, f) == gt);
    }
}

TEST_CASE("edges at or above a given edge") {
  const RootedTree g2 = fixture::fig2().tree();
  auto d = names(g2, g2.descendants_geq(g2.edge("c")));
  std::sort(d.begin(), d.end());
  CHECK(d == std::vector<std::string>{"b", "c"});
  CHECK(names(g2, g2.descendants_geq(g2.edge("a"))) == std::vector<std::string>{"a"});

  const RootedTree g1 = fixture::fig1().tree();
  CHECK(names(g1, g1.descendants_geq(g1.edge("v3"))) == std::vector<std::string>{"v3", "w2", "v1"});
  // Oracle: every edge on the path from the edge up to the root.
  for (Edge e : g1.edges()) {
    std::vector<std::string> walk;
    for (Vertex u = e; u != g1.root(); u = g1.parent(u)) walk.push_back(g1.name(u));
    CHECK(names(g1, g1.descendants_geq(e)) == walk);
  }
}

TEST_CASE("malformed parent maps are rejected") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kVerification;
  };
  CHECK(kind_of([] { RootedTree::from_parents("o", {{"a", "b"}, {"b", "a"}}); }) == ErrorKind::kStructure);
  CHECK(kind_of([] { RootedTree::from_parents("o", {{"a", "x"}}); }) == ErrorKind::kStructure);
  CHECK(kind_of([] { RootedTree::from_parents("o", {{"o", "a"}, {"a", "o"}}); }) == ErrorKind::kStructure);
  CHECK(kind_of([] { WeightedTree::build("o", {{"a", "o"}}, {{"o", 1}}); }) == ErrorKind::kStructure);
  CHECK(kind_of([] { WeightedTree::build("o", {{"a", "o"}}, {{"o", 1}, {"a", -1}}); }) ==
        ErrorKind::kStructure);
}

TEST_CASE("vertices are indexed by sorted id") {
  const RootedTree g = RootedTree::from_parents("r", {{"b", "r"}, {"a", "r"}});
  CHECK(g.names() == std::vector<std::string>{"a", "b", "r"});
  CHECK(g.root() == 2);
  CHECK(g.edge_count() == 2);
}
