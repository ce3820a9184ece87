#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "homdist/errors.hpp"
#include "homdist/graph.hpp"
#include "homdist/graph_io.hpp"
#include "test_util.hpp"

using namespace homdist;

TEST_CASE("constructors produce the standard graphs") {
  const Graph c5 = make_cycle(5);
  CHECK(c5.order() == 5);
  CHECK(c5.edge_count() == 5);
  std::size_t directed_entries = 0;
  for (int v = 0; v < 5; ++v) {
    CHECK(c5.degree(v) == 2);
    directed_entries += c5.neighbours(v).size();
  }
  CHECK(directed_entries == 10);

  const Graph k2 = make_complete(2);
  CHECK(k2.order() == 2);
  CHECK(k2.adjacent(0, 1));

  const Graph p0 = make_path(0);
  CHECK(p0.order() == 1);
  CHECK(p0.edge_count() == 0);

  CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
}

TEST_CASE("graph invariants") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), std::invalid_argument);
  // duplicate edges collapse under programmatic construction
  const Graph g = Graph::from_edges(2, {{0, 1}, {1, 0}});
  CHECK(g.edge_count() == 1);
}

TEST_CASE("join counts and ids") {
  const Graph k4 = join(make_complete(2), make_complete(2));
  CHECK(k4.order() == 4);
  CHECK(k4.edge_count() == 6);

  const Graph j = join(make_cycle(5), make_complete(2));
  CHECK(j.order() == 7);
  CHECK(j.edge_count() == 5 + 1 + 10);
  // second operand relabelled by offset 5
  CHECK(j.adjacent(5, 6));

  CHECK(join(make_empty(1), make_empty(1)) == make_complete(2));
}

TEST_CASE("disjoint union") {
  const Graph two_k2 = disjoint_union(make_complete(2), make_complete(2));
  CHECK(two_k2.order() == 4);
  CHECK(two_k2.edge_count() == 2);
  CHECK_FALSE(two_k2.adjacent(0, 2));

  const Graph g = disjoint_union(make_cycle(3), make_path(1));
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 4);

  const Graph c5 = make_cycle(5);
  CHECK(disjoint_union(c5, make_empty(0)) == c5);
}

TEST_CASE("join edge-count formula on random instances") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph a = testutil::random_graph(rng, 1 + trial % 6, 0.4);
    const Graph b = testutil::random_graph(rng, 1 + (trial / 3) % 5, 0.5);
    const Graph j = join(a, b);
    CHECK(j.edge_count() == a.edge_count() + b.edge_count() +
                                static_cast<std::size_t>(a.order()) *
                                    b.order());
    // symmetry and irreflexivity survive the combinators
    for (int u = 0; u < j.order(); ++u) {
      CHECK_FALSE(j.adjacent(u, u));
      for (int v : j.neighbours(u)) CHECK(j.adjacent(v, u));
    }
  }
}

TEST_CASE("induced subgraphs") {
  const Graph c5 = make_cycle(5);
  const auto sub = induced_subgraph(c5, VertexSubset(c5, {0, 1, 2}));
  CHECK(sub.graph.order() == 3);
  CHECK(sub.graph.edge_count() == 2);  // path of length 2
  CHECK(sub.old_ids == std::vector<int>{0, 1, 2});

  std::vector<int> all{0, 1, 2, 3, 4};
  const auto full = induced_subgraph(c5, VertexSubset(c5, all));
  CHECK(full.graph == c5);

  const Graph k4 = make_complete(4);
  const auto k2 = induced_subgraph(k4, VertexSubset(k4, {0, 2}));
  CHECK(k2.graph == make_complete(2));

  CHECK_THROWS_AS(VertexSubset(c5, {0, 9}), std::invalid_argument);
}

TEST_CASE("graph JSON round trip") {
  CHECK(parse_graph(R"({"n":2,"edges":[[0,1]]})") == make_complete(2));

  CHECK_THROWS_AS(parse_graph(R"({"n":1,"edges":[[0,0]]})"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"n":3,"edges":[[2,1]]})"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"n":3,"edges":[[0,1],[0,1]]})"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[[0,5]]})"), ParseError);
  CHECK_THROWS_AS(parse_graph("not json"), ParseError);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testutil::random_graph(rng, trial % 9, 0.4);
    const std::string bytes = emit_graph_json(g);
    CHECK(parse_graph(bytes) == g);
    CHECK(emit_graph_json(parse_graph(bytes)) == bytes);
  }

  const Graph named = make_path(1).with_names({"a", "b"});
  CHECK(parse_graph(emit_graph_json(named)).names() == named.names());
}

TEST_CASE("DOT emission") {
  const std::string dot = emit_graph_dot(make_cycle(5));
  CHECK(dot ==
        "graph G {\n  0;\n  1;\n  2;\n  3;\n  4;\n"
        "  0 -- 1;\n  0 -- 4;\n  1 -- 2;\n  2 -- 3;\n  3 -- 4;\n}\n");
}

TEST_CASE("connectivity") {
  CHECK(is_connected(make_cycle(4)));
  CHECK(is_connected(make_empty(0)));
  CHECK_FALSE(is_connected(make_empty(2)));
  CHECK_FALSE(is_connected(disjoint_union(make_complete(2), make_complete(2))));
}
