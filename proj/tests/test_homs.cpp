#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdint>
#include <random>

#include "doctest.h"
#include "homdist/graph.hpp"
#include "homdist/hom_props.hpp"
#include "homdist/hom_search.hpp"
#include "homdist/vertex_map.hpp"
#include "test_util.hpp"

using namespace homdist;

namespace {

// Independent oracle: check all |V(h)|^|V(g)| maps directly.
std::uint64_t naive_hom_count(const Graph& g, const Graph& h) {
  const int n = g.order(), k = h.order();
  if (n == 0) return 1;
  if (k == 0) return 0;
  VertexImage f(n, 0);
  std::uint64_t count = 0;
  while (true) {
    if (is_homomorphism(g, h, f)) ++count;
    int v = n - 1;
    while (v >= 0 && f[v] == k - 1) f[v--] = 0;
    if (v < 0) break;
    ++f[v];
  }
  return count;
}

// Independent oracle: closed walks of length n in h equal hom counts from
// the n-cycle, via the trace of the n-th adjacency-matrix power.
std::uint64_t trace_power(const Graph& h, int n) {
  const int k = h.order();
  std::vector<std::uint64_t> m(k * k, 0), acc(k * k, 0);
  for (int i = 0; i < k; ++i) acc[i * k + i] = 1;
  for (auto [u, v] : h.edges()) m[u * k + v] = m[v * k + u] = 1;
  for (int step = 0; step < n; ++step) {
    std::vector<std::uint64_t> next(k * k, 0);
    for (int i = 0; i < k; ++i)
      for (int l = 0; l < k; ++l) {
        if (acc[i * k + l] == 0) continue;
        for (int j = 0; j < k; ++j)
          next[i * k + j] += acc[i * k + l] * m[l * k + j];
      }
    acc = std::move(next);
  }
  std::uint64_t trace = 0;
  for (int i = 0; i < k; ++i) trace += acc[i * k + i];
  return trace;
}

}  // namespace

TEST_CASE("is_homomorphism basics") {
  const Graph c5 = make_cycle(5);
  CHECK(is_homomorphism(c5, c5, {0, 1, 2, 3, 4}));

  const Graph k2 = make_complete(2);
  const auto violation =
      homomorphism_violation(make_cycle(3), k2, {0, 0, 0});
  REQUIRE(violation.has_value());
  CHECK(violation->u == 0);
  CHECK(violation->v == 1);
}

TEST_CASE("find_homomorphism") {
  const Graph c7 = make_cycle(7);
  const Graph c5 = make_cycle(5);
  auto f = find_homomorphism(c7, c5);
  REQUIRE(f.has_value());
  CHECK(is_homomorphism(c7, c5, *f));

  CHECK_FALSE(find_homomorphism(c5, make_complete(2)).has_value());

  auto bip = find_homomorphism(make_cycle(4), make_complete(2));
  REQUIRE(bip.has_value());
  CHECK(is_homomorphism(make_cycle(4), make_complete(2), *bip));
}

TEST_CASE("enumeration is sound, complete, ordered") {
  const Graph c7 = make_cycle(7);
  const Graph c5 = make_cycle(5);
  const auto maps = enumerate_homomorphisms(c7, c5);
  CHECK(maps.size() == 70);  // = tr(A_C5^7)
  CHECK(maps.size() == trace_power(c5, 7));
  for (const auto& f : maps) CHECK(is_homomorphism(c7, c5, f));
  CHECK(std::is_sorted(maps.begin(), maps.end()));
  CHECK(std::adjacent_find(maps.begin(), maps.end()) == maps.end());

  CHECK(enumerate_homomorphisms(make_cycle(4), make_complete(2)).size() == 2);
  CHECK(enumerate_homomorphisms(make_cycle(3), make_complete(2)).empty());
}

TEST_CASE("enumeration count equals the naive census") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testutil::random_graph(rng, 2 + trial % 6, 0.45);
    const Graph h = testutil::random_graph(rng, 1 + trial % 5, 0.55);
    CHECK(count_homomorphisms(g, h) == naive_hom_count(g, h));
  }
}

TEST_CASE("cycle counts match the trace identity") {
  std::mt19937 rng(29);
  for (int n : {3, 4, 5, 6, 7}) {
    for (int trial = 0; trial < 6; ++trial) {
      const Graph h = testutil::random_graph(rng, 2 + trial % 4, 0.6);
      CHECK(count_homomorphisms(make_cycle(n), h) == trace_power(h, n));
    }
  }
}

TEST_CASE("composition") {
  const Graph c4 = make_cycle(4);
  const Graph k2 = make_complete(2);
  const VertexImage bip{0, 1, 0, 1};
  CHECK(compose(bip, {0, 1}) == bip);
  CHECK(compose(bip, {1, 0}) == VertexImage{1, 0, 1, 0});

  std::mt19937 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = testutil::random_graph(rng, 2 + trial % 5, 0.4);
    const Graph h = testutil::random_graph(rng, 2 + trial % 4, 0.6);
    const Graph l = testutil::random_graph(rng, 2 + (trial / 2) % 4, 0.6);
    for (const auto& f : enumerate_homomorphisms(g, h)) {
      for (const auto& s : enumerate_homomorphisms(h, l)) {
        CHECK(is_homomorphism(g, l, compose(f, s)));
        break;  // one second-leg map per f keeps the trial cheap
      }
      break;
    }
  }
}

TEST_CASE("fibres and restriction") {
  const Graph c5 = make_cycle(5);
  const Graph k2 = make_complete(2);
  const auto cells = fibre_partition(k2, {0, 1, 0, 1});
  CHECK(cells[0] == std::vector<int>{0, 2});
  CHECK(cells[1] == std::vector<int>{1, 3});

  const VertexImage id{0, 1, 2, 3, 4};
  const auto r = restrict_map(id, VertexSubset(c5, {0, 1}));
  CHECK(r == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
  CHECK(restrict_map(id, VertexSubset(c5, {})).empty());
  CHECK(restrict_map(id, VertexSubset(c5, {0, 1, 2, 3, 4})).size() == 5);
}

TEST_CASE("vertex map JSON") {
  const VertexImage f{0, 1, 0};
  CHECK(parse_vertex_map(emit_vertex_map(f)) == f);
}

TEST_CASE("cores") {
  CHECK(is_core(make_cycle(5)));
  CHECK(is_core(make_complete(3)));
  CHECK_FALSE(is_core(make_path(2)));  // folds onto an edge
}

TEST_CASE("unique h-colourability") {
  const Graph k2 = make_complete(2);
  CHECK(is_uniquely_h_colourable(make_path(3), k2));
  CHECK_FALSE(is_uniquely_h_colourable(
      disjoint_union(make_complete(2), make_complete(2)), k2));
  CHECK(is_uniquely_h_colourable(make_cycle(5), make_cycle(5)));
}

TEST_CASE("fixation of C7 by a C5-colouring") {
  const Graph c7 = make_cycle(7);
  const Graph c5 = make_cycle(5);
  const auto f = find_homomorphism(c7, c5);
  REQUIRE(f.has_value());
  const auto fix = fixation(c7, *f, c5);
  CHECK(fix.graph.order() == 12);
  CHECK(fix.graph.edge_count() == 7 + 5 + 14);  // every C5 vertex has degree 2
  CHECK(is_homomorphism(fix.graph, c5, fix.canonical_map));
  CHECK(is_uniquely_h_colourable(fix.graph, c5));
}

TEST_CASE("fixation edge formula and degenerate case") {
  std::mt19937 rng(37);
  const Graph k3 = make_complete(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testutil::random_graph(rng, 1 + trial % 6, 0.35);
    const auto f = find_homomorphism(g, k3);
    REQUIRE(f.has_value());
    const auto fix = fixation(g, *f, k3);
    std::size_t cross = 0;
    for (int x = 0; x < g.order(); ++x) cross += k3.degree((*f)[x]);
    CHECK(fix.graph.edge_count() == g.edge_count() + k3.edge_count() + cross);
    CHECK(is_homomorphism(fix.graph, k3, fix.canonical_map));
  }

  const auto degenerate = fixation(make_empty(0), {}, k3);
  CHECK(degenerate.graph == k3);

  CHECK_THROWS_AS(fixation(make_cycle(3), {0, 0, 0}, make_complete(2)),
                  std::invalid_argument);
}
