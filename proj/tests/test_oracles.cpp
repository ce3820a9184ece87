#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "homdist/cec_check.hpp"
#include "homdist/errors.hpp"
#include "homdist/oracle.hpp"
#include "homdist/oracle_search.hpp"

using namespace homdist;

namespace {

const WitnessBudget kBudget{1'000'000};

void check_sound_on_samples(const GraphOracle& o, int samples) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<OracleVertex> pick(0, 1 << 20);
  for (int i = 0; i < samples; ++i) {
    const OracleVertex u = pick(rng), v = pick(rng);
    CHECK_FALSE(o.adjacent(u, u));
    CHECK(o.adjacent(u, v) == o.adjacent(v, u));
    if (o.has_colours() && o.adjacent(u, v))
      CHECK(o.colour_target()->adjacent(o.colour(u), o.colour(v)));
  }
}

}  // namespace

TEST_CASE("rado BIT adjacency") {
  const auto rado = GraphOracle::rado();
  CHECK(rado.adjacent(0, 1));        // bit 0 of 1
  CHECK_FALSE(rado.adjacent(0, 2));  // bit 0 of 2
  CHECK_FALSE(rado.adjacent(1, 5));  // bit 1 of 5
  CHECK(rado.adjacent(2, 5));        // bit 2 of 5
  check_sound_on_samples(rado, 10'000);
  CHECK_FALSE(rado.has_colours());
}

TEST_CASE("random bipartite oracle") {
  const auto bip = GraphOracle::random_bipartite(42);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<OracleVertex> pick(0, 1 << 20);
  for (int i = 0; i < 10'000; ++i) {
    const OracleVertex u = pick(rng), v = pick(rng);
    if (u % 2 == v % 2) CHECK_FALSE(bip.adjacent(u, v));
  }
  check_sound_on_samples(bip, 10'000);
  REQUIRE(bip.has_colours());
  CHECK(*bip.colour_target() == make_complete(2));
  CHECK(bip.colour(6) == 0);
  CHECK(bip.colour(7) == 1);

  // determinism: same seed, same answers; a different seed differs somewhere
  const auto again = GraphOracle::random_bipartite(42);
  const auto other = GraphOracle::random_bipartite(43);
  int differs = 0;
  for (int i = 0; i < 10'000; ++i) {
    const OracleVertex u = pick(rng), v = pick(rng);
    CHECK(bip.adjacent(u, v) == again.adjacent(u, v));
    if (bip.adjacent(u, v) != other.adjacent(u, v)) ++differs;
  }
  CHECK(differs > 0);
}

TEST_CASE("random h-colourable oracle") {
  const Graph c5 = make_cycle(5);
  const auto o = GraphOracle::random_h_colourable(c5, 7);
  check_sound_on_samples(o, 10'000);
  // colours 0 and 2 are non-adjacent in C5, so ids 0 and 2 never join
  CHECK_FALSE(o.adjacent(0, 2));
  CHECK_FALSE(o.adjacent(5, 12));

  const auto k2ish = GraphOracle::random_h_colourable(make_complete(2), 7);
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<OracleVertex> pick(0, 1 << 16);
  for (int i = 0; i < 5'000; ++i) {
    const OracleVertex u = pick(rng), v = pick(rng);
    if (u % 2 == v % 2) CHECK_FALSE(k2ish.adjacent(u, v));
  }

  CHECK_THROWS_AS(GraphOracle::random_h_colourable(make_complete(1), 7),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      GraphOracle::random_h_colourable(
          disjoint_union(make_complete(2), make_complete(2)), 7),
      std::invalid_argument);
}

TEST_CASE("oracle spec JSON round trip") {
  for (const auto& spec :
       {GraphOracle::rado(), GraphOracle::random_bipartite(42),
        GraphOracle::random_h_colourable(make_cycle(5), 9)}) {
    const auto back = GraphOracle::from_spec_json(spec.spec_json());
    CHECK(back.spec_json() == spec.spec_json());
    for (OracleVertex u = 0; u < 40; ++u)
      for (OracleVertex v = 0; v < 40; ++v)
        CHECK(back.adjacent(u, v) == spec.adjacent(u, v));
  }
  CHECK_THROWS_AS(GraphOracle::from_spec_json("{\"kind\":\"nope\"}"),
                  ParseError);
}

TEST_CASE("fresh neighbour scans on the Rado oracle") {
  const auto rado = GraphOracle::rado();
  CHECK(fresh_neighbor(rado, 1, {0}, kBudget) == 2);
  CHECK(fresh_neighbor(rado, 0, {}, kBudget) == 1);
  CHECK(fresh_common_neighbor(rado, 0, 2, {1}, kBudget) == 5);

  CHECK_THROWS_AS(fresh_neighbor(rado, 0, {1}, WitnessBudget{1}),
                  SearchExhausted);
  CHECK_THROWS_AS(fresh_neighbor(rado, 0, {0}, kBudget),
                  std::invalid_argument);
}

TEST_CASE("witness scans succeed within the BIT bound") {
  // constraints confined to ids < 16 admit a witness below 2^17 by packing
  // bits, so cap 2^21 always suffices
  const auto rado = GraphOracle::rado();
  const WitnessBudget bound{1 << 21};
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<OracleVertex> pick(0, 15);
  for (int trial = 0; trial < 200; ++trial) {
    std::set<OracleVertex> avoid_set;
    const int size = static_cast<int>(rng() % 15);
    while (static_cast<int>(avoid_set.size()) < size)
      avoid_set.insert(pick(rng));
    OracleVertex u = pick(rng);
    while (avoid_set.count(u)) u = pick(rng);
    std::vector<OracleVertex> avoid(avoid_set.begin(), avoid_set.end());
    CHECK_NOTHROW(fresh_neighbor(rado, u, avoid, bound));
    OracleVertex v = pick(rng);
    while (avoid_set.count(v) || v == u) v = pick(rng);
    CHECK_NOTHROW(fresh_common_neighbor(rado, u, v, avoid, bound));
  }
}

namespace {

void check_path_shape(const AdjacencyOracle& o,
                      const std::vector<OracleVertex>& path,
                      const std::vector<OracleVertex>& avoid) {
  REQUIRE(path.size() >= 3);
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    CHECK(o.adjacent(path[i], path[i + 1]));
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    for (OracleVertex a : avoid) {
      CHECK(path[i] != a);
      CHECK_FALSE(o.adjacent(path[i], a));
    }
    for (std::size_t j = i + 2; j + 1 < path.size(); ++j)
      CHECK_FALSE(o.adjacent(path[i], path[j]));
  }
}

}  // namespace

TEST_CASE("cec witness paths") {
  const auto rado = GraphOracle::rado();
  const auto path = cec_witness_path(rado, 0, 2, {1}, kBudget);
  CHECK(path == std::vector<OracleVertex>{0, 5, 2});
  check_path_shape(rado, path, {1});

  const auto closed = cec_witness_path(rado, 0, 0, {}, kBudget);
  CHECK(closed == std::vector<OracleVertex>{0, 1, 3, 0});
  check_path_shape(rado, closed, {});

  CHECK_THROWS_AS(cec_witness_path(rado, 0, 1, {}, kBudget),
                  AdjacentEndpoints);

  const auto bip = GraphOracle::random_bipartite(42);
  // frozen fixtures under seed 42
  CHECK(fresh_common_neighbor(bip, 0, 2, {}, kBudget) == 1);
  CHECK(fresh_common_neighbor(bip, 0, 2, {1}, kBudget) == 5);
  CHECK(fresh_neighbor(bip, 0, {1}, kBudget) == 3);
  REQUIRE_FALSE(bip.adjacent(0, 7));
  const auto cross = cec_witness_path(bip, 0, 7, {}, kBudget);
  CHECK(cross == std::vector<OracleVertex>{0, 1, 4, 7});
  check_path_shape(bip, cross, {});
  // closed paths in a bipartite graph need four internal hops
  const auto even_cycle = cec_witness_path(bip, 0, 0, {}, kBudget);
  CHECK(even_cycle.size() >= 4);
  check_path_shape(bip, even_cycle, {});
}

TEST_CASE("bounded cec diagnostic") {
  CHECK_FALSE(is_cec_bounded(make_empty(0), 0));
  CHECK_FALSE(is_cec_bounded(make_empty(3), 0));
  const Graph with_isolated =
      Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_FALSE(is_cec_bounded(with_isolated, 0));

  // K4: adjacent pairs are skipped, u = v only needs any neighbour
  CHECK(is_cec_bounded(make_complete(4), 0));
  // T = {v} wipes out every neighbour of u in K4
  CHECK_FALSE(is_cec_bounded(make_complete(4), 1));
}
