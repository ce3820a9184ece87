#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "homdist/automorphisms.hpp"
#include "homdist/cec_check.hpp"
#include "homdist/colouring.hpp"
#include "homdist/hom_search.hpp"
#include "homdist/witness.hpp"
#include "test_util.hpp"

using namespace homdist;

// The OpenMP kernels must reproduce the serial reference bit for bit.

TEST_CASE("homomorphism enumeration matches the serial reference") {
  std::mt19937 rng(301);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testutil::random_graph(rng, trial % 8, 0.4);
    const Graph h = testutil::random_graph(rng, 1 + trial % 5, 0.6);
    CHECK(enumerate_homomorphisms(g, h) ==
          enumerate_homomorphisms_serial(g, h));
    CHECK(count_homomorphisms(g, h) == count_homomorphisms_serial(g, h));
  }
  CHECK(enumerate_homomorphisms(make_empty(0), make_complete(3)) ==
        enumerate_homomorphisms_serial(make_empty(0), make_complete(3)));
}

TEST_CASE("automorphism groups match the serial reference") {
  std::mt19937 rng(303);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = testutil::random_graph(rng, trial % 9, 0.5);
    const PermGroup a = automorphism_group(g);
    const PermGroup b = automorphism_group_serial(g);
    CHECK(a.elements == b.elements);
  }
  CHECK(automorphism_group(make_cycle(6)).elements ==
        automorphism_group_serial(make_cycle(6)).elements);
  CHECK(automorphism_group(make_complete(5)).elements ==
        automorphism_group_serial(make_complete(5)).elements);
}

TEST_CASE("colouring solvers match the serial reference") {
  std::mt19937 rng(307);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = testutil::random_graph(rng, 1 + trial % 6, 0.5);
    CHECK(distinguishing_number(g) == distinguishing_number_serial(g));
    CHECK(distinguishing_chromatic_number(g) ==
          distinguishing_chromatic_number_serial(g));
  }
  CHECK(distinguishing_chromatic_number(make_cycle(4)) ==
        distinguishing_chromatic_number_serial(make_cycle(4)));
}

TEST_CASE("bounded cec check matches the serial reference") {
  std::mt19937 rng(311);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testutil::random_graph(rng, 1 + trial % 7, 0.45);
    for (int t_max = 0; t_max <= 2; ++t_max)
      CHECK(is_cec_bounded(g, t_max) == is_cec_bounded_serial(g, t_max));
  }
}

TEST_CASE("witness search matches the serial reference") {
  const auto a = non_composition_witness();
  const auto b = non_composition_witness_serial();
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->g == b->g);
  CHECK(a->to_c5 == b->to_c5);
  CHECK(a->c5_to_k3 == b->c5_to_k3);
  CHECK(a->certificate == b->certificate);
}
