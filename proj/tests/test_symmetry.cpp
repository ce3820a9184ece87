#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "homdist/automorphisms.hpp"
#include "homdist/colouring.hpp"
#include "homdist/errors.hpp"
#include "homdist/hom_search.hpp"
#include "homdist/laws.hpp"
#include "homdist/preserving.hpp"
#include "homdist/witness.hpp"
#include "test_util.hpp"

using namespace homdist;

namespace {

Graph spider(std::vector<int> leg_lengths) {
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  for (int len : leg_lengths) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph::from_edges(next, edges);
}

}  // namespace

TEST_CASE("permutation helpers") {
  CHECK(is_permutation({2, 0, 1}));
  CHECK_FALSE(is_permutation({0, 0, 1}));
  const Permutation p{1, 2, 0};
  CHECK(compose_permutations(inverse_permutation(p), p) ==
        identity_permutation(3));
}

TEST_CASE("automorphism groups of small graphs") {
  CHECK(automorphism_group(make_cycle(5)).order() == 10);
  CHECK(automorphism_group(make_path(2)).order() == 2);
  CHECK(automorphism_group(spider({1, 2, 3})).order() == 1);
  CHECK(automorphism_group(make_complete(4)).order() == 24);

  // every element edge-preserving, cross-checked against the raw filter
  std::mt19937 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testutil::random_graph(rng, 1 + trial % 7, 0.5);
    const PermGroup aut = automorphism_group(g);
    CHECK(aut.elements == testutil::raw_automorphisms(g));
    for (const auto& alpha : aut.generators) CHECK(aut.contains(alpha));
  }
}

TEST_CASE("group order cap") {
  CHECK_THROWS_AS(automorphism_group(make_complete(8), 100), GroupTooLarge);
  CHECK_THROWS_AS(automorphism_group_serial(make_complete(8), 100),
                  GroupTooLarge);
}

TEST_CASE("isomorphism checks") {
  CHECK(is_isomorphic(make_cycle(5), make_cycle(5)));
  CHECK_FALSE(is_isomorphic(make_cycle(6), disjoint_union(make_cycle(3),
                                                          make_cycle(3))));
  const Graph a = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  const Graph b = Graph::from_edges(4, {{2, 0}, {0, 1}, {1, 3}});
  const auto iso = find_isomorphism(a, b);
  REQUIRE(iso.has_value());
  for (auto [u, v] : a.edges()) CHECK(b.adjacent((*iso)[u], (*iso)[v]));
}

TEST_CASE("preserving automorphisms") {
  const Graph c4 = make_cycle(4);
  const VertexImage bip{0, 1, 0, 1};
  const Permutation rot1{1, 2, 3, 0};
  const Permutation rot2{2, 3, 0, 1};
  CHECK(is_preserving(identity_permutation(4), bip));
  CHECK(is_preserving(rot2, bip));
  CHECK_FALSE(is_preserving(rot1, bip));

  // the fibre formulation agrees everywhere
  std::mt19937 rng(43);
  const Graph k3 = make_complete(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testutil::random_graph(rng, 2 + trial % 6, 0.5);
    const auto auts = automorphism_group(g).elements;
    for (const auto& f : enumerate_homomorphisms(g, k3)) {
      for (const auto& alpha : auts)
        CHECK(is_preserving(alpha, f) ==
              is_preserving_fibrewise(k3, alpha, f));
      break;
    }
  }
}

TEST_CASE("preserving subgroup") {
  const Graph c4 = make_cycle(4);
  const PermGroup sub = preserving_subgroup(c4, {0, 1, 0, 1});
  CHECK(sub.order() == 4);
  CHECK(sub.contains({2, 3, 0, 1}));  // rotation by two

  // subgroup axioms
  for (const auto& a : sub.elements) {
    CHECK(sub.contains(inverse_permutation(a)));
    for (const auto& b : sub.elements)
      CHECK(sub.contains(compose_permutations(a, b)));
  }

  // injective map: trivial subgroup
  CHECK(preserving_subgroup(c4, {0, 1, 2, 3}).order() == 1);
  // single fibre: everything preserves
  CHECK(preserving_subgroup(c4, {0, 0, 0, 0}).order() ==
        automorphism_group(c4).order());
}

TEST_CASE("distinguishing checks") {
  const Graph c5 = make_cycle(5);
  CHECK(is_distinguishing(c5, c5, {0, 1, 2, 3, 4}));

  const Graph c4 = make_cycle(4);
  const Graph k2 = make_complete(2);
  const auto check = check_distinguishing(c4, k2, {0, 1, 0, 1});
  CHECK_FALSE(check.distinguishing);
  REQUIRE(check.witness.has_value());
  CHECK_FALSE(is_identity(*check.witness));
  CHECK(is_preserving(*check.witness, {0, 1, 0, 1}));

  CHECK_THROWS_AS(is_distinguishing(make_cycle(3), k2, {0, 0, 0}),
                  std::invalid_argument);
}

TEST_CASE("find_distinguishing") {
  const Graph c7 = make_cycle(7);
  const Graph c5 = make_cycle(5);
  const auto f = find_distinguishing(c7, c5);
  REQUIRE(f.has_value());
  CHECK(is_homomorphism(c7, c5, *f));
  CHECK(is_distinguishing(c7, c5, *f));

  CHECK_FALSE(find_distinguishing(make_cycle(4), make_complete(2)).has_value());

  for (int n : {2, 3, 4}) {
    const Graph kn = make_complete(n);
    const auto g = find_distinguishing(kn, kn);
    REQUIRE(g.has_value());
    CHECK(*g == VertexImage(identity_permutation(n)));
  }
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(make_cycle(5)) == 3);
  CHECK(chromatic_number(make_complete(4)) == 4);
  CHECK(chromatic_number(make_cycle(4)) == 2);
  CHECK(chromatic_number(make_empty(3)) == 1);
  CHECK(chromatic_number(make_empty(0)) == 0);
}

TEST_CASE("distinguishing number") {
  CHECK(distinguishing_number(make_complete(2)) == 2);
  CHECK(distinguishing_number(spider({1, 2, 3})) == 1);
  CHECK(distinguishing_number(make_cycle(5)) == 3);
  CHECK(distinguishing_number(make_cycle(5)) ==
        testutil::exhaustive_least_distinguishing(make_cycle(5), false));
}

TEST_CASE("distinguishing chromatic number") {
  for (int n = 1; n <= 5; ++n)
    CHECK(distinguishing_chromatic_number(make_complete(n)) == n);
  CHECK(distinguishing_chromatic_number(make_cycle(4)) == 4);
  CHECK(distinguishing_chromatic_number(make_cycle(5)) == 3);
  CHECK(distinguishing_chromatic_number(make_cycle(4)) ==
        testutil::exhaustive_least_distinguishing(make_cycle(4), true));
  CHECK(distinguishing_chromatic_number(make_cycle(5)) ==
        testutil::exhaustive_least_distinguishing(make_cycle(5), true));
}

TEST_CASE("chi_D lower bound and cross-implementation consistency") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = testutil::random_graph(rng, 2 + trial % 5, 0.5);
    const int chi = chromatic_number(g);
    const int chi_d = distinguishing_chromatic_number(g);
    CHECK(chi_d >= chi);
    int by_search = 0;
    for (int n = 1; n <= g.order(); ++n) {
      if (find_distinguishing(g, make_complete(n)).has_value()) {
        by_search = n;
        break;
      }
    }
    CHECK(chi_d == by_search);
  }
}

TEST_CASE("law suite passes on the default corpus") {
  const auto cases = default_law_corpus();
  CHECK(cases.size() >= 30);
  for (const auto& c : cases) CHECK(c.g.order() <= 8);
  const auto results = run_law_suite(cases, default_union_law_corpus());
  CHECK(!results.empty());
  for (const auto& r : results) {
    INFO(r.item, " ", r.case_id);
    CHECK(r.pass);
  }
  const std::string report = emit_law_report(results);
  CHECK(report.find("\"item\":\"L1-1\"") != std::string::npos);
  CHECK(report.find("\"item\":\"L1-5\"") != std::string::npos);
}

TEST_CASE("law suite flags a broken union case") {
  // isomorphic domains violate the union law's precondition
  const Graph c5 = make_cycle(5);
  LawCase a{"a", c5, c5, {0, 1, 2, 3, 4}};
  UnionLawCase bad{"bad", a, a};
  const auto results = run_law_suite({}, {bad});
  REQUIRE(results.size() == 1);
  CHECK_FALSE(results[0].pass);
}

TEST_CASE("non-composition witness") {
  const auto w = non_composition_witness();
  REQUIRE(w.has_value());
  const Graph c5 = make_cycle(5);
  const Graph k3 = make_complete(3);
  CHECK(is_connected(w->g));
  CHECK(w->g.order() <= 8);
  CHECK(is_homomorphism(w->g, c5, w->to_c5));
  CHECK(is_homomorphism(c5, k3, w->c5_to_k3));
  CHECK(is_distinguishing(w->g, c5, w->to_c5));
  CHECK(is_distinguishing(c5, k3, w->c5_to_k3));
  const VertexImage composite = compose(w->to_c5, w->c5_to_k3);
  CHECK_FALSE(is_distinguishing(w->g, k3, composite));
  CHECK_FALSE(is_identity(w->certificate));
  CHECK(is_preserving(w->certificate, composite));
  CHECK(automorphism_group(w->g).contains(w->certificate));
}
