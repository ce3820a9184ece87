#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homdist/automorphisms.hpp"
#include "homdist/graph.hpp"
#include "homdist/permutation.hpp"
#include "homdist/vertex_map.hpp"

namespace homdist {

/// One corpus entry: a homomorphism f : g -> h.
struct LawCase {
  std::string id;
  Graph g;
  Graph h;
  VertexImage f;
};

/// Disjoint-union entry for the L1-5 law: both maps into the same codomain,
/// both distinguishing, domains connected and non-isomorphic.
struct UnionLawCase {
  std::string id;
  LawCase first;
  LawCase second;
};

struct LawResult {
  std::string item;     // "L1-1", "L1-3", "L1-4", "L1-5"
  std::string case_id;
  bool pass;
  std::optional<Permutation> witness;
};

/// Checks, per case: L1-1 the preserving automorphisms form a subgroup;
/// L1-3 post-composition with any codomain automorphism preserves the
/// distinguishing property; L1-4 on uniquely h-colourable domains all
/// homomorphisms agree on it; and per union case L1-5 the union of
/// distinguishing maps is distinguishing.
std::vector<LawResult> run_law_suite(const std::vector<LawCase>& cases,
                                     const std::vector<UnionLawCase>& unions,
                                     std::uint64_t group_cap = kDefaultGroupCap);

/// Built-in desk-scale corpus (>= 30 cases, domains of order <= 8).
std::vector<LawCase> default_law_corpus();
std::vector<UnionLawCase> default_union_law_corpus();

/// [{"item": "L1-3", "case": <id>, "pass": true|false,
///   "witness": <permutation or null>}, ...]
std::string emit_law_report(const std::vector<LawResult>& results);

}  // namespace homdist
