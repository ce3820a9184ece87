#pragma once

#include <string>
#include <vector>

#include "homdist/automorphisms.hpp"
#include "homdist/construction.hpp"
#include "homdist/graph.hpp"

namespace homdist {

/// Image of one window vertex: a vertex of H, or one of the two join
/// vertices (side is 1 or 2).
struct PrefixLabel {
  bool in_h;
  int value;  // H vertex id, or the K2 side
};

/// Finite prefix of a homomorphism into H v K2: tree vertices go to the K2
/// side by parity of their distance from the root, good-side vertices go to
/// H through the oracle's colour map.
struct PartialHom {
  Graph h;
  std::vector<std::pair<OracleVertex, PrefixLabel>> assignments;  // sorted
};

/// Builds and validates the prefix over the state's window. Requires a
/// colour-mapped oracle; throws std::logic_error when the window violates
/// the H v K2 edge condition.
PartialHom gs_prefix(const AdjacencyOracle& o, const ConstructionState& st);

/// {"assignments": [[vertex, "H:<id>"|"K2:1"|"K2:2"], ...]}
std::string emit_partial_hom(const PartialHom& ph);

struct RigidityReport {
  std::uint64_t window_order = 0;
  std::uint64_t group_order = 0;  // fibre-preserving window automorphisms
  bool tree_fixed_pointwise = false;
  bool no_pair_swapped = false;
  std::string detail;

  bool pass() const { return tree_fixed_pointwise && no_pair_swapped; }
  std::string to_json() const;
};

/// Enumerates the automorphisms of the finite window graph that preserve
/// every fibre of the prefix, and checks that each fixes the tree pointwise
/// and maps no processed good pair onto itself crosswise.
RigidityReport prefix_rigidity_check(const AdjacencyOracle& o,
                                     const ConstructionState& st,
                                     const PartialHom& ph,
                                     std::uint64_t group_cap = kDefaultGroupCap);

}  // namespace homdist
