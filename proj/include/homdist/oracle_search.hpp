#pragma once

#include <optional>
#include <vector>

#include "homdist/oracle.hpp"

namespace homdist {

/// Bounds every witness scan: ids 0..cap inclusive are examined, nothing
/// beyond. Exhaustion signals the budget, never nonexistence.
struct WitnessBudget {
  OracleVertex cap = 1'000'000;
};

/// Thrown by cec_witness_path when the endpoints are distinct and adjacent.
class AdjacentEndpoints : public std::invalid_argument {
 public:
  AdjacentEndpoints()
      : std::invalid_argument("endpoints are adjacent; no witness path") {}
};

struct ScanConstraints {
  std::vector<OracleVertex> must_adjacent;  // w ~ each
  std::vector<OracleVertex> avoid;   // w differs from and is not adjacent to each
  std::vector<OracleVertex> exclude;  // w differs from each
};

/// Least w in [from, cap] satisfying the constraints, or nothing. The
/// resumable `from` powers backtracking callers.
std::optional<OracleVertex> scan_witness(const AdjacencyOracle& o,
                                         OracleVertex from, OracleVertex cap,
                                         const ScanConstraints& c);

/// scan_witness with a shared candidate-visit allowance; nullopt once spent.
/// Bounds the total work of backtracking searches.
std::optional<OracleVertex> scan_witness_bounded(const AdjacencyOracle& o,
                                                 OracleVertex from,
                                                 OracleVertex cap,
                                                 const ScanConstraints& c,
                                                 std::uint64_t* work);

/// Least w <= cap with w ~ u, w not in avoid+{u}, and w not adjacent to any
/// avoid member. Throws SearchExhausted at the cap.
OracleVertex fresh_neighbor(const AdjacencyOracle& o, OracleVertex u,
                            const std::vector<OracleVertex>& avoid,
                            WitnessBudget b);

/// Least w <= cap adjacent to both u and v, outside avoid+{u,v}, not
/// adjacent to any avoid member.
OracleVertex fresh_common_neighbor(const AdjacencyOracle& o, OracleVertex u,
                                   OracleVertex v,
                                   const std::vector<OracleVertex>& avoid,
                                   WitnessBudget b);

/// Backtracking growth of `count` fresh vertices chained at `start`:
/// consecutive vertices adjacent, all other pairs (start included)
/// non-adjacent, every vertex outside and non-adjacent to base_avoid.
/// Ascending scans with backtracking make the result deterministic.
std::optional<std::vector<OracleVertex>> grow_induced_chain(
    const AdjacencyOracle& o, OracleVertex start, int count,
    const std::vector<OracleVertex>& base_avoid, WitnessBudget b);

/// Backtracking chain from `start` whose last vertex is adjacent to
/// `target`; closing is tried before extending at each depth, so shorter
/// chains win. Chain vertices stay outside and non-adjacent to base_avoid,
/// differ from extra_exclude, and are pairwise non-adjacent except
/// consecutively. When start_internal, vertices beyond the first also avoid
/// adjacency to start.
std::optional<std::vector<OracleVertex>> induced_chain_to_target(
    const AdjacencyOracle& o, OracleVertex start, OracleVertex target,
    const std::vector<OracleVertex>& base_avoid,
    const std::vector<OracleVertex>& extra_exclude, bool start_internal,
    int min_internals, int max_internals, WitnessBudget b);

/// A path [u, w1, .., wm, v] of length >= 2 whose internal vertices avoid
/// membership in and adjacency to `avoid`, and are pairwise non-adjacent
/// except consecutively. u == v asks for a closed path through u with at
/// least two internal vertices.
std::vector<OracleVertex> cec_witness_path(
    const AdjacencyOracle& o, OracleVertex u, OracleVertex v,
    const std::vector<OracleVertex>& avoid, WitnessBudget b);

}  // namespace homdist
