#pragma once

#include <set>
#include <string>
#include <vector>

#include "homdist/branch_spec.hpp"
#include "homdist/graph.hpp"
#include "homdist/oracle_search.hpp"
#include "homdist/pair_order.hpp"

namespace homdist {

struct TreeBranch {
  std::uint64_t length;                // number of vertices on the branch
  std::vector<OracleVertex> vertices;  // root-neighbour first, tip last
};

struct ProcessedGoodPair {
  OracleVertex x, y;     // x < y
  OracleVertex witness;  // tree vertex adjacent to exactly one of x, y
  std::uint64_t index;   // position in the pair enumeration
};

/// Streaming partition state: a growing induced tree (the B side) plus the
/// processed good pairs (the A side), advanced one processed pair per step.
/// Pairs meeting the tree are bad; the tree vertex set doubles as the
/// poisoned set that decides badness.
struct ConstructionState {
  std::string oracle_spec;  // JSON oracle spec; empty for ad-hoc oracles
  BranchSpec spec = BranchSpec::parse("odd");
  WitnessBudget budget;
  std::uint64_t t = 0;
  OracleVertex root = 0;
  std::vector<TreeBranch> branches;
  std::vector<ProcessedGoodPair> good_pairs;
  std::set<OracleVertex> tree_vertices;  // root + all branch vertices
  std::set<std::uint64_t> used_lengths;
  std::uint64_t cursor = 1;  // next enumeration index to examine

  std::vector<OracleVertex> good_side_vertices() const;
  bool pair_is_bad(OracleVertex a, OracleVertex b) const;
};

/// Processes pair #1: finds the root as a fresh neighbour of x1 avoiding y1.
/// Throws SearchExhausted when the budget is too small.
ConstructionState init_construction(const AdjacencyOracle& o,
                                    const BranchSpec& s, WitnessBudget b,
                                    std::string oracle_spec = "");

/// Processes the first good unprocessed pair: adds the shortest missing
/// branch length at the root, builds a separator branch through a witness
/// adjacent to exactly one pair member, and lengthens it to an unused
/// in-spec length. The input state is untouched; on SearchExhausted the
/// caller's state remains valid for a retry with a larger cap.
ConstructionState step(const AdjacencyOracle& o, const ConstructionState& st);

/// init + (steps - 1) step calls, verifying the state after each when
/// verify_each is set (throws std::logic_error on a verification failure).
ConstructionState run(const AdjacencyOracle& o, const BranchSpec& s,
                      std::uint64_t steps, WitnessBudget b,
                      std::string oracle_spec = "", bool verify_each = true);

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  std::string to_json() const;
};

/// Re-checks the state against the oracle: the five inductive invariants of
/// the construction, tree inducedness (all pairs queried), separation
/// witnesses, and branch-length membership.
VerifyReport verify_state(const AdjacencyOracle& o,
                          const ConstructionState& st);

/// Abstract reference tree: a root plus the first `count` spec lengths as
/// pendant paths. Root is vertex 0; branches follow in spec order.
Graph branch_tree_prefix(const BranchSpec& s, int count);

/// {"t":..., "root":..., "branches":[{"len":..,"vertices":[..]},..],
///  "good_pairs":[{"pair":[x,y],"witness":z},..], "bad_vertices":[..],
///  "oracle":<spec>, "s":"<dsl>"}
std::string emit_state_json(const ConstructionState& st);
ConstructionState parse_state_json(const std::string& bytes);

}  // namespace homdist
