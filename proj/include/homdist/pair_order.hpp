#pragma once

#include <cstdint>

#include "homdist/oracle.hpp"

namespace homdist {

struct OraclePair {
  OracleVertex a, b;  // a < b
};

/// The i-th unordered pair of naturals (i >= 1) under the diagonal order:
/// pairs {a, b} with a < b sorted by (a + b, a). Bijective.
OraclePair pair_enumeration(std::uint64_t index);

/// Inverse of pair_enumeration.
std::uint64_t pair_index(OracleVertex a, OracleVertex b);

}  // namespace homdist
