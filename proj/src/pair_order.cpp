#include "homdist/pair_order.hpp"

#include <cmath>
#include <stdexcept>

namespace homdist {

namespace {

// Pairs with a + b < s number floor(s^2 / 4): sums 1..s-1 contribute
// ceil(j/2) pairs each.
std::uint64_t pairs_before_sum(std::uint64_t s) { return s * s / 4; }

}  // namespace

std::uint64_t pair_index(OracleVertex a, OracleVertex b) {
  if (a >= b) throw std::invalid_argument("pair requires a < b");
  return pairs_before_sum(a + b) + a + 1;
}

OraclePair pair_enumeration(std::uint64_t index) {
  if (index < 1) throw std::invalid_argument("pair index starts at 1");
  // smallest s with pairs_before_sum(s + 1) >= index
  std::uint64_t s = static_cast<std::uint64_t>(
      std::floor(2.0 * std::sqrt(static_cast<double>(index))));
  if (s > 2) s -= 2;
  while (pairs_before_sum(s + 1) < index) ++s;
  while (s > 1 && pairs_before_sum(s) >= index) --s;
  const std::uint64_t a = index - pairs_before_sum(s) - 1;
  return {a, s - a};
}

}  // namespace homdist
