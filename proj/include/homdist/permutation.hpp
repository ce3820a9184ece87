#pragma once

#include <cstdint>
#include <vector>

namespace homdist {

/// A permutation of 0..n-1 as an image array.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p);

Permutation identity_permutation(int n);

/// (a . b)(x) = a[b[x]], apply b first.
Permutation compose_permutations(const Permutation& a, const Permutation& b);

Permutation inverse_permutation(const Permutation& p);

bool is_identity(const Permutation& p);

/// Explicit element-list group over ground set 0..degree-1. Desk scale:
/// membership tests and preserving-subgroup filters need every element.
struct PermGroup {
  int degree = 0;
  std::vector<Permutation> elements;    // sorted lexicographically
  std::vector<Permutation> generators;  // greedy generating sublist

  std::uint64_t order() const { return elements.size(); }
  bool contains(const Permutation& p) const;
};

/// Rebuilds the sorted element list and a greedy generating set.
PermGroup make_perm_group(int degree, std::vector<Permutation> elements);

}  // namespace homdist
