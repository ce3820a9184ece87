#pragma once

#include <cstdint>

#include "homdist/automorphisms.hpp"
#include "homdist/graph.hpp"

namespace homdist {

/// Least k admitting a proper k-colouring. Complete backtracking with
/// first-use colour symmetry breaking.
int chromatic_number(const Graph& g);

/// Least n admitting an (arbitrary) n-colouring preserved by no nontrivial
/// automorphism. The plain entry points run the OpenMP kernel when
/// available; the serial variants are the reference implementations.
int distinguishing_number(const Graph& g,
                          std::uint64_t group_cap = kDefaultGroupCap);
int distinguishing_number_serial(const Graph& g,
                                 std::uint64_t group_cap = kDefaultGroupCap);

/// Least n admitting a proper n-colouring preserved by no nontrivial
/// automorphism; equivalently the least n with a distinguishing
/// homomorphism to K_n.
int distinguishing_chromatic_number(const Graph& g,
                                    std::uint64_t group_cap = kDefaultGroupCap);
int distinguishing_chromatic_number_serial(
    const Graph& g, std::uint64_t group_cap = kDefaultGroupCap);

}  // namespace homdist
