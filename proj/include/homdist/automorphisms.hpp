#pragma once

#include <cstdint>
#include <optional>

#include "homdist/graph.hpp"
#include "homdist/permutation.hpp"

namespace homdist {

inline constexpr std::uint64_t kDefaultGroupCap = 1'000'000;

/// Full automorphism group as an explicit element list. Backtracking with
/// colour-refinement pruning; throws GroupTooLarge once more than `cap`
/// elements are found. The plain entry point uses the OpenMP kernel when
/// available; the serial variant is the reference implementation.
PermGroup automorphism_group(const Graph& g,
                             std::uint64_t cap = kDefaultGroupCap);
PermGroup automorphism_group_serial(const Graph& g,
                                    std::uint64_t cap = kDefaultGroupCap);

/// All automorphisms that fix every colour class setwise. `colours[v]` is an
/// arbitrary small integer per vertex.
std::vector<Permutation> colour_preserving_automorphisms(
    const Graph& g, const std::vector<int>& colours,
    std::uint64_t cap = kDefaultGroupCap);

/// Some isomorphism g -> h, or nullopt after complete search.
std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h);

bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace homdist
