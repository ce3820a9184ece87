#pragma once

#include <optional>

#include "homdist/automorphisms.hpp"
#include "homdist/graph.hpp"
#include "homdist/permutation.hpp"
#include "homdist/vertex_map.hpp"

namespace homdist {

/// alpha is preserving relative to f when f . alpha = f, i.e. alpha
/// stabilises every fibre of f setwise.
bool is_preserving(const Permutation& alpha, const VertexImage& f);

/// Same predicate via the fibre formulation; the two agree everywhere.
bool is_preserving_fibrewise(const Graph& cod, const Permutation& alpha,
                             const VertexImage& f);

/// {alpha in Aut(g) : f . alpha = f}.
PermGroup preserving_subgroup(const Graph& g, const VertexImage& f,
                              std::uint64_t cap = kDefaultGroupCap);

struct DistinguishingCheck {
  bool distinguishing;
  std::optional<Permutation> witness;  // nontrivial preserving automorphism
};

/// f must be a homomorphism g -> h (throws std::invalid_argument otherwise).
DistinguishingCheck check_distinguishing(const Graph& g, const Graph& h,
                                         const VertexImage& f,
                                         std::uint64_t cap = kDefaultGroupCap);

bool is_distinguishing(const Graph& g, const Graph& h, const VertexImage& f,
                       std::uint64_t cap = kDefaultGroupCap);

/// Variant against a precomputed Aut(g); used by enumeration loops.
DistinguishingCheck check_distinguishing_with_group(const PermGroup& aut,
                                                    const VertexImage& f);

/// First homomorphism g -> h in lexicographic image order that is
/// distinguishing, or nullopt after complete search.
std::optional<VertexImage> find_distinguishing(
    const Graph& g, const Graph& h, std::uint64_t cap = kDefaultGroupCap);

}  // namespace homdist
