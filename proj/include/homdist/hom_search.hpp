#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "homdist/graph.hpp"
#include "homdist/vertex_map.hpp"

namespace homdist {

struct EdgeViolation {
  int u, v;  // domain edge whose image is not a codomain edge
};

/// First violating domain edge under (u, v) order, or nullopt if f is a
/// homomorphism. f must be total.
std::optional<EdgeViolation> homomorphism_violation(const Graph& g,
                                                    const Graph& h,
                                                    const VertexImage& f);

bool is_homomorphism(const Graph& g, const Graph& h, const VertexImage& f);

/// Complete backtracking search over a static degree-descending vertex
/// order with neighbour-consistency pruning. nullopt means no homomorphism
/// exists.
std::optional<VertexImage> find_homomorphism(const Graph& g, const Graph& h);

/// Visits every homomorphism g -> h in lexicographic order of the image
/// array. The visitor returns false to stop early.
void for_each_homomorphism(const Graph& g, const Graph& h,
                           const std::function<bool(const VertexImage&)>& fn);

/// All homomorphisms g -> h, duplicate-free, lexicographic. The plain
/// entry point runs the OpenMP kernel when available; the serial variant is
/// the reference implementation and produces identical output.
std::vector<VertexImage> enumerate_homomorphisms(const Graph& g,
                                                 const Graph& h);
std::vector<VertexImage> enumerate_homomorphisms_serial(const Graph& g,
                                                        const Graph& h);

std::uint64_t count_homomorphisms(const Graph& g, const Graph& h);
std::uint64_t count_homomorphisms_serial(const Graph& g, const Graph& h);

}  // namespace homdist
