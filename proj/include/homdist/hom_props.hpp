#pragma once

#include <optional>

#include "homdist/graph.hpp"
#include "homdist/vertex_map.hpp"

namespace homdist {

/// True iff every endomorphism of h is bijective (hence an automorphism).
/// Complete endomorphism enumeration; desk scale only.
bool is_core(const Graph& h);

/// True iff g is h-colourable, every homomorphism g -> h is surjective, and
/// any two homomorphisms differ by post-composition with an automorphism
/// of h.
bool is_uniquely_h_colourable(const Graph& g, const Graph& h);

struct FixationResult {
  Graph graph;               // vertices of g first, then h
  VertexImage canonical_map;  // f on V(g), identity on V(h); a hom to h
};

/// Fixation of g by the homomorphism f relative to h: g and h side by side,
/// with x in V(g) joined to every h-neighbour of f(x). Throws
/// std::invalid_argument when f is not a homomorphism.
FixationResult fixation(const Graph& g, const VertexImage& f, const Graph& h);

}  // namespace homdist
