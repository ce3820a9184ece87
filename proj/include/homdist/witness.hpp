#pragma once

#include <optional>

#include "homdist/graph.hpp"
#include "homdist/permutation.hpp"
#include "homdist/vertex_map.hpp"

namespace homdist {

/// A pair of distinguishing homomorphisms g -> C5 -> K3 whose composite is
/// not distinguishing, plus the nontrivial preserving automorphism of the
/// composite as certificate.
struct NonCompositionWitness {
  Graph g;
  VertexImage to_c5;
  VertexImage c5_to_k3;
  Permutation certificate;
};

/// Deterministic search for a witness triple. Connected graphs are scanned
/// in (order, edge-mask) order: exhaustively for order <= 6, cycles only for
/// 7 <= order <= max_order. The plain entry point runs the OpenMP kernel
/// when available; both variants return the same witness.
std::optional<NonCompositionWitness> non_composition_witness(
    int max_order = 8);
std::optional<NonCompositionWitness> non_composition_witness_serial(
    int max_order = 8);

}  // namespace homdist
