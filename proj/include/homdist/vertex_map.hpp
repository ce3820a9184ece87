#pragma once

#include <string>
#include <utility>
#include <vector>

#include "homdist/graph.hpp"

namespace homdist {

/// A total vertex map is an image array indexed by domain vertex id; entry v
/// is the codomain id of v's image. Domain and codomain graphs travel
/// alongside the array at call sites.
using VertexImage = std::vector<int>;

/// Checks totality and codomain range, not edge preservation.
bool is_total_map(const Graph& dom, const Graph& cod, const VertexImage& f);

void require_total_map(const Graph& dom, const Graph& cod,
                       const VertexImage& f);

/// Pulled-back colour-class partition: cell h holds the sorted preimage
/// f^-1(h), possibly empty.
std::vector<std::vector<int>> fibre_partition(const Graph& cod,
                                              const VertexImage& f);

/// (g . f)(v) = g[f[v]]. Throws on size mismatch.
VertexImage compose(const VertexImage& f, const VertexImage& g);

/// Restriction of f to a subset: (vertex, image) pairs for members only.
std::vector<std::pair<int, int>> restrict_map(const VertexImage& f,
                                              const VertexSubset& s);

/// JSON form {"map": [img(0), img(1), ...]}.
VertexImage parse_vertex_map(const std::string& bytes);
std::string emit_vertex_map(const VertexImage& f);

}  // namespace homdist
