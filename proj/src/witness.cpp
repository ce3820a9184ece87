#include "homdist/witness.hpp"

#include <cstdint>

#include "homdist/automorphisms.hpp"
#include "homdist/hom_search.hpp"
#include "homdist/preserving.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace homdist {

namespace {

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

// Distinguishing homomorphisms C5 -> K3, enumerated once.
std::vector<VertexImage> middle_maps(const Graph& c5, const Graph& k3) {
  PermGroup aut = automorphism_group_serial(c5);
  std::vector<VertexImage> out;
  for (const auto& m : enumerate_homomorphisms_serial(c5, k3))
    if (check_distinguishing_with_group(aut, m).distinguishing)
      out.push_back(m);
  return out;
}

std::optional<NonCompositionWitness> try_graph(
    const Graph& g, const Graph& c5, const std::vector<VertexImage>& mids) {
  if (!is_connected(g)) return std::nullopt;
  PermGroup aut = automorphism_group_serial(g);
  if (aut.order() == 1) return std::nullopt;  // every hom is distinguishing

  std::optional<NonCompositionWitness> found;
  for_each_homomorphism(g, c5, [&](const VertexImage& f) {
    if (!check_distinguishing_with_group(aut, f).distinguishing) return true;
    for (const auto& mid : mids) {
      VertexImage comp = compose(f, mid);
      auto check = check_distinguishing_with_group(aut, comp);
      if (!check.distinguishing) {
        found = NonCompositionWitness{g, f, mid, *check.witness};
        return false;
      }
    }
    return true;
  });
  return found;
}

constexpr int kExhaustiveMaxOrder = 6;

std::optional<NonCompositionWitness> scan_order_serial(
    int n, const Graph& c5, const std::vector<VertexImage>& mids) {
  const std::uint64_t masks = 1ULL << (n * (n - 1) / 2);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    auto w = try_graph(graph_from_mask(n, mask), c5, mids);
    if (w) return w;
  }
  return std::nullopt;
}

#ifdef _OPENMP

std::optional<NonCompositionWitness> scan_order(
    int n, const Graph& c5, const std::vector<VertexImage>& mids) {
  const std::uint64_t masks = 1ULL << (n * (n - 1) / 2);
  constexpr std::uint64_t kChunk = 4096;
  for (std::uint64_t base = 0; base < masks; base += kChunk) {
    const std::uint64_t end = std::min(masks, base + kChunk);
    // first witness by mask order within the chunk
    std::uint64_t best_mask = end;
    std::optional<NonCompositionWitness> best;
#pragma omp parallel for schedule(dynamic, 64)
    for (std::uint64_t mask = base; mask < end; ++mask) {
      auto w = try_graph(graph_from_mask(n, mask), c5, mids);
      if (w) {
#pragma omp critical
        {
          if (mask < best_mask) {
            best_mask = mask;
            best = std::move(w);
          }
        }
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

#else

std::optional<NonCompositionWitness> scan_order(
    int n, const Graph& c5, const std::vector<VertexImage>& mids) {
  return scan_order_serial(n, c5, mids);
}

#endif

template <typename Scan>
std::optional<NonCompositionWitness> witness_search(int max_order,
                                                    const Scan& scan) {
  const Graph c5 = make_cycle(5);
  const Graph k3 = make_complete(3);
  const std::vector<VertexImage> mids = middle_maps(c5, k3);
  for (int n = 4; n <= std::min(max_order, kExhaustiveMaxOrder); ++n) {
    auto w = scan(n, c5, mids);
    if (w) return w;
  }
  // budget tail: larger orders are scanned through cycles only
  for (int n = std::max(4, kExhaustiveMaxOrder + 1); n <= max_order; ++n) {
    auto w = try_graph(make_cycle(n), c5, mids);
    if (w) return w;
  }
  return std::nullopt;
}

}  // namespace

std::optional<NonCompositionWitness> non_composition_witness(int max_order) {
  return witness_search(max_order, [](int n, const Graph& c5,
                                      const std::vector<VertexImage>& mids) {
    return scan_order(n, c5, mids);
  });
}

std::optional<NonCompositionWitness> non_composition_witness_serial(
    int max_order) {
  return witness_search(max_order, [](int n, const Graph& c5,
                                      const std::vector<VertexImage>& mids) {
    return scan_order_serial(n, c5, mids);
  });
}

}  // namespace homdist
