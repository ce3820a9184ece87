#include "homdist/preserving.hpp"

#include <algorithm>
#include <stdexcept>

#include "homdist/hom_search.hpp"

namespace homdist {

bool is_preserving(const Permutation& alpha, const VertexImage& f) {
  if (alpha.size() != f.size())
    throw std::invalid_argument("permutation does not act on the map domain");
  for (std::size_t v = 0; v < f.size(); ++v)
    if (f[alpha[v]] != f[v]) return false;
  return true;
}

bool is_preserving_fibrewise(const Graph& cod, const Permutation& alpha,
                             const VertexImage& f) {
  if (alpha.size() != f.size())
    throw std::invalid_argument("permutation does not act on the map domain");
  for (const auto& cell : fibre_partition(cod, f)) {
    std::vector<int> image;
    image.reserve(cell.size());
    for (int v : cell) image.push_back(alpha[v]);
    std::sort(image.begin(), image.end());
    if (image != cell) return false;
  }
  return true;
}

PermGroup preserving_subgroup(const Graph& g, const VertexImage& f,
                              std::uint64_t cap) {
  PermGroup aut = automorphism_group(g, cap);
  std::vector<Permutation> kept;
  for (const auto& alpha : aut.elements)
    if (is_preserving(alpha, f)) kept.push_back(alpha);
  return make_perm_group(g.order(), std::move(kept));
}

DistinguishingCheck check_distinguishing_with_group(const PermGroup& aut,
                                                    const VertexImage& f) {
  for (const auto& alpha : aut.elements) {
    if (is_identity(alpha)) continue;
    if (is_preserving(alpha, f)) return {false, alpha};
  }
  return {true, std::nullopt};
}

DistinguishingCheck check_distinguishing(const Graph& g, const Graph& h,
                                         const VertexImage& f,
                                         std::uint64_t cap) {
  if (!is_homomorphism(g, h, f))
    throw std::invalid_argument(
        "distinguishing is defined for homomorphisms only");
  PermGroup aut = automorphism_group(g, cap);
  return check_distinguishing_with_group(aut, f);
}

bool is_distinguishing(const Graph& g, const Graph& h, const VertexImage& f,
                       std::uint64_t cap) {
  return check_distinguishing(g, h, f, cap).distinguishing;
}

std::optional<VertexImage> find_distinguishing(const Graph& g, const Graph& h,
                                               std::uint64_t cap) {
  PermGroup aut = automorphism_group(g, cap);
  std::optional<VertexImage> result;
  for_each_homomorphism(g, h, [&](const VertexImage& f) {
    if (check_distinguishing_with_group(aut, f).distinguishing) {
      result = f;
      return false;
    }
    return true;
  });
  return result;
}

}  // namespace homdist
