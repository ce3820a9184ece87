#include "homdist/hom_props.hpp"

#include <algorithm>
#include <stdexcept>

#include "homdist/hom_search.hpp"

namespace homdist {

namespace {

bool is_bijective(const VertexImage& f, int codomain_order) {
  if (static_cast<int>(f.size()) != codomain_order) return false;
  std::vector<char> hit(codomain_order, 0);
  for (int img : f) {
    if (hit[img]) return false;
    hit[img] = 1;
  }
  return true;
}

bool is_surjective(const VertexImage& f, int codomain_order) {
  std::vector<char> hit(codomain_order, 0);
  for (int img : f) hit[img] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

// The automorphism beta with f = beta . base, if one exists. Both maps must
// be surjective homomorphisms onto h, so beta is forced pointwise.
bool related_by_codomain_automorphism(const Graph& h, const VertexImage& base,
                                      const VertexImage& f) {
  std::vector<int> beta(h.order(), -1);
  for (std::size_t v = 0; v < base.size(); ++v) {
    int& b = beta[base[v]];
    if (b == -1)
      b = f[v];
    else if (b != f[v])
      return false;
  }
  if (!is_bijective(beta, h.order())) return false;
  for (auto [u, v] : h.edges())
    if (!h.adjacent(beta[u], beta[v])) return false;
  return true;
}

}  // namespace

bool is_core(const Graph& h) {
  bool core = true;
  for_each_homomorphism(h, h, [&](const VertexImage& endo) {
    if (!is_bijective(endo, h.order())) {
      core = false;
      return false;
    }
    return true;
  });
  return core;
}

bool is_uniquely_h_colourable(const Graph& g, const Graph& h) {
  std::optional<VertexImage> base;
  bool unique = true;
  for_each_homomorphism(g, h, [&](const VertexImage& f) {
    if (!is_surjective(f, h.order())) {
      unique = false;
      return false;
    }
    if (!base) {
      base = f;
      return true;
    }
    if (!related_by_codomain_automorphism(h, *base, f)) {
      unique = false;
      return false;
    }
    return true;
  });
  return unique && base.has_value();
}

FixationResult fixation(const Graph& g, const VertexImage& f, const Graph& h) {
  if (!is_homomorphism(g, h, f))
    throw std::invalid_argument("fixation requires a homomorphism g -> h");
  const int off = g.order();
  std::vector<std::pair<int, int>> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(off + u, off + v);
  for (int x = 0; x < g.order(); ++x)
    for (int y : h.neighbours(f[x])) edges.emplace_back(x, off + y);
  Graph fixed = Graph::from_edges(g.order() + h.order(), edges);

  VertexImage canonical(fixed.order());
  for (int x = 0; x < g.order(); ++x) canonical[x] = f[x];
  for (int y = 0; y < h.order(); ++y) canonical[off + y] = y;
  return {std::move(fixed), std::move(canonical)};
}

}  // namespace homdist
