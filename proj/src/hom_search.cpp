#include "homdist/hom_search.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace homdist {

std::optional<EdgeViolation> homomorphism_violation(const Graph& g,
                                                    const Graph& h,
                                                    const VertexImage& f) {
  require_total_map(g, h, f);
  for (auto [u, v] : g.edges())
    if (!h.adjacent(f[u], f[v])) return EdgeViolation{u, v};
  return std::nullopt;
}

bool is_homomorphism(const Graph& g, const Graph& h, const VertexImage& f) {
  return !homomorphism_violation(g, h, f).has_value();
}

namespace {

// Backtracking over domain vertices in the given order. Candidate images of
// the current vertex are restricted to codomain vertices adjacent to the
// images of all already-assigned neighbours.
bool extend(const Graph& g, const Graph& h, const std::vector<int>& order,
            std::size_t depth, VertexImage& img, std::vector<char>& assigned) {
  if (depth == order.size()) return true;
  const int v = order[depth];
  for (int c = 0; c < h.order(); ++c) {
    bool ok = true;
    for (int u : g.neighbours(v)) {
      if (assigned[u] && !h.adjacent(img[u], c)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    img[v] = c;
    assigned[v] = 1;
    if (extend(g, h, order, depth + 1, img, assigned)) return true;
    assigned[v] = 0;
  }
  return false;
}

// Lexicographic enumeration: vertices assigned in id order, candidates
// ascending. Earlier-id neighbours are always assigned first, so pruning
// needs no assigned[] bookkeeping.
template <typename Sink>
bool enumerate_from(const Graph& g, const Graph& h, int v, VertexImage& img,
                    Sink&& sink) {
  if (v == g.order()) return sink(img);
  for (int c = 0; c < h.order(); ++c) {
    bool ok = true;
    for (int u : g.neighbours(v)) {
      if (u >= v) break;  // neighbour lists are sorted
      if (!h.adjacent(img[u], c)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    img[v] = c;
    if (!enumerate_from(g, h, v + 1, img, sink)) return false;
  }
  return true;
}

}  // namespace

std::optional<VertexImage> find_homomorphism(const Graph& g, const Graph& h) {
  const int n = g.order();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  VertexImage img(n, 0);
  std::vector<char> assigned(n, 0);
  if (extend(g, h, order, 0, img, assigned)) return img;
  return std::nullopt;
}

void for_each_homomorphism(const Graph& g, const Graph& h,
                           const std::function<bool(const VertexImage&)>& fn) {
  VertexImage img(g.order(), 0);
  enumerate_from(g, h, 0, img, [&](const VertexImage& f) { return fn(f); });
}

std::vector<VertexImage> enumerate_homomorphisms_serial(const Graph& g,
                                                        const Graph& h) {
  std::vector<VertexImage> out;
  for_each_homomorphism(g, h, [&](const VertexImage& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::uint64_t count_homomorphisms_serial(const Graph& g, const Graph& h) {
  std::uint64_t count = 0;
  VertexImage img(g.order(), 0);
  enumerate_from(g, h, 0, img, [&](const VertexImage&) {
    ++count;
    return true;
  });
  return count;
}

#ifdef _OPENMP

// The parallel kernels split on the image of vertex 0. Each block is a
// contiguous run of the lexicographic order, so concatenating blocks in
// candidate order reproduces the serial output exactly.
std::vector<VertexImage> enumerate_homomorphisms(const Graph& g,
                                                 const Graph& h) {
  if (g.order() == 0) return {VertexImage{}};
  const int k = h.order();
  std::vector<std::vector<VertexImage>> blocks(k);
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < k; ++c) {
    VertexImage img(g.order());
    img[0] = c;
    enumerate_from(g, h, 1, img, [&](const VertexImage& f) {
      blocks[c].push_back(f);
      return true;
    });
  }
  std::vector<VertexImage> out;
  for (auto& b : blocks) {
    out.insert(out.end(), std::make_move_iterator(b.begin()),
               std::make_move_iterator(b.end()));
  }
  return out;
}

std::uint64_t count_homomorphisms(const Graph& g, const Graph& h) {
  if (g.order() == 0) return 1;
  const int k = h.order();
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (int c = 0; c < k; ++c) {
    VertexImage img(g.order());
    img[0] = c;
    std::uint64_t local = 0;
    enumerate_from(g, h, 1, img, [&](const VertexImage&) {
      ++local;
      return true;
    });
    total += local;
  }
  return total;
}

#else

std::vector<VertexImage> enumerate_homomorphisms(const Graph& g,
                                                 const Graph& h) {
  return enumerate_homomorphisms_serial(g, h);
}

std::uint64_t count_homomorphisms(const Graph& g, const Graph& h) {
  return count_homomorphisms_serial(g, h);
}

#endif

}  // namespace homdist
