#include "homdist/colouring.hpp"

#include <algorithm>
#include <atomic>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace homdist {

namespace {

// Canonical colourings use colours in first-use order: colour(v) <=
// 1 + max(earlier colours). Every k-class colouring is colour-permutation
// equivalent to exactly one canonical one, and both properness and the
// distinguishing property are invariant under colour permutations, so
// existence checks may range over canonical colourings only.
template <typename Check>
bool complete_canonical(const Graph& g, int k, bool proper,
                        std::vector<int>& col, int v, int max_used,
                        const Check& check,
                        const std::atomic<bool>* stop) {
  if (stop && stop->load(std::memory_order_relaxed)) return false;
  const int n = g.order();
  if (v == n) return max_used == k - 1 && check(col);
  const int limit = std::min(k - 1, max_used + 1);
  for (int c = 0; c <= limit; ++c) {
    if (proper) {
      bool clash = false;
      for (int u : g.neighbours(v)) {
        if (u >= v) break;
        if (col[u] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
    }
    col[v] = c;
    if (complete_canonical(g, k, proper, col, v + 1, std::max(max_used, c),
                           check, stop))
      return true;
  }
  return false;
}

template <typename Check>
bool exists_canonical_colouring_serial(const Graph& g, int k, bool proper,
                                       const Check& check) {
  std::vector<int> col(g.order(), -1);
  return complete_canonical(g, k, proper, col, 0, -1, check, nullptr);
}

#ifdef _OPENMP

struct ColPrefix {
  std::vector<int> col;
  int max_used;
};

template <typename Check>
bool exists_canonical_colouring(const Graph& g, int k, bool proper,
                                const Check& check) {
  const int n = g.order();
  const int depth = std::min(n, 4);
  if (n <= depth) return exists_canonical_colouring_serial(g, k, proper, check);

  std::vector<ColPrefix> prefixes;
  std::vector<int> col(n, -1);
  // enumerate canonical prefixes of the first `depth` vertices
  auto gather = [&](auto&& self, int v, int max_used) -> void {
    if (v == depth) {
      prefixes.push_back({col, max_used});
      return;
    }
    const int limit = std::min(k - 1, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
      if (proper) {
        bool clash = false;
        for (int u : g.neighbours(v)) {
          if (u >= v) break;
          if (col[u] == c) {
            clash = true;
            break;
          }
        }
        if (clash) continue;
      }
      col[v] = c;
      self(self, v + 1, std::max(max_used, c));
    }
  };
  gather(gather, 0, -1);

  std::atomic<bool> found{false};
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    if (found.load(std::memory_order_relaxed)) continue;
    std::vector<int> local = prefixes[i].col;
    if (complete_canonical(g, k, proper, local, depth, prefixes[i].max_used,
                           check, &found))
      found.store(true);
  }
  return found.load();
}

#else

template <typename Check>
bool exists_canonical_colouring(const Graph& g, int k, bool proper,
                                const Check& check) {
  return exists_canonical_colouring_serial(g, k, proper, check);
}

#endif

bool breaks_all_symmetry(const PermGroup& aut, const std::vector<int>& col) {
  for (const auto& alpha : aut.elements) {
    if (is_identity(alpha)) continue;
    bool preserved = true;
    for (std::size_t v = 0; v < col.size(); ++v) {
      if (col[alpha[v]] != col[v]) {
        preserved = false;
        break;
      }
    }
    if (preserved) return false;
  }
  return true;
}

template <typename Exists>
int distinguishing_search(const Graph& g, std::uint64_t group_cap, bool proper,
                          const Exists& exists) {
  const int n = g.order();
  if (n == 0) return 0;
  PermGroup aut = automorphism_group(g, group_cap);
  const int start = proper ? chromatic_number(g) : 1;
  if (aut.order() == 1) return start;
  auto check = [&](const std::vector<int>& col) {
    return breaks_all_symmetry(aut, col);
  };
  for (int k = std::max(start, 2); k <= n; ++k)
    if (exists(g, k, proper, check)) return k;
  return n;  // all-distinct colouring always distinguishes
}

}  // namespace

int chromatic_number(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  if (g.edge_count() == 0) return 1;
  auto any = [](const std::vector<int>&) { return true; };
  for (int k = 2; k <= n; ++k)
    if (exists_canonical_colouring_serial(g, k, true, any)) return k;
  return n;
}

int distinguishing_number(const Graph& g, std::uint64_t group_cap) {
  return distinguishing_search(g, group_cap, false,
                               [](const Graph& gg, int k, bool proper,
                                  const auto& check) {
                                 return exists_canonical_colouring(gg, k,
                                                                   proper,
                                                                   check);
                               });
}

int distinguishing_number_serial(const Graph& g, std::uint64_t group_cap) {
  return distinguishing_search(
      g, group_cap, false,
      [](const Graph& gg, int k, bool proper, const auto& check) {
        return exists_canonical_colouring_serial(gg, k, proper, check);
      });
}

int distinguishing_chromatic_number(const Graph& g, std::uint64_t group_cap) {
  return distinguishing_search(g, group_cap, true,
                               [](const Graph& gg, int k, bool proper,
                                  const auto& check) {
                                 return exists_canonical_colouring(gg, k,
                                                                   proper,
                                                                   check);
                               });
}

int distinguishing_chromatic_number_serial(const Graph& g,
                                           std::uint64_t group_cap) {
  return distinguishing_search(
      g, group_cap, true,
      [](const Graph& gg, int k, bool proper, const auto& check) {
        return exists_canonical_colouring_serial(gg, k, proper, check);
      });
}

}  // namespace homdist
