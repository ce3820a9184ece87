#include "homdist/cec_check.hpp"

#include <atomic>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace homdist {

namespace {

// One (u, v, T) instance. allowed = V \ (T u N(T) u {u, v}).
bool instance_has_path(const Graph& g, int u, int v,
                       const std::vector<int>& t_set) {
  const int n = g.order();
  std::vector<char> allowed(n, 1);
  allowed[u] = allowed[v] = 0;
  for (int t : t_set) {
    allowed[t] = 0;
    for (int w : g.neighbours(t)) allowed[w] = 0;
  }
  if (u == v) {
    for (int a : g.neighbours(u))
      if (allowed[a]) return true;
    return false;
  }
  // BFS over allowed vertices seeded by allowed neighbours of u; succeed on
  // reaching an allowed neighbour of v.
  std::vector<char> goal(n, 0);
  for (int b : g.neighbours(v)) goal[b] = 1;
  std::vector<char> seen(n, 0);
  std::vector<int> queue;
  for (int a : g.neighbours(u)) {
    if (allowed[a] && !seen[a]) {
      seen[a] = 1;
      queue.push_back(a);
    }
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int x = queue[i];
    if (goal[x]) return true;
    for (int y : g.neighbours(x)) {
      if (allowed[y] && !seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return false;
}

bool pair_ok(const Graph& g, int u, int v, int t_max) {
  if (u != v && g.adjacent(u, v)) return true;  // only non-joined pairs count
  std::vector<int> candidates;
  for (int w = 0; w < g.order(); ++w)
    if (w != u && w != v) candidates.push_back(w);
  std::vector<int> current;
  // visits every T with |T| <= t_max exactly once
  std::function<bool(std::size_t, int)> rec = [&](std::size_t start,
                                                  int remaining) -> bool {
    if (!instance_has_path(g, u, v, current)) return false;
    if (remaining == 0) return true;
    for (std::size_t i = start; i < candidates.size(); ++i) {
      current.push_back(candidates[i]);
      const bool ok = rec(i + 1, remaining - 1);
      current.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return rec(0, t_max);
}

}  // namespace

bool is_cec_bounded_serial(const Graph& g, int t_max) {
  const int n = g.order();
  if (n == 0) return false;
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v)
      if (!pair_ok(g, u, v, t_max)) return false;
  return true;
}

#ifdef _OPENMP

bool is_cec_bounded(const Graph& g, int t_max) {
  const int n = g.order();
  if (n == 0) return false;
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v) pairs.emplace_back(u, v);
  std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (failed.load(std::memory_order_relaxed)) continue;
    if (!pair_ok(g, pairs[i].first, pairs[i].second, t_max))
      failed.store(true);
  }
  return !failed.load();
}

#else

bool is_cec_bounded(const Graph& g, int t_max) {
  return is_cec_bounded_serial(g, t_max);
}

#endif

}  // namespace homdist
