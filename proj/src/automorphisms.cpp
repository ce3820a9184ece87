#include "homdist/automorphisms.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <stdexcept>

#include "homdist/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace homdist {

namespace {

struct RefineItem {
  const Graph* g;
  std::vector<int>* col;
};

// Neighbour-colour refinement (1-WL) over one or two graphs with a shared
// signature table, so equal signatures get equal ids across graphs. Any
// colour-preserving isomorphism also preserves the refined colours.
void refine_colours(std::vector<RefineItem> items) {
  using Sig = std::pair<int, std::vector<int>>;
  std::size_t classes = 0;
  while (true) {
    std::map<Sig, int> table;
    std::vector<std::vector<Sig>> sigs(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
      const Graph& g = *items[i].g;
      const std::vector<int>& col = *items[i].col;
      sigs[i].reserve(g.order());
      for (int v = 0; v < g.order(); ++v) {
        std::vector<int> around;
        around.reserve(g.neighbours(v).size());
        for (int u : g.neighbours(v)) around.push_back(col[u]);
        std::sort(around.begin(), around.end());
        Sig s{col[v], std::move(around)};
        table.emplace(s, 0);
        sigs[i].push_back(std::move(s));
      }
    }
    int next = 0;
    for (auto& [sig, id] : table) id = next++;
    for (std::size_t i = 0; i < items.size(); ++i)
      for (int v = 0; v < items[i].g->order(); ++v)
        (*items[i].col)[v] = table[sigs[i][v]];
    if (table.size() == classes) break;
    classes = table.size();
  }
}

// Assignment order: rarest refined colour first, then greedily prefer
// vertices with already-ordered neighbours so adjacency pruning bites early.
std::vector<int> assignment_order(const Graph& g, const std::vector<int>& col) {
  const int n = g.order();
  std::vector<int> class_size(n == 0 ? 1 : *std::max_element(col.begin(), col.end()) + 1, 0);
  if (n == 0) return {};
  for (int v = 0; v < n; ++v) ++class_size[col[v]];
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  std::vector<int> placed_nbrs(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best == -1) {
        best = v;
        continue;
      }
      auto key = [&](int x) {
        return std::tuple(-placed_nbrs[x], class_size[col[x]], col[x], x);
      };
      if (key(v) < key(best)) best = v;
    }
    placed[best] = 1;
    order.push_back(best);
    for (int u : g.neighbours(best)) ++placed_nbrs[u];
  }
  return order;
}

struct SearchContext {
  const Graph* g;
  const Graph* h;
  const std::vector<int>* cg;
  const std::vector<int>* ch;
  std::vector<int> order;
};

// Enumerates colour-preserving isomorphisms g -> h along the fixed order.
// sink returns false to stop the whole search.
template <typename Sink>
bool search_from(const SearchContext& ctx, std::size_t depth, Permutation& map,
                 std::vector<char>& used, Sink&& sink) {
  const Graph& g = *ctx.g;
  const Graph& h = *ctx.h;
  if (depth == ctx.order.size()) return sink(map);
  const int v = ctx.order[depth];
  for (int w = 0; w < h.order(); ++w) {
    if (used[w] || (*ctx.ch)[w] != (*ctx.cg)[v]) continue;
    bool ok = true;
    for (std::size_t d = 0; d < depth; ++d) {
      const int u = ctx.order[d];
      if (g.adjacent(v, u) != h.adjacent(w, map[u])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    map[v] = w;
    used[w] = 1;
    if (!search_from(ctx, depth + 1, map, used, sink)) return false;
    used[w] = 0;
  }
  return true;
}

SearchContext make_self_context(const Graph& g, std::vector<int>& col) {
  refine_colours({{&g, &col}});
  return SearchContext{&g, &g, &col, &col, assignment_order(g, col)};
}

}  // namespace

PermGroup automorphism_group_serial(const Graph& g, std::uint64_t cap) {
  std::vector<int> col(g.order(), 0);
  SearchContext ctx = make_self_context(g, col);
  std::vector<Permutation> found;
  Permutation map(g.order(), -1);
  std::vector<char> used(g.order(), 0);
  bool too_large = false;
  search_from(ctx, 0, map, used, [&](const Permutation& p) {
    found.push_back(p);
    if (found.size() > cap) {
      too_large = true;
      return false;
    }
    return true;
  });
  if (too_large) throw GroupTooLarge(cap);
  return make_perm_group(g.order(), std::move(found));
}

#ifdef _OPENMP

PermGroup automorphism_group(const Graph& g, std::uint64_t cap) {
  if (g.order() == 0) return make_perm_group(0, {Permutation{}});
  std::vector<int> col(g.order(), 0);
  SearchContext ctx = make_self_context(g, col);
  const int v0 = ctx.order[0];
  std::vector<int> tops;
  for (int w = 0; w < g.order(); ++w)
    if ((*ctx.ch)[w] == (*ctx.cg)[v0]) tops.push_back(w);

  std::vector<std::vector<Permutation>> blocks(tops.size());
  std::atomic<std::uint64_t> total{0};
  std::atomic<bool> overflow{false};
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < tops.size(); ++i) {
    if (overflow.load()) continue;
    Permutation map(g.order(), -1);
    std::vector<char> used(g.order(), 0);
    map[v0] = tops[i];
    used[tops[i]] = 1;
    search_from(ctx, 1, map, used, [&](const Permutation& p) {
      blocks[i].push_back(p);
      if (total.fetch_add(1) + 1 > cap) {
        overflow.store(true);
        return false;
      }
      return true;
    });
  }
  if (overflow.load()) throw GroupTooLarge(cap);
  std::vector<Permutation> found;
  for (auto& b : blocks)
    found.insert(found.end(), std::make_move_iterator(b.begin()),
                 std::make_move_iterator(b.end()));
  return make_perm_group(g.order(), std::move(found));
}

#else

PermGroup automorphism_group(const Graph& g, std::uint64_t cap) {
  return automorphism_group_serial(g, cap);
}

#endif

std::vector<Permutation> colour_preserving_automorphisms(
    const Graph& g, const std::vector<int>& colours, std::uint64_t cap) {
  if (static_cast<int>(colours.size()) != g.order())
    throw std::invalid_argument("colour vector length must equal graph order");
  std::vector<int> col = colours;
  SearchContext ctx = make_self_context(g, col);
  std::vector<Permutation> found;
  Permutation map(g.order(), -1);
  std::vector<char> used(g.order(), 0);
  bool too_large = false;
  search_from(ctx, 0, map, used, [&](const Permutation& p) {
    found.push_back(p);
    if (found.size() > cap) {
      too_large = true;
      return false;
    }
    return true;
  });
  if (too_large) throw GroupTooLarge(cap);
  std::sort(found.begin(), found.end());
  return found;
}

std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count())
    return std::nullopt;
  std::vector<int> cg(g.order(), 0), ch(h.order(), 0);
  refine_colours({{&g, &cg}, {&h, &ch}});
  {
    std::vector<int> a = cg, b = ch;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  SearchContext ctx{&g, &h, &cg, &ch, assignment_order(g, cg)};
  std::optional<Permutation> result;
  Permutation map(g.order(), -1);
  std::vector<char> used(h.order(), 0);
  search_from(ctx, 0, map, used, [&](const Permutation& p) {
    result = p;
    return false;
  });
  return result;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

}  // namespace homdist
