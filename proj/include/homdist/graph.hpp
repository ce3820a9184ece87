#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homdist {

/// Finite simple undirected graph on dense vertex ids 0..n-1.
///
/// Adjacency is symmetric and irreflexive by construction. Instances are
/// immutable once built; all combinators return new graphs. Optional
/// per-vertex names are cosmetic and ignored by every algorithm.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  /// Builds a graph from an edge list. Edges may appear in either
  /// orientation and duplicates collapse. Throws on self-loops or ids
  /// outside [0, order).
  static Graph from_edges(int order,
                          const std::vector<std::pair<int, int>>& edges);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool adjacent(int u, int v) const;
  const std::vector<int>& neighbours(int v) const;
  int degree(int v) const;

  bool has_names() const noexcept { return !names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  Graph with_names(std::vector<std::string> names) const;

  bool operator==(const Graph& other) const;

 private:
  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<int>> adj_;  // sorted neighbour lists
  std::vector<char> mat_;              // n*n adjacency matrix
  std::vector<std::string> names_;

  void add_edge_unchecked(int u, int v);
  friend Graph graph_from_sorted_unique_edges(
      int order, const std::vector<std::pair<int, int>>& edges);
};

/// Path with k edges (k + 1 vertices, consecutive ids adjacent). k = 0 gives
/// a single isolated vertex.
Graph make_path(int edge_count);

/// Cycle of length k, k >= 3. Throws std::invalid_argument otherwise.
Graph make_cycle(int length);

/// Complete graph on k vertices.
Graph make_complete(int order);

/// Edgeless graph on k vertices.
Graph make_empty(int order);

/// Join x v y: disjoint copies plus all cross edges. Vertex i of y becomes
/// id |V(x)| + i.
Graph join(const Graph& x, const Graph& y);

/// Disjoint union with the same id-offset convention as join.
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Subset of a graph's vertices, sorted and distinct.
struct VertexSubset {
  VertexSubset(const Graph& parent, std::vector<int> members);
  const Graph* parent;
  std::vector<int> members;  // sorted, distinct, all < parent->order()
};

struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_ids;  // new id i -> original id
};

/// Induced subgraph on the given vertices, plus the re-indexing map.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSubset& s);

/// True for the empty graph and any graph with one component.
bool is_connected(const Graph& g);

}  // namespace homdist
