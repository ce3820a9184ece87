#include "homdist/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace homdist {

Graph::Graph(int order) : n_(order) {
  if (order < 0) throw std::invalid_argument("graph order must be >= 0");
  adj_.resize(static_cast<std::size_t>(order));
  mat_.assign(static_cast<std::size_t>(order) * order, 0);
}

void Graph::add_edge_unchecked(int u, int v) {
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  mat_[static_cast<std::size_t>(u) * n_ + v] = 1;
  mat_[static_cast<std::size_t>(v) * n_ + u] = 1;
  ++edge_count_;
}

Graph Graph::from_edges(int order,
                        const std::vector<std::pair<int, int>>& edges) {
  Graph g(order);
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= order || v >= order)
      throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") out of range");
    auto key = std::minmax(u, v);
    if (seen.insert(key).second) g.add_edge_unchecked(key.first, key.second);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

bool Graph::adjacent(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::out_of_range("vertex id out of range");
  return mat_[static_cast<std::size_t>(u) * n_ + v] != 0;
}

const std::vector<int>& Graph::neighbours(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
  return adj_[v];
}

int Graph::degree(int v) const {
  return static_cast<int>(neighbours(v).size());
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::with_names(std::vector<std::string> names) const {
  if (static_cast<int>(names.size()) != n_)
    throw std::invalid_argument("names length must equal graph order");
  Graph g = *this;
  g.names_ = std::move(names);
  return g;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && adj_ == other.adj_ && names_ == other.names_;
}

Graph make_path(int edge_count) {
  if (edge_count < 0) throw std::invalid_argument("path edge count must be >= 0");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < edge_count; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(edge_count + 1, edges);
}

Graph make_cycle(int length) {
  if (length < 3) throw std::invalid_argument("cycle length must be >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < length; ++i) edges.emplace_back(i, (i + 1) % length);
  return Graph::from_edges(length, edges);
}

Graph make_complete(int order) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(order, edges);
}

Graph make_empty(int order) { return Graph(order); }

namespace {

Graph combine(const Graph& x, const Graph& y, bool cross) {
  const int off = x.order();
  std::vector<std::pair<int, int>> edges = x.edges();
  for (auto [u, v] : y.edges()) edges.emplace_back(u + off, v + off);
  if (cross)
    for (int u = 0; u < x.order(); ++u)
      for (int v = 0; v < y.order(); ++v) edges.emplace_back(u, off + v);
  return Graph::from_edges(x.order() + y.order(), edges);
}

}  // namespace

Graph join(const Graph& x, const Graph& y) { return combine(x, y, true); }

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  return combine(g1, g2, false);
}

VertexSubset::VertexSubset(const Graph& g, std::vector<int> m)
    : parent(&g), members(std::move(m)) {
  std::sort(members.begin(), members.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] < 0 || members[i] >= g.order())
      throw std::invalid_argument("subset member " +
                                  std::to_string(members[i]) +
                                  " out of range");
    if (i > 0 && members[i] == members[i - 1])
      throw std::invalid_argument("duplicate subset member " +
                                  std::to_string(members[i]));
  }
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbours(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++visited;
        stack.push_back(u);
      }
    }
  }
  return visited == g.order();
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSubset& s) {
  if (s.parent != &g)
    throw std::invalid_argument("subset does not belong to this graph");
  std::vector<int> back(g.order(), -1);
  for (std::size_t i = 0; i < s.members.size(); ++i)
    back[s.members[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (int u : s.members)
    for (int v : g.neighbours(u))
      if (u < v && back[v] >= 0) edges.emplace_back(back[u], back[v]);
  return {Graph::from_edges(static_cast<int>(s.members.size()), edges),
          s.members};
}

}  // namespace homdist
