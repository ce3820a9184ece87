#include "homdist/prefix_hom.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace homdist {

namespace {

// H v K2 adjacency on labels: H edges as in H, the two join vertices are
// adjacent to each other and to all of H.
bool join_adjacent(const Graph& h, const PrefixLabel& a, const PrefixLabel& b) {
  if (a.in_h && b.in_h) return h.adjacent(a.value, b.value);
  if (!a.in_h && !b.in_h) return a.value != b.value;
  return true;
}

}  // namespace

PartialHom gs_prefix(const AdjacencyOracle& o, const ConstructionState& st) {
  if (!o.has_colours())
    throw std::invalid_argument("oracle carries no colour map");
  if (st.t < 1)
    throw std::invalid_argument("prefix requires an initialised state");
  const Graph& h = *o.colour_target();

  std::map<OracleVertex, PrefixLabel> labels;
  labels[st.root] = {false, 1};  // distance 0
  for (const auto& br : st.branches)
    for (std::size_t i = 0; i < br.vertices.size(); ++i)
      labels[br.vertices[i]] = {false, (i % 2 == 0) ? 2 : 1};  // distance i+1
  for (OracleVertex v : st.good_side_vertices())
    labels[v] = {true, o.colour(v)};

  PartialHom ph{h, {labels.begin(), labels.end()}};

  for (std::size_t i = 0; i < ph.assignments.size(); ++i)
    for (std::size_t j = i + 1; j < ph.assignments.size(); ++j) {
      const auto& [u, lu] = ph.assignments[i];
      const auto& [v, lv] = ph.assignments[j];
      if (o.adjacent(u, v) && !join_adjacent(h, lu, lv))
        throw std::logic_error(
            "window edge (" + std::to_string(u) + "," + std::to_string(v) +
            ") violates the join edge condition");
    }
  return ph;
}

std::string emit_partial_hom(const PartialHom& ph) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [v, label] : ph.assignments) {
    const std::string tag = label.in_h ? "H:" + std::to_string(label.value)
                                       : "K2:" + std::to_string(label.value);
    arr.push_back(nlohmann::json::array({v, tag}));
  }
  nlohmann::json j;
  j["assignments"] = std::move(arr);
  return j.dump();
}

std::string RigidityReport::to_json() const {
  nlohmann::json j;
  j["window_order"] = window_order;
  j["group_order"] = group_order;
  j["tree_fixed_pointwise"] = tree_fixed_pointwise;
  j["no_pair_swapped"] = no_pair_swapped;
  j["pass"] = pass();
  if (!detail.empty()) j["detail"] = detail;
  return j.dump();
}

RigidityReport prefix_rigidity_check(const AdjacencyOracle& o,
                                     const ConstructionState& st,
                                     const PartialHom& ph,
                                     std::uint64_t group_cap) {
  const int n = static_cast<int>(ph.assignments.size());
  std::map<OracleVertex, int> index;
  for (int i = 0; i < n; ++i) index[ph.assignments[i].first] = i;

  // finite window graph + fibre colouring
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (o.adjacent(ph.assignments[i].first, ph.assignments[j].first))
        edges.emplace_back(i, j);
  const Graph window = Graph::from_edges(n, edges);
  std::vector<int> fibre(n);
  const int h_order = ph.h.order();
  for (int i = 0; i < n; ++i) {
    const PrefixLabel& l = ph.assignments[i].second;
    fibre[i] = l.in_h ? l.value : h_order + (l.value - 1);
  }

  const auto autos = colour_preserving_automorphisms(window, fibre, group_cap);

  RigidityReport r;
  r.window_order = n;
  r.group_order = autos.size();
  r.tree_fixed_pointwise = true;
  r.no_pair_swapped = true;
  for (const auto& alpha : autos) {
    for (OracleVertex v : st.tree_vertices) {
      const int i = index.at(v);
      if (alpha[i] != i) {
        r.tree_fixed_pointwise = false;
        r.detail = "tree vertex " + std::to_string(v) + " moves";
      }
    }
    for (const auto& p : st.good_pairs) {
      const int ix = index.at(p.x), iy = index.at(p.y);
      if (alpha[ix] == iy || alpha[iy] == ix) {
        r.no_pair_swapped = false;
        r.detail = "pair {" + std::to_string(p.x) + "," +
                   std::to_string(p.y) + "} is swapped";
      }
    }
  }
  return r;
}

}  // namespace homdist
