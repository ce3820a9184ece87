#include "homdist/vertex_map.hpp"

#include <algorithm>
#include <stdexcept>

#include "homdist/errors.hpp"
#include "json.hpp"

namespace homdist {

bool is_total_map(const Graph& dom, const Graph& cod, const VertexImage& f) {
  if (static_cast<int>(f.size()) != dom.order()) return false;
  return std::all_of(f.begin(), f.end(), [&](int img) {
    return img >= 0 && img < cod.order();
  });
}

void require_total_map(const Graph& dom, const Graph& cod,
                       const VertexImage& f) {
  if (!is_total_map(dom, cod, f))
    throw std::invalid_argument("map is not a total map into the codomain");
}

std::vector<std::vector<int>> fibre_partition(const Graph& cod,
                                              const VertexImage& f) {
  std::vector<std::vector<int>> cells(cod.order());
  for (int v = 0; v < static_cast<int>(f.size()); ++v) {
    if (f[v] < 0 || f[v] >= cod.order())
      throw std::invalid_argument("image out of codomain range");
    cells[f[v]].push_back(v);
  }
  return cells;
}

VertexImage compose(const VertexImage& f, const VertexImage& g) {
  VertexImage out(f.size());
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (f[v] < 0 || f[v] >= static_cast<int>(g.size()))
      throw std::invalid_argument("compose: codomain of f exceeds domain of g");
    out[v] = g[f[v]];
  }
  return out;
}

std::vector<std::pair<int, int>> restrict_map(const VertexImage& f,
                                              const VertexSubset& s) {
  std::vector<std::pair<int, int>> out;
  out.reserve(s.members.size());
  for (int v : s.members) {
    if (v >= static_cast<int>(f.size()))
      throw std::invalid_argument("subset member outside map domain");
    out.emplace_back(v, f[v]);
  }
  return out;
}

VertexImage parse_vertex_map(const std::string& bytes) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("map") || !j["map"].is_array())
    throw ParseError("vertex map JSON must be {\"map\": [...]}");
  VertexImage f;
  for (const auto& e : j["map"]) {
    if (!e.is_number_integer())
      throw ParseError("map entry " + e.dump() + " must be an integer");
    f.push_back(e.get<int>());
  }
  return f;
}

std::string emit_vertex_map(const VertexImage& f) {
  nlohmann::json j;
  j["map"] = f;
  return j.dump();
}

}  // namespace homdist
