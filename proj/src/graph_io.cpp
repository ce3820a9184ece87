#include "homdist/graph_io.hpp"

#include <set>
#include <sstream>

#include "homdist/errors.hpp"
#include "json.hpp"

namespace homdist {

using nlohmann::json;

Graph parse_graph(const std::string& bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("graph JSON must be an object with integer field \"n\"");
  const int n = j["n"].get<int>();
  if (n < 0) throw ParseError("\"n\" must be >= 0");

  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        throw ParseError("edge entry " + e.dump() + " must be a pair [u,v]");
      const int u = e[0].get<int>();
      const int v = e[1].get<int>();
      if (u == v)
        throw ParseError("edge entry " + e.dump() + " is a self-loop");
      if (u > v)
        throw ParseError("edge entry " + e.dump() +
                         " must be stored with u < v");
      if (u < 0 || v >= n)
        throw ParseError("edge entry " + e.dump() + " is out of range");
      if (!seen.insert({u, v}).second)
        throw ParseError("duplicate edge entry " + e.dump());
      edges.emplace_back(u, v);
    }
  }
  Graph g = Graph::from_edges(n, edges);
  if (j.contains("names")) {
    if (!j["names"].is_array() || static_cast<int>(j["names"].size()) != n)
      throw ParseError("\"names\" must be an array of length n");
    std::vector<std::string> names;
    for (const auto& s : j["names"]) {
      if (!s.is_string())
        throw ParseError("name entry " + s.dump() + " must be a string");
      names.push_back(s.get<std::string>());
    }
    g = g.with_names(std::move(names));
  }
  return g;
}

std::string emit_graph_json(const Graph& g) {
  json j;
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  j["edges"] = std::move(edges);
  j["n"] = g.order();
  if (g.has_names()) j["names"] = g.names();
  return j.dump();
}

std::string emit_graph_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string emit_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::Json ? emit_graph_json(g) : emit_graph_dot(g);
}

}  // namespace homdist
