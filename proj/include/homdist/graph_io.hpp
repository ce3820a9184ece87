#pragma once

#include <string>

#include "homdist/graph.hpp"

namespace homdist {

/// Parses the JSON graph format:
///   {"n": <int>=0>, "edges": [[u,v],...] with 0 <= u < v < n,
///    "names": [<string>,...] optional, length n}
/// Throws ParseError naming the offending entry on self-loops, reversed or
/// duplicate edges, out-of-range ids, or malformed JSON.
Graph parse_graph(const std::string& bytes);

/// Compact JSON, edges once per edge with u < v, sorted by (u, v).
/// parse_graph(emit_graph_json(g)) reproduces g exactly.
std::string emit_graph_json(const Graph& g);

/// DOT text: one node line per vertex, then one edge line per edge,
/// edges sorted by (u, v).
std::string emit_graph_dot(const Graph& g);

enum class GraphFormat { Json, Dot };

std::string emit_graph(const Graph& g, GraphFormat format);

}  // namespace homdist
