#include "homdist/oracle.hpp"

#include <stdexcept>

#include "homdist/errors.hpp"
#include "homdist/graph_io.hpp"
#include "json.hpp"

namespace homdist {

int AdjacencyOracle::colour(OracleVertex) const {
  throw std::logic_error("oracle carries no colour map");
}

std::optional<OracleVertex> AdjacencyOracle::next_neighbor_at_least(
    OracleVertex u, OracleVertex lo, OracleVertex cap) const {
  for (OracleVertex w = lo; w <= cap; ++w)
    if (adjacent(u, w)) return w;
  return std::nullopt;
}

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t oracle_pair_hash(std::uint64_t seed, OracleVertex a,
                               OracleVertex b) {
  return mix64(mix64(mix64(seed) ^ a) ^ b);
}

GraphOracle::GraphOracle(Kind kind, std::uint64_t seed, std::optional<Graph> h)
    : kind_(kind), seed_(seed), h_(std::move(h)) {
  self_check();
}

GraphOracle GraphOracle::rado() {
  return GraphOracle(Kind::RadoBit, 0, std::nullopt);
}

GraphOracle GraphOracle::random_bipartite(std::uint64_t seed) {
  return GraphOracle(Kind::RandomBipartite, seed, make_complete(2));
}

GraphOracle GraphOracle::random_h_colourable(Graph h, std::uint64_t seed) {
  if (h.order() < 2 || !is_connected(h))
    throw std::invalid_argument(
        "colour target must be connected with at least 2 vertices");
  return GraphOracle(Kind::RandomHColourable, seed, std::move(h));
}

bool GraphOracle::adjacent(OracleVertex u, OracleVertex v) const {
  if (u == v) return false;
  const OracleVertex a = std::min(u, v);
  const OracleVertex b = std::max(u, v);
  switch (kind_) {
    case Kind::RadoBit:
      return a < 64 && (b >> a & 1) != 0;
    case Kind::RandomBipartite:
      if (a % 2 == b % 2) return false;
      return (oracle_pair_hash(seed_, a, b) & 1) == 0;
    case Kind::RandomHColourable:
      if (!h_->adjacent(colour(a), colour(b))) return false;
      return (oracle_pair_hash(seed_, a, b) & 1) == 0;
  }
  return false;
}

std::optional<OracleVertex> GraphOracle::next_neighbor_at_least(
    OracleVertex u, OracleVertex lo, OracleVertex cap) const {
  switch (kind_) {
    case Kind::RadoBit: {
      // small side: set-bit positions of u; large side: ids with bit u set
      std::optional<OracleVertex> best;
      for (OracleVertex p = lo; p < 64 && p <= cap; ++p)
        if (p < u && (u >> p & 1)) {
          best = p;
          break;
        }
      if (u <= 62) {
        const OracleVertex block = OracleVertex{1} << (u + 1);
        const OracleVertex half = OracleVertex{1} << u;
        OracleVertex start = std::max(lo, half);
        OracleVertex base = (start / block) * block;
        OracleVertex cand;
        if (start < base + half)
          cand = base + half;
        else if (start < base + block)
          cand = start;
        else
          cand = base + block + half;
        if (cand <= cap && (!best || cand < *best)) best = cand;
      }
      if (best && *best <= cap) return best;
      return std::nullopt;
    }
    case Kind::RandomBipartite: {
      OracleVertex w = lo;
      if (w % 2 == u % 2) ++w;
      for (; w <= cap; w += 2)
        if ((oracle_pair_hash(seed_, std::min(u, w), std::max(u, w)) & 1) ==
                0 &&
            w != u)
          return w;
      return std::nullopt;
    }
    case Kind::RandomHColourable: {
      const int cu = colour(u);
      for (OracleVertex w = lo; w <= cap; ++w) {
        if (w == u || !h_->adjacent(cu, colour(w))) continue;
        if ((oracle_pair_hash(seed_, std::min(u, w), std::max(u, w)) & 1) == 0)
          return w;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

const Graph* GraphOracle::colour_target() const {
  return h_ ? &*h_ : nullptr;
}

int GraphOracle::colour(OracleVertex v) const {
  if (!h_) throw std::logic_error("oracle carries no colour map");
  return static_cast<int>(v % h_->order());
}

void GraphOracle::self_check() const {
  for (OracleVertex v = 0; v < 64; ++v) {
    if (adjacent(v, v)) throw std::logic_error("oracle is not irreflexive");
    for (OracleVertex u = 0; u < v; ++u) {
      if (adjacent(u, v) != adjacent(v, u))
        throw std::logic_error("oracle is not symmetric");
      if (h_ && adjacent(u, v) && !h_->adjacent(colour(u), colour(v)))
        throw std::logic_error("colour map is not a homomorphism");
    }
  }
}

std::string GraphOracle::spec_json() const {
  nlohmann::json j;
  switch (kind_) {
    case Kind::RadoBit:
      j["kind"] = "rado-bit";
      break;
    case Kind::RandomBipartite:
      j["kind"] = "random-bipartite";
      j["seed"] = seed_;
      break;
    case Kind::RandomHColourable:
      j["kind"] = "random-h-colourable";
      j["seed"] = seed_;
      j["h"] = nlohmann::json::parse(emit_graph_json(*h_));
      break;
  }
  return j.dump();
}

GraphOracle GraphOracle::from_spec_json(const std::string& bytes) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("oracle spec must be an object with a \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  auto seed_of = [&]() -> std::uint64_t {
    if (!j.contains("seed") || !j["seed"].is_number_unsigned())
      throw ParseError("oracle spec requires an unsigned \"seed\"");
    return j["seed"].get<std::uint64_t>();
  };
  if (kind == "rado-bit") return rado();
  if (kind == "random-bipartite") return random_bipartite(seed_of());
  if (kind == "random-h-colourable") {
    std::uint64_t seed = seed_of();
    if (!j.contains("h"))
      throw ParseError("random-h-colourable spec requires \"h\"");
    return random_h_colourable(parse_graph(j["h"].dump()), seed);
  }
  throw ParseError("unknown oracle kind \"" + kind + "\"");
}

}  // namespace homdist
