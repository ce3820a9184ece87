#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "homdist/graph.hpp"

namespace homdist {

/// Vertices of a countable graph are naturals.
using OracleVertex = std::uint64_t;

/// Decidable adjacency over the naturals, optionally with a canonical
/// homomorphism onto a finite graph. Implementations must be symmetric,
/// irreflexive, and deterministic.
class AdjacencyOracle {
 public:
  virtual ~AdjacencyOracle() = default;
  virtual bool adjacent(OracleVertex u, OracleVertex v) const = 0;

  /// Least neighbour of u in [lo, cap], or nothing. Must agree with
  /// adjacent(); the default linear-scans, structured oracles override it
  /// so witness scans can skip non-neighbours.
  virtual std::optional<OracleVertex> next_neighbor_at_least(
      OracleVertex u, OracleVertex lo, OracleVertex cap) const;

  /// Codomain of the canonical colour map, if one is attached.
  virtual const Graph* colour_target() const { return nullptr; }
  virtual int colour(OracleVertex v) const;
  bool has_colours() const { return colour_target() != nullptr; }
};

/// The three built-in oracle kinds; value type with a JSON spec form.
class GraphOracle final : public AdjacencyOracle {
 public:
  enum class Kind { RadoBit, RandomBipartite, RandomHColourable };

  /// Rado graph via the BIT predicate: for u < v, adjacent iff bit u of v
  /// is set. Deterministic, no seed.
  static GraphOracle rado();

  /// Even ids on one side, odd on the other; cross pairs adjacent with
  /// probability 1/2 under a seeded hash. Colour map is parity onto K2.
  static GraphOracle random_bipartite(std::uint64_t seed);

  /// colour(n) = n mod |V(h)|; a pair is adjacent iff its colours are
  /// adjacent in h and the seeded hash agrees. Requires h connected with at
  /// least two vertices.
  static GraphOracle random_h_colourable(Graph h, std::uint64_t seed);

  bool adjacent(OracleVertex u, OracleVertex v) const override;
  std::optional<OracleVertex> next_neighbor_at_least(
      OracleVertex u, OracleVertex lo, OracleVertex cap) const override;
  const Graph* colour_target() const override;
  int colour(OracleVertex v) const override;

  Kind kind() const { return kind_; }
  std::uint64_t seed() const { return seed_; }

  /// {"kind":"rado-bit"} | {"kind":"random-bipartite","seed":<u64>} |
  /// {"kind":"random-h-colourable","seed":<u64>,"h":<Graph JSON>}
  std::string spec_json() const;
  static GraphOracle from_spec_json(const std::string& bytes);

 private:
  GraphOracle(Kind kind, std::uint64_t seed, std::optional<Graph> h);
  void self_check() const;

  Kind kind_;
  std::uint64_t seed_ = 0;
  std::optional<Graph> h_;
};

/// Keyed 64-bit mix used by the seeded oracles; order-independent in the
/// vertex pair because callers normalise to (min, max).
std::uint64_t oracle_pair_hash(std::uint64_t seed, OracleVertex a,
                               OracleVertex b);

}  // namespace homdist
