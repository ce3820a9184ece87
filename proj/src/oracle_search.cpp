#include "homdist/oracle_search.hpp"

#include <algorithm>

#include "homdist/errors.hpp"

namespace homdist {

namespace {

bool satisfies(const AdjacencyOracle& o, OracleVertex w,
               const ScanConstraints& c) {
  for (OracleVertex x : c.exclude)
    if (w == x) return false;
  for (OracleVertex m : c.must_adjacent)
    if (!o.adjacent(w, m)) return false;
  for (OracleVertex a : c.avoid)
    if (w == a || o.adjacent(w, a)) return false;
  return true;
}

}  // namespace

std::optional<OracleVertex> scan_witness(const AdjacencyOracle& o,
                                         OracleVertex from, OracleVertex cap,
                                         const ScanConstraints& c) {
  return scan_witness_bounded(o, from, cap, c, nullptr);
}

std::optional<OracleVertex> scan_witness_bounded(const AdjacencyOracle& o,
                                                 OracleVertex from,
                                                 OracleVertex cap,
                                                 const ScanConstraints& c,
                                                 std::uint64_t* work) {
  auto spend = [&]() {
    if (!work) return true;
    if (*work == 0) return false;
    --*work;
    return true;
  };
  if (c.must_adjacent.empty()) {
    for (OracleVertex w = from; w <= cap; ++w) {
      if (!spend()) return std::nullopt;
      if (satisfies(o, w, c)) return w;
    }
    return std::nullopt;
  }
  // enumerate candidates through one must-neighbourhood; the largest pivot
  // tends to have the sparsest neighbourhood on structured oracles
  const OracleVertex pivot =
      *std::max_element(c.must_adjacent.begin(), c.must_adjacent.end());
  OracleVertex w = from;
  while (true) {
    auto cand = o.next_neighbor_at_least(pivot, w, cap);
    if (!cand) return std::nullopt;
    if (!spend()) return std::nullopt;
    w = *cand;
    if (satisfies(o, w, c)) return w;
    if (w == cap) return std::nullopt;
    ++w;
  }
}

namespace {

void require_outside_avoid(OracleVertex u,
                           const std::vector<OracleVertex>& avoid) {
  if (std::find(avoid.begin(), avoid.end(), u) != avoid.end())
    throw std::invalid_argument("endpoint " + std::to_string(u) +
                                " is in the avoid set");
}

void erase_all(std::vector<OracleVertex>& xs, OracleVertex v) {
  xs.erase(std::remove(xs.begin(), xs.end(), v), xs.end());
}

}  // namespace

OracleVertex fresh_neighbor(const AdjacencyOracle& o, OracleVertex u,
                            const std::vector<OracleVertex>& avoid,
                            WitnessBudget b) {
  require_outside_avoid(u, avoid);
  ScanConstraints c{{u}, avoid, {u}};
  if (auto w = scan_witness(o, 0, b.cap, c)) return *w;
  throw SearchExhausted(b.cap);
}

OracleVertex fresh_common_neighbor(const AdjacencyOracle& o, OracleVertex u,
                                   OracleVertex v,
                                   const std::vector<OracleVertex>& avoid,
                                   WitnessBudget b) {
  if (u == v) throw std::invalid_argument("endpoints must be distinct");
  require_outside_avoid(u, avoid);
  require_outside_avoid(v, avoid);
  ScanConstraints c{{u, v}, avoid, {u, v}};
  if (auto w = scan_witness(o, 0, b.cap, c)) return *w;
  throw SearchExhausted(b.cap);
}

namespace {

// Backtracking searches are bounded by the number of candidates their
// scans may yield in total, so hopeless search spaces die quickly on both
// sparse-neighbourhood and dense-neighbourhood oracles.
constexpr std::uint64_t kSearchWork = 8'000'000;

bool grow_from(const AdjacencyOracle& o, OracleVertex start, int count,
               const std::vector<OracleVertex>& base_avoid, OracleVertex cap,
               std::vector<OracleVertex>& placed, std::uint64_t& work) {
  if (static_cast<int>(placed.size()) == count) return true;
  const OracleVertex prev = placed.empty() ? start : placed.back();
  ScanConstraints c;
  c.must_adjacent = {prev};
  c.avoid = base_avoid;
  c.avoid.push_back(start);
  for (std::size_t i = 0; i + 1 < placed.size(); ++i)
    c.avoid.push_back(placed[i]);
  erase_all(c.avoid, prev);
  OracleVertex from = 0;
  while (true) {
    auto w = scan_witness_bounded(o, from, cap, c, &work);
    if (!w) break;
    placed.push_back(*w);
    if (grow_from(o, start, count, base_avoid, cap, placed, work))
      return true;
    placed.pop_back();
    if (*w == cap) break;
    from = *w + 1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<OracleVertex>> grow_induced_chain(
    const AdjacencyOracle& o, OracleVertex start, int count,
    const std::vector<OracleVertex>& base_avoid, WitnessBudget b) {
  std::vector<OracleVertex> placed;
  placed.reserve(count);
  std::uint64_t work = kSearchWork;
  if (grow_from(o, start, count, base_avoid, b.cap, placed, work))
    return placed;
  return std::nullopt;
}

namespace {

struct ChainProblem {
  const AdjacencyOracle* o;
  OracleVertex cap;
  OracleVertex start;
  OracleVertex target;
  const std::vector<OracleVertex>* base_avoid;
  const std::vector<OracleVertex>* extra_exclude;
  bool start_internal;
  int min_internals;
  int max_internals;
};

// Closing onto the target is tried before extending at each depth, so the
// first chain found is shortest under the ascending scan order.
std::optional<std::vector<OracleVertex>> chain_from(
    const ChainProblem& p, std::vector<OracleVertex>& placed,
    std::uint64_t& work) {
  const int depth = static_cast<int>(placed.size()) + 1;
  const OracleVertex prev = placed.empty() ? p.start : placed.back();

  std::vector<OracleVertex> avoid = *p.base_avoid;
  for (std::size_t i = 0; i + 1 < placed.size(); ++i)
    avoid.push_back(placed[i]);
  if (p.start_internal && depth >= 2) avoid.push_back(p.start);
  erase_all(avoid, prev);

  if (depth >= p.min_internals) {
    ScanConstraints close{{prev, p.target}, avoid, *p.extra_exclude};
    if (auto w = scan_witness_bounded(*p.o, 0, p.cap, close, &work)) {
      placed.push_back(*w);
      return placed;
    }
  }
  if (depth < p.max_internals) {
    ScanConstraints extend{{prev}, avoid, *p.extra_exclude};
    extend.exclude.push_back(p.target);
    OracleVertex from = 0;
    while (true) {
      auto w = scan_witness_bounded(*p.o, from, p.cap, extend, &work);
      if (!w) break;
      placed.push_back(*w);
      if (auto result = chain_from(p, placed, work)) return result;
      placed.pop_back();
      if (*w == p.cap) break;
      from = *w + 1;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<OracleVertex>> induced_chain_to_target(
    const AdjacencyOracle& o, OracleVertex start, OracleVertex target,
    const std::vector<OracleVertex>& base_avoid,
    const std::vector<OracleVertex>& extra_exclude, bool start_internal,
    int min_internals, int max_internals, WitnessBudget b) {
  ChainProblem p{&o,          b.cap,         start,        target,
                 &base_avoid, &extra_exclude, start_internal, min_internals,
                 max_internals};
  std::vector<OracleVertex> placed;
  std::uint64_t work = kSearchWork;
  return chain_from(p, placed, work);
}

std::vector<OracleVertex> cec_witness_path(
    const AdjacencyOracle& o, OracleVertex u, OracleVertex v,
    const std::vector<OracleVertex>& avoid, WitnessBudget b) {
  require_outside_avoid(u, avoid);
  require_outside_avoid(v, avoid);
  if (u != v && o.adjacent(u, v)) throw AdjacentEndpoints();

  constexpr int kMaxInternals = 5;
  auto internals = induced_chain_to_target(o, u, v, avoid, {u, v}, false,
                                           u == v ? 2 : 1, kMaxInternals, b);
  if (!internals) throw SearchExhausted(b.cap);
  std::vector<OracleVertex> path{u};
  path.insert(path.end(), internals->begin(), internals->end());
  path.push_back(v);
  return path;
}

}  // namespace homdist
