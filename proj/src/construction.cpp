#include "homdist/construction.hpp"

#include <algorithm>
#include <stdexcept>

#include "homdist/errors.hpp"
#include "json.hpp"

namespace homdist {

std::vector<OracleVertex> ConstructionState::good_side_vertices() const {
  std::set<OracleVertex> s;
  for (const auto& p : good_pairs) {
    s.insert(p.x);
    s.insert(p.y);
  }
  return {s.begin(), s.end()};
}

bool ConstructionState::pair_is_bad(OracleVertex a, OracleVertex b) const {
  return tree_vertices.count(a) || tree_vertices.count(b);
}

ConstructionState init_construction(const AdjacencyOracle& o,
                                    const BranchSpec& s, WitnessBudget b,
                                    std::string oracle_spec) {
  const OraclePair first = pair_enumeration(1);
  const OracleVertex x = first.a, y = first.b;
  const OracleVertex root = fresh_neighbor(o, x, {y}, b);

  ConstructionState st;
  st.oracle_spec = std::move(oracle_spec);
  st.spec = s;
  st.budget = b;
  st.t = 1;
  st.root = root;
  st.tree_vertices = {root};
  st.good_pairs = {{x, y, root, 1}};
  st.cursor = 2;
  return st;
}

namespace {

// The separator branch Q in one backtracking search: a fresh neighbour of
// the root, an induced chain reaching a witness adjacent to x, then the
// lengthening to an unused in-spec length. Built jointly because a witness
// choice can dead-end the lengthening (small ids run dry on the BIT
// oracle), which only deeper backtracking can repair.
struct QBranch {
  std::vector<OracleVertex> vertices;  // root-neighbour first, tip last
  std::size_t witness_pos;             // index of the witness within vertices
};

struct QSearch {
  const AdjacencyOracle* o;
  OracleVertex cap;
  OracleVertex x;
  const BranchSpec* spec;
  const std::set<std::uint64_t>* used;
  std::uint64_t k;
  std::vector<OracleVertex> pre_avoid;  // T'' minus x
  std::vector<OracleVertex> ext_avoid;  // T'' (x back in)
  std::vector<OracleVertex> placed;     // root-neighbour first
  std::size_t witness_pos = 0;
  std::uint64_t work = 16'000'000;      // candidate-visit allowance
};

constexpr std::size_t kMaxPreWitness = 7;  // root-neighbour plus internals

std::vector<OracleVertex> with_placed(const std::vector<OracleVertex>& base,
                                      const std::vector<OracleVertex>& placed,
                                      OracleVertex prev) {
  std::vector<OracleVertex> avoid = base;
  for (OracleVertex v : placed)
    if (v != prev) avoid.push_back(v);
  avoid.erase(std::remove(avoid.begin(), avoid.end(), prev), avoid.end());
  return avoid;
}

bool extend_tail(QSearch& q, std::uint64_t remaining) {
  if (remaining == 0) return true;
  const OracleVertex prev = q.placed.back();
  ScanConstraints c{{prev}, with_placed(q.ext_avoid, q.placed, prev), {}};
  OracleVertex from = 0;
  while (true) {
    auto w = scan_witness_bounded(*q.o, from, q.cap, c, &q.work);
    if (!w) return false;
    q.placed.push_back(*w);
    if (extend_tail(q, remaining - 1)) return true;
    q.placed.pop_back();
    if (*w == q.cap) return false;
    from = *w + 1;
  }
  return false;
}

bool search_pre_witness(QSearch& q) {
  const OracleVertex prev = q.placed.back();
  const auto avoid = with_placed(q.pre_avoid, q.placed, prev);

  // close: the next vertex doubles as the separation witness
  ScanConstraints close{{prev, q.x}, avoid, {q.x}};
  OracleVertex from = 0;
  while (true) {
    auto w = scan_witness_bounded(*q.o, from, q.cap, close, &q.work);
    if (!w) break;
    q.placed.push_back(*w);
    const std::uint64_t chain_len = q.placed.size();
    std::uint64_t q_len = q.spec->next_at_least(chain_len + 1);
    while (q_len == q.k || q.used->count(q_len))
      q_len = q.spec->next_at_least(q_len + 1);
    q.witness_pos = q.placed.size() - 1;
    if (extend_tail(q, q_len - chain_len)) return true;
    q.placed.pop_back();
    if (*w == q.cap) break;
    from = *w + 1;
  }

  if (q.placed.size() < kMaxPreWitness) {
    ScanConstraints extend{{prev}, avoid, {q.x}};
    from = 0;
    while (true) {
      auto w = scan_witness_bounded(*q.o, from, q.cap, extend, &q.work);
      if (!w) break;
      q.placed.push_back(*w);
      if (search_pre_witness(q)) return true;
      q.placed.pop_back();
      if (*w == q.cap) break;
      from = *w + 1;
    }
  }
  return false;
}

std::optional<QBranch> build_q_branch(const AdjacencyOracle& o,
                                      OracleVertex root, OracleVertex x,
                                      const std::set<OracleVertex>& t2,
                                      const BranchSpec& spec,
                                      const std::set<std::uint64_t>& used,
                                      std::uint64_t k, WitnessBudget b) {
  QSearch q;
  q.o = &o;
  q.cap = b.cap;
  q.x = x;
  q.spec = &spec;
  q.used = &used;
  q.k = k;
  q.pre_avoid.assign(t2.begin(), t2.end());
  q.pre_avoid.erase(std::remove(q.pre_avoid.begin(), q.pre_avoid.end(), x),
                    q.pre_avoid.end());
  q.ext_avoid.assign(t2.begin(), t2.end());

  ScanConstraints first;
  first.must_adjacent = {root};
  first.avoid.assign(t2.begin(), t2.end());
  first.avoid.erase(std::remove(first.avoid.begin(), first.avoid.end(), root),
                    first.avoid.end());
  OracleVertex from = 0;
  while (true) {
    auto z1p = scan_witness_bounded(o, from, b.cap, first, &q.work);
    if (!z1p) break;
    q.placed = {*z1p};
    if (search_pre_witness(q)) return QBranch{q.placed, q.witness_pos};
    if (*z1p == b.cap) break;
    from = *z1p + 1;
  }
  return std::nullopt;
}

}  // namespace

ConstructionState step(const AdjacencyOracle& o, const ConstructionState& st) {
  if (st.t < 1)
    throw std::invalid_argument("step requires an initialised state");
  const WitnessBudget b = st.budget;

  // 1. first good unprocessed pair; unprocessed pairs are never bad, so this
  //    is the first enumerated pair that neither meets the tree nor was
  //    already chosen.
  std::uint64_t idx = st.cursor;
  OraclePair pair = pair_enumeration(idx);
  while (st.pair_is_bad(pair.a, pair.b)) pair = pair_enumeration(++idx);
  const OracleVertex x = pair.a, y = pair.b;

  // 2. avoid set T': good-side vertices, the tree, and the pair itself
  std::set<OracleVertex> t1(st.tree_vertices);
  for (const auto& p : st.good_pairs) {
    t1.insert(p.x);
    t1.insert(p.y);
  }
  t1.insert(x);
  t1.insert(y);

  // 3. branch of the shortest missing spec length, grown at the root
  const std::uint64_t k = st.spec.next_missing(st.used_lengths);
  std::vector<OracleVertex> t1_vec(t1.begin(), t1.end());
  auto branch_k = grow_induced_chain(o, st.root, static_cast<int>(k), t1_vec, b);
  if (!branch_k) throw SearchExhausted(b.cap);

  // 4. separator branch: witness adjacent to x (hence not to y), lengthened
  //    to an unused in-spec length in the same search
  std::set<OracleVertex> t2(t1);
  t2.insert(branch_k->begin(), branch_k->end());
  auto q_branch = build_q_branch(o, st.root, x, t2, st.spec, st.used_lengths,
                                 k, b);
  if (!q_branch) throw SearchExhausted(b.cap);
  const OracleVertex witness = q_branch->vertices[q_branch->witness_pos];
  const std::uint64_t q_len = q_branch->vertices.size();

  // 5. commit
  ConstructionState ns = st;
  ns.branches.push_back({k, *branch_k});
  ns.branches.push_back({q_len, q_branch->vertices});
  ns.used_lengths.insert(k);
  ns.used_lengths.insert(q_len);
  ns.tree_vertices.insert(branch_k->begin(), branch_k->end());
  ns.tree_vertices.insert(q_branch->vertices.begin(),
                          q_branch->vertices.end());
  ns.good_pairs.push_back({x, y, witness, idx});
  ns.cursor = idx + 1;
  ns.t += 1;
  return ns;
}

ConstructionState run(const AdjacencyOracle& o, const BranchSpec& s,
                      std::uint64_t steps, WitnessBudget b,
                      std::string oracle_spec, bool verify_each) {
  if (steps < 1) throw std::invalid_argument("run requires steps >= 1");
  ConstructionState st = init_construction(o, s, b, std::move(oracle_spec));
  auto check = [&](const ConstructionState& state) {
    if (!verify_each) return;
    VerifyReport report = verify_state(o, state);
    if (!report.all_pass())
      throw std::logic_error("state verification failed at t=" +
                             std::to_string(state.t) + ": " +
                             report.to_json());
  };
  check(st);
  for (std::uint64_t i = 1; i < steps; ++i) {
    st = step(o, st);
    check(st);
  }
  return st;
}

namespace {

void add_check(VerifyReport& r, const std::string& name, bool pass,
               const std::string& detail = "") {
  r.checks.push_back({name, pass, pass ? "" : detail});
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

std::string VerifyReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json item;
    item["check"] = c.name;
    item["pass"] = c.pass;
    if (!c.detail.empty()) item["detail"] = c.detail;
    arr.push_back(std::move(item));
  }
  return arr.dump();
}

VerifyReport verify_state(const AdjacencyOracle& o,
                          const ConstructionState& st) {
  VerifyReport r;
  const auto& tree = st.tree_vertices;

  // processed = chosen good pair, or meets the tree
  std::set<std::pair<OracleVertex, OracleVertex>> good_set;
  for (const auto& p : st.good_pairs) good_set.insert({p.x, p.y});
  auto processed = [&](const OraclePair& p) {
    return good_set.count({p.a, p.b}) || tree.count(p.a) || tree.count(p.b);
  };

  // invariant 1: the first t pairs are processed, one good pair was chosen
  // per step in enumeration order, and everything before the cursor is
  // processed.
  {
    bool ok = st.good_pairs.size() == st.t;
    std::string detail = ok ? "" : "good pair count differs from t";
    for (std::uint64_t i = 1; ok && i <= st.t; ++i) {
      if (!processed(pair_enumeration(i))) {
        ok = false;
        detail = "pair #" + std::to_string(i) + " is unprocessed";
      }
    }
    std::uint64_t prev = 0;
    for (const auto& p : st.good_pairs) {
      if (!ok) break;
      if (p.index <= prev || p.index >= st.cursor ||
          pair_index(p.x, p.y) != p.index) {
        ok = false;
        detail = "good pair indices are not increasing below the cursor";
      }
      prev = p.index;
    }
    for (std::uint64_t i = 1; ok && i < st.cursor; ++i) {
      if (!processed(pair_enumeration(i))) {
        ok = false;
        detail = "pair #" + std::to_string(i) + " below cursor unprocessed";
      }
    }
    add_check(r, "processed-prefix", ok, detail);
  }

  // invariant 2: every good pair carries a separating tree witness
  {
    bool ok = true;
    std::string detail;
    for (const auto& p : st.good_pairs) {
      const bool ax = o.adjacent(p.witness, p.x);
      const bool ay = o.adjacent(p.witness, p.y);
      if (!tree.count(p.witness) || ax == ay) {
        ok = false;
        detail = "pair {" + std::to_string(p.x) + "," + std::to_string(p.y) +
                 "} lacks a separating witness";
        break;
      }
    }
    add_check(r, "separation-witnesses", ok, detail);
  }

  // invariant 3: branch lengths are distinct spec members covering the
  // first t-1 spec elements (two branches join per step after the first).
  {
    bool ok = true;
    std::string detail;
    std::set<std::uint64_t> lens;
    for (const auto& br : st.branches) {
      if (br.length != br.vertices.size() || !st.spec.contains(br.length) ||
          !lens.insert(br.length).second) {
        ok = false;
        detail = "branch of length " + std::to_string(br.length) +
                 " is malformed, duplicated, or off-spec";
        break;
      }
    }
    if (ok && lens != st.used_lengths) {
      ok = false;
      detail = "used-length ledger disagrees with the branches";
    }
    if (ok && st.t >= 1) {
      for (std::uint64_t want : st.spec.prefix(st.t - 1)) {
        if (!lens.count(want)) {
          ok = false;
          detail = "missing spec length " + std::to_string(want);
          break;
        }
      }
    }
    add_check(r, "branch-lengths", ok, detail);
  }

  // invariant 4: the poisoned set is exactly the tree vertex set
  {
    std::set<OracleVertex> from_branches{st.root};
    bool ok = true;
    std::string detail;
    for (const auto& br : st.branches)
      for (OracleVertex v : br.vertices)
        if (!from_branches.insert(v).second) {
          ok = false;
          detail = "vertex " + std::to_string(v) + " repeats in the tree";
        }
    if (ok && from_branches != tree) {
      ok = false;
      detail = "tree vertex set disagrees with the recorded branches";
    }
    add_check(r, "bad-set-is-tree", ok, detail);
  }

  // invariant 5: the tree misses every good-pair vertex
  {
    bool ok = true;
    std::string detail;
    for (OracleVertex v : st.good_side_vertices())
      if (tree.count(v)) {
        ok = false;
        detail = "vertex " + std::to_string(v) + " sits on both sides";
        break;
      }
    add_check(r, "sides-disjoint", ok, detail);
  }

  // tree inducedness: oracle adjacency between tree vertices holds exactly
  // at consecutive branch positions and (root, branch start)
  {
    std::vector<OracleVertex> verts(tree.begin(), tree.end());
    std::set<std::pair<OracleVertex, OracleVertex>> expected;
    auto key = [](OracleVertex a, OracleVertex b) {
      return std::pair{std::min(a, b), std::max(a, b)};
    };
    for (const auto& br : st.branches) {
      if (br.vertices.empty()) continue;
      expected.insert(key(st.root, br.vertices.front()));
      for (std::size_t i = 0; i + 1 < br.vertices.size(); ++i)
        expected.insert(key(br.vertices[i], br.vertices[i + 1]));
    }
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < verts.size() && ok; ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        const bool adj = o.adjacent(verts[i], verts[j]);
        const bool want = expected.count(key(verts[i], verts[j])) > 0;
        if (adj != want) {
          ok = false;
          detail = "tree pair (" + std::to_string(verts[i]) + "," +
                   std::to_string(verts[j]) +
                   (adj ? ") has a chord" : ") misses a tree edge");
          break;
        }
      }
    add_check(r, "tree-induced", ok, detail);
  }

  return r;
}

Graph branch_tree_prefix(const BranchSpec& s, int count) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  const auto lengths = s.prefix(static_cast<std::size_t>(count));
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  for (std::uint64_t len : lengths) {
    int prev = 0;
    for (std::uint64_t i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph::from_edges(next, edges);
}

std::string emit_state_json(const ConstructionState& st) {
  nlohmann::json j;
  j["t"] = st.t;
  j["root"] = st.root;
  nlohmann::json branches = nlohmann::json::array();
  for (const auto& br : st.branches) {
    nlohmann::json item;
    item["len"] = br.length;
    item["vertices"] = br.vertices;
    branches.push_back(std::move(item));
  }
  j["branches"] = std::move(branches);
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : st.good_pairs) {
    nlohmann::json item;
    item["pair"] = {p.x, p.y};
    item["witness"] = p.witness;
    pairs.push_back(std::move(item));
  }
  j["good_pairs"] = std::move(pairs);
  j["bad_vertices"] = std::vector<OracleVertex>(st.tree_vertices.begin(),
                                                st.tree_vertices.end());
  j["oracle"] = st.oracle_spec.empty()
                    ? nlohmann::json()
                    : nlohmann::json::parse(st.oracle_spec);
  j["s"] = st.spec.dsl();
  return j.dump();
}

ConstructionState parse_state_json(const std::string& bytes) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  ConstructionState st;
  try {
    st.t = j.at("t").get<std::uint64_t>();
    st.root = j.at("root").get<OracleVertex>();
    st.spec = BranchSpec::parse(j.at("s").get<std::string>());
    if (!j.at("oracle").is_null()) st.oracle_spec = j.at("oracle").dump();
    for (const auto& item : j.at("branches")) {
      TreeBranch br;
      br.length = item.at("len").get<std::uint64_t>();
      br.vertices = item.at("vertices").get<std::vector<OracleVertex>>();
      st.branches.push_back(std::move(br));
      st.used_lengths.insert(st.branches.back().length);
    }
    for (const auto& item : j.at("good_pairs")) {
      ProcessedGoodPair p;
      const auto& pr = item.at("pair");
      p.x = pr.at(0).get<OracleVertex>();
      p.y = pr.at(1).get<OracleVertex>();
      p.witness = item.at("witness").get<OracleVertex>();
      p.index = pair_index(p.x, p.y);
      st.good_pairs.push_back(p);
    }
    const auto bad = j.at("bad_vertices").get<std::vector<OracleVertex>>();
    st.tree_vertices.insert(bad.begin(), bad.end());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad state JSON: ") + e.what());
  }
  st.cursor = st.good_pairs.empty() ? 1 : st.good_pairs.back().index + 1;
  return st;
}

}  // namespace homdist
