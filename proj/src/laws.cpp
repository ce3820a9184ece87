#include "homdist/laws.hpp"

#include <stdexcept>

#include "homdist/hom_props.hpp"
#include "homdist/hom_search.hpp"
#include "homdist/preserving.hpp"
#include "json.hpp"

namespace homdist {

namespace {

LawResult subgroup_law(const LawCase& c, std::uint64_t cap) {
  PermGroup sub = preserving_subgroup(c.g, c.f, cap);
  LawResult r{"L1-1", c.id, true, std::nullopt};
  if (!sub.contains(identity_permutation(c.g.order()))) {
    r.pass = false;
    return r;
  }
  for (const auto& a : sub.elements) {
    Permutation inv = inverse_permutation(a);
    if (!sub.contains(inv)) {
      r.pass = false;
      r.witness = a;
      return r;
    }
    for (const auto& b : sub.elements) {
      Permutation prod = compose_permutations(a, b);
      if (!sub.contains(prod)) {
        r.pass = false;
        r.witness = prod;
        return r;
      }
    }
  }
  return r;
}

LawResult post_composition_law(const LawCase& c, std::uint64_t cap) {
  PermGroup aut_g = automorphism_group(c.g, cap);
  PermGroup aut_h = automorphism_group(c.h, cap);
  const bool base = check_distinguishing_with_group(aut_g, c.f).distinguishing;
  LawResult r{"L1-3", c.id, true, std::nullopt};
  for (const auto& beta : aut_h.elements) {
    VertexImage composed = compose(c.f, beta);
    if (check_distinguishing_with_group(aut_g, composed).distinguishing !=
        base) {
      r.pass = false;
      r.witness = beta;
      return r;
    }
  }
  return r;
}

LawResult unique_colourable_law(const LawCase& c, std::uint64_t cap) {
  LawResult r{"L1-4", c.id, true, std::nullopt};
  if (!is_uniquely_h_colourable(c.g, c.h)) return r;  // vacuous
  PermGroup aut_g = automorphism_group(c.g, cap);
  std::optional<bool> verdict;
  for_each_homomorphism(c.g, c.h, [&](const VertexImage& f) {
    bool d = check_distinguishing_with_group(aut_g, f).distinguishing;
    if (!verdict) {
      verdict = d;
      return true;
    }
    if (*verdict != d) {
      r.pass = false;
      return false;
    }
    return true;
  });
  return r;
}

LawResult union_law(const UnionLawCase& uc, std::uint64_t cap) {
  LawResult r{"L1-5", uc.id, true, std::nullopt};
  const LawCase& a = uc.first;
  const LawCase& b = uc.second;
  // preconditions of the law; a corpus entry violating them is a failure
  if (!(a.h == b.h) || !is_connected(a.g) || !is_connected(b.g) ||
      is_isomorphic(a.g, b.g) || !is_distinguishing(a.g, a.h, a.f, cap) ||
      !is_distinguishing(b.g, b.h, b.f, cap)) {
    r.pass = false;
    return r;
  }
  Graph u = disjoint_union(a.g, b.g);
  VertexImage f = a.f;
  f.insert(f.end(), b.f.begin(), b.f.end());
  auto check = check_distinguishing(u, a.h, f, cap);
  if (!check.distinguishing) {
    r.pass = false;
    r.witness = check.witness;
  }
  return r;
}

void require_homomorphism_case(const LawCase& c) {
  if (!is_homomorphism(c.g, c.h, c.f))
    throw std::invalid_argument("law case " + c.id +
                                " is not a homomorphism");
}

}  // namespace

std::vector<LawResult> run_law_suite(const std::vector<LawCase>& cases,
                                     const std::vector<UnionLawCase>& unions,
                                     std::uint64_t group_cap) {
  std::vector<LawResult> out;
  for (const auto& c : cases) {
    require_homomorphism_case(c);
    out.push_back(subgroup_law(c, group_cap));
    out.push_back(post_composition_law(c, group_cap));
    out.push_back(unique_colourable_law(c, group_cap));
  }
  for (const auto& uc : unions) {
    require_homomorphism_case(uc.first);
    require_homomorphism_case(uc.second);
    out.push_back(union_law(uc, group_cap));
  }
  return out;
}

namespace {

// C5 with one pendant vertex attached at vertex 0; rigid enough that the
// identity colouring extended by p -> 1 is distinguishing.
Graph c5_with_pendant() {
  return Graph::from_edges(
      6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
}

void add_enumerated(std::vector<LawCase>& out, const std::string& prefix,
                    const Graph& g, const Graph& h, std::size_t limit) {
  std::size_t i = 0;
  for (const auto& f : enumerate_homomorphisms(g, h)) {
    if (i == limit) break;
    out.push_back({prefix + "#" + std::to_string(i), g, h, f});
    ++i;
  }
}

}  // namespace

std::vector<LawCase> default_law_corpus() {
  const Graph c4 = make_cycle(4);
  const Graph c5 = make_cycle(5);
  const Graph c6 = make_cycle(6);
  const Graph c7 = make_cycle(7);
  const Graph c8 = make_cycle(8);
  const Graph k2 = make_complete(2);
  const Graph k3 = make_complete(3);
  const Graph k4 = make_complete(4);
  const Graph p3 = make_path(3);
  const Graph p4 = make_path(4);
  const Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  const Graph pend = c5_with_pendant();

  std::vector<LawCase> out;
  add_enumerated(out, "c7-c5", c7, c5, 5);
  add_enumerated(out, "c5-c5", c5, c5, 10);
  add_enumerated(out, "c4-k2", c4, k2, 2);
  add_enumerated(out, "p3-k2", p3, k2, 2);
  add_enumerated(out, "k3-k3", k3, k3, 3);
  add_enumerated(out, "c6-k2", c6, k2, 2);
  add_enumerated(out, "c6-k3", c6, k3, 2);
  add_enumerated(out, "k4-k4", k4, k4, 2);
  add_enumerated(out, "star-k2", star, k2, 2);
  add_enumerated(out, "pend-c5", pend, c5, 3);
  add_enumerated(out, "c8-c5", c8, c5, 2);
  // hand-picked distinguishing maps exercised by the union law as well
  out.push_back({"pend-c5#id", pend, c5, {0, 1, 2, 3, 4, 1}});
  out.push_back({"p4-c5#zigzag", p4, c5, {1, 2, 1, 0, 1}});
  out.push_back({"c8-c5#walk", c8, c5, {0, 1, 2, 3, 2, 1, 2, 1}});
  return out;
}

std::vector<UnionLawCase> default_union_law_corpus() {
  const Graph c5 = make_cycle(5);
  const Graph c7 = make_cycle(7);
  const Graph p4 = make_path(4);
  const Graph pend = c5_with_pendant();

  LawCase c5_id{"c5-id", c5, c5, {0, 1, 2, 3, 4}};
  LawCase pend_id{"pend-id", pend, c5, {0, 1, 2, 3, 4, 1}};
  LawCase p4_zig{"p4-zigzag", p4, c5, {1, 2, 1, 0, 1}};
  auto c7_first = find_distinguishing(c7, c5);
  LawCase c7_dist{"c7-dist", c7, c5, *c7_first};

  return {
      {"pend+c5", pend_id, c5_id},
      {"p4+c5", p4_zig, c5_id},
      {"c7+pend", c7_dist, pend_id},
  };
}

std::string emit_law_report(const std::vector<LawResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json item;
    item["item"] = r.item;
    item["case"] = r.case_id;
    item["pass"] = r.pass;
    if (r.witness)
      item["witness"] = *r.witness;
    else
      item["witness"] = nullptr;
    arr.push_back(std::move(item));
  }
  return arr.dump();
}

}  // namespace homdist
