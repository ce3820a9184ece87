// Command-line front end: solvers, oracle probes, the streaming
// construction, and serialization. Exit codes: 0 success/true,
// 1 not-found/property-false, 2 usage or parse error, 3 search budget or
// group cap exhausted. stdout carries machine output only.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "homdist/automorphisms.hpp"
#include "homdist/cec_check.hpp"
#include "homdist/colouring.hpp"
#include "homdist/construction.hpp"
#include "homdist/errors.hpp"
#include "homdist/graph_io.hpp"
#include "homdist/hom_props.hpp"
#include "homdist/hom_search.hpp"
#include "homdist/laws.hpp"
#include "homdist/oracle.hpp"
#include "homdist/oracle_search.hpp"
#include "homdist/preserving.hpp"
#include "homdist/prefix_hom.hpp"
#include "homdist/vertex_map.hpp"
#include "json.hpp"

using namespace homdist;
using nlohmann::json;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& bytes) {
  if (out_path.empty()) {
    std::cout << bytes;
    if (bytes.empty() || bytes.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseError("cannot write \"" + out_path + "\"");
  out << bytes;
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

json map_json(const VertexImage& f) { return json{{"map", f}}; }

struct Options {
  std::string g_path, h_path, map_path, oracle_path, state_path, out_path;
  std::string format = "json";
  std::string branch_dsl = "odd";
  std::string avoid_csv;
  std::uint64_t cap = 1'000'000;
  std::uint64_t group_cap = kDefaultGroupCap;
  std::uint64_t steps = 1;
  std::uint64_t u = 0, v = 0;
  int t_max = 1;
  int max_order = 8;
  bool no_verify = false;
  bool with_elements = false;
};

std::vector<OracleVertex> parse_avoid(const std::string& csv) {
  std::vector<OracleVertex> out;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string tok = csv.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() ||
        tok.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad avoid entry \"" + tok + "\"");
    out.push_back(std::stoull(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int cmd_hom_find(const Options& o) {
  const Graph g = load_graph(o.g_path), h = load_graph(o.h_path);
  const auto f = find_homomorphism(g, h);
  if (!f) {
    write_output(o.out_path, json{{"found", false}}.dump());
    std::cerr << "no homomorphism exists\n";
    return kExitFalse;
  }
  write_output(o.out_path, map_json(*f).dump());
  std::cerr << "found a homomorphism\n";
  return kExitTrue;
}

int cmd_hom_check(const Options& o) {
  const Graph g = load_graph(o.g_path), h = load_graph(o.h_path);
  const VertexImage f = parse_vertex_map(read_file(o.map_path));
  require_total_map(g, h, f);
  const auto violation = homomorphism_violation(g, h, f);
  json out{{"homomorphism", !violation.has_value()}};
  if (violation)
    out["violating_edge"] = json::array({violation->u, violation->v});
  write_output(o.out_path, out.dump());
  return violation ? kExitFalse : kExitTrue;
}

int cmd_hom_enumerate(const Options& o) {
  const Graph g = load_graph(o.g_path), h = load_graph(o.h_path);
  const auto maps = enumerate_homomorphisms(g, h);
  json arr = json::array();
  for (const auto& f : maps) arr.push_back(f);
  write_output(o.out_path,
               json{{"count", maps.size()}, {"maps", arr}}.dump());
  std::cerr << maps.size() << " homomorphisms\n";
  return kExitTrue;
}

int cmd_dist_check(const Options& o) {
  const Graph g = load_graph(o.g_path), h = load_graph(o.h_path);
  const VertexImage f = parse_vertex_map(read_file(o.map_path));
  const auto check = check_distinguishing(g, h, f, o.group_cap);
  json out{{"distinguishing", check.distinguishing}};
  if (check.witness) out["witness"] = *check.witness;
  write_output(o.out_path, out.dump());
  return check.distinguishing ? kExitTrue : kExitFalse;
}

int cmd_dist_search(const Options& o) {
  const Graph g = load_graph(o.g_path), h = load_graph(o.h_path);
  const auto f = find_distinguishing(g, h, o.group_cap);
  if (!f) {
    write_output(o.out_path, json{{"found", false}}.dump());
    std::cerr << "no distinguishing homomorphism\n";
    return kExitFalse;
  }
  write_output(o.out_path, map_json(*f).dump());
  std::cerr << "found a distinguishing homomorphism\n";
  return kExitTrue;
}

int cmd_aut_group(const Options& o) {
  const Graph g = load_graph(o.g_path);
  const PermGroup aut = automorphism_group(g, o.group_cap);
  json out{{"order", aut.order()}};
  json gens = json::array();
  for (const auto& p : aut.generators) gens.push_back(p);
  out["generators"] = gens;
  if (o.with_elements) {
    json els = json::array();
    for (const auto& p : aut.elements) els.push_back(p);
    out["elements"] = els;
  }
  write_output(o.out_path, out.dump());
  std::cerr << "automorphism group of order " << aut.order() << "\n";
  return kExitTrue;
}

int cmd_invariant(const Options& o, const std::string& which) {
  const Graph g = load_graph(o.g_path);
  int value = 0;
  if (which == "chi")
    value = chromatic_number(g);
  else if (which == "chi-d")
    value = distinguishing_chromatic_number(g, o.group_cap);
  else
    value = distinguishing_number(g, o.group_cap);
  write_output(o.out_path, std::to_string(value));
  return kExitTrue;
}

int cmd_core_check(const Options& o) {
  const Graph g = load_graph(o.g_path);
  const bool core = is_core(g);
  write_output(o.out_path, json{{"core", core}}.dump());
  return core ? kExitTrue : kExitFalse;
}

int cmd_unique_check(const Options& o) {
  const Graph g = load_graph(o.g_path), h = load_graph(o.h_path);
  const bool unique = is_uniquely_h_colourable(g, h);
  write_output(o.out_path, json{{"uniquely_colourable", unique}}.dump());
  return unique ? kExitTrue : kExitFalse;
}

int cmd_fixation(const Options& o) {
  const Graph g = load_graph(o.g_path), h = load_graph(o.h_path);
  const VertexImage f = parse_vertex_map(read_file(o.map_path));
  const auto fix = fixation(g, f, h);
  if (o.format == "dot") {
    write_output(o.out_path, emit_graph_dot(fix.graph));
  } else {
    json out{{"graph", json::parse(emit_graph_json(fix.graph))},
             {"canonical_map", map_json(fix.canonical_map)}};
    write_output(o.out_path, out.dump());
  }
  return kExitTrue;
}

int cmd_lemma1(const Options& o) {
  const auto results =
      run_law_suite(default_law_corpus(), default_union_law_corpus(),
                    o.group_cap);
  write_output(o.out_path, emit_law_report(results));
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  std::cerr << results.size() << " checks, " << (all ? "all passed" : "FAILURES")
            << "\n";
  return all ? kExitTrue : kExitFalse;
}

int cmd_cec_witness(const Options& o) {
  const auto oracle = GraphOracle::from_spec_json(read_file(o.oracle_path));
  const auto avoid = parse_avoid(o.avoid_csv);
  const auto path = cec_witness_path(oracle, o.u, o.v, avoid, {o.cap});
  write_output(o.out_path, json{{"path", path}}.dump());
  std::cerr << "witness path of length " << path.size() - 1 << "\n";
  return kExitTrue;
}

int cmd_cec_bounded(const Options& o) {
  const Graph g = load_graph(o.g_path);
  const bool cec = is_cec_bounded(g, o.t_max);
  write_output(o.out_path, json{{"cec", cec}}.dump());
  return cec ? kExitTrue : kExitFalse;
}

int cmd_construct_run(const Options& o) {
  const std::string spec_bytes = read_file(o.oracle_path);
  const auto oracle = GraphOracle::from_spec_json(spec_bytes);
  const auto spec = BranchSpec::parse(o.branch_dsl);
  const auto st = run(oracle, spec, o.steps, {o.cap}, oracle.spec_json(),
                      !o.no_verify);
  write_output(o.out_path, emit_state_json(st));
  std::cerr << "construction reached t=" << st.t << " with "
            << st.tree_vertices.size() << " tree vertices\n";
  return kExitTrue;
}

int cmd_construct_verify(const Options& o) {
  auto st = parse_state_json(read_file(o.state_path));
  if (st.oracle_spec.empty())
    throw ParseError("state carries no oracle spec");
  const auto oracle = GraphOracle::from_spec_json(st.oracle_spec);
  const auto report = verify_state(oracle, st);
  write_output(o.out_path, report.to_json());
  std::cerr << (report.all_pass() ? "all checks passed" : "CHECKS FAILED")
            << "\n";
  return report.all_pass() ? kExitTrue : kExitFalse;
}

int cmd_gs_emit(const Options& o) {
  auto st = parse_state_json(read_file(o.state_path));
  if (st.oracle_spec.empty())
    throw ParseError("state carries no oracle spec");
  const auto oracle = GraphOracle::from_spec_json(st.oracle_spec);
  const auto ph = gs_prefix(oracle, st);
  write_output(o.out_path, emit_partial_hom(ph));
  std::cerr << "prefix over " << ph.assignments.size() << " vertices\n";
  return kExitTrue;
}

int cmd_gs_rigidity(const Options& o) {
  auto st = parse_state_json(read_file(o.state_path));
  if (st.oracle_spec.empty())
    throw ParseError("state carries no oracle spec");
  const auto oracle = GraphOracle::from_spec_json(st.oracle_spec);
  const auto ph = gs_prefix(oracle, st);
  const auto report = prefix_rigidity_check(oracle, st, ph, o.group_cap);
  write_output(o.out_path, report.to_json());
  std::cerr << (report.pass() ? "window is rigid over the fibres"
                              : "RIGIDITY FAILED")
            << "\n";
  return report.pass() ? kExitTrue : kExitFalse;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"graph homomorphism and symmetry-breaking toolkit"};
  app.require_subcommand(1);
  // --h names a codomain file, so help keeps only its long form
  app.set_help_flag("--help", "print help");
  Options o;

  auto addsub = [&](CLI::App* parent, const std::string& name,
                    const std::string& desc = "") {
    CLI::App* c = parent->add_subcommand(name, desc);
    c->set_help_flag("--help", "print help");
    return c;
  };

  auto add_g = [&](CLI::App* c) {
    c->add_option("--g", o.g_path, "graph JSON file")->required();
  };
  auto add_h = [&](CLI::App* c) {
    c->add_option("--h", o.h_path, "codomain graph JSON file")->required();
  };
  auto add_map = [&](CLI::App* c) {
    c->add_option("--map", o.map_path, "vertex map JSON file")->required();
  };
  auto add_out = [&](CLI::App* c) {
    c->add_option("--out", o.out_path, "output file (default stdout)");
  };
  auto add_group_cap = [&](CLI::App* c) {
    c->add_option("--group-cap", o.group_cap, "automorphism group order cap");
  };

  int rc = kExitUsage;
  auto chain = [&](CLI::App* c, auto fn) {
    c->callback([&, fn]() { rc = fn(); });
  };

  auto* hom = addsub(&app, "hom", "homomorphism operations");
  auto* hom_find = addsub(hom, "find", "search for a homomorphism");
  add_g(hom_find); add_h(hom_find); add_out(hom_find);
  chain(hom_find, [&]() { return cmd_hom_find(o); });
  auto* hom_check = addsub(hom, "check", "verify a map");
  add_g(hom_check); add_h(hom_check); add_map(hom_check); add_out(hom_check);
  chain(hom_check, [&]() { return cmd_hom_check(o); });
  auto* hom_enum = addsub(hom, "enumerate", "list all homomorphisms");
  add_g(hom_enum); add_h(hom_enum); add_out(hom_enum);
  chain(hom_enum, [&]() { return cmd_hom_enumerate(o); });

  auto* dist = addsub(&app, "dist", "distinguishing homomorphisms");
  auto* dist_check = addsub(dist, "check", "check a given map");
  add_g(dist_check); add_h(dist_check); add_map(dist_check);
  add_group_cap(dist_check); add_out(dist_check);
  chain(dist_check, [&]() { return cmd_dist_check(o); });
  auto* dist_search = addsub(dist, "search", "find one");
  add_g(dist_search); add_h(dist_search); add_group_cap(dist_search);
  add_out(dist_search);
  chain(dist_search, [&]() { return cmd_dist_search(o); });

  auto* aut = addsub(&app, "aut", "automorphism groups");
  auto* aut_group = addsub(aut, "group", "compute the full group");
  add_g(aut_group); add_group_cap(aut_group); add_out(aut_group);
  aut_group->add_flag("--elements", o.with_elements,
                      "include the full element list");
  chain(aut_group, [&]() { return cmd_aut_group(o); });

  auto* inv = addsub(&app, "invariant", "exact graph invariants");
  for (const std::string which : {"chi", "chi-d", "d"}) {
    auto* c = addsub(inv, which);
    add_g(c); add_group_cap(c); add_out(c);
    chain(c, [&, which]() { return cmd_invariant(o, which); });
  }

  auto* core = addsub(&app, "core", "core recognition");
  auto* core_check = addsub(core, "check");
  add_g(core_check); add_out(core_check);
  chain(core_check, [&]() { return cmd_core_check(o); });

  auto* unique = addsub(&app, "unique", "unique colourability");
  auto* unique_check = addsub(unique, "check");
  add_g(unique_check); add_h(unique_check); add_out(unique_check);
  chain(unique_check, [&]() { return cmd_unique_check(o); });

  auto* fix = addsub(&app, "fixation", "fixation of g by a map");
  add_g(fix); add_h(fix); add_map(fix); add_out(fix);
  fix->add_option("--format", o.format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  chain(fix, [&]() { return cmd_fixation(o); });

  auto* lemma = addsub(&app, "lemma1", "distinguishing-map law suite");
  auto* lemma_run = addsub(lemma, "run-suite");
  add_group_cap(lemma_run); add_out(lemma_run);
  chain(lemma_run, [&]() { return cmd_lemma1(o); });

  auto* cec = addsub(&app, "cec", "existential-closure probes");
  auto* cw = addsub(cec, "witness", "find a witness path");
  cw->add_option("--oracle", o.oracle_path, "oracle spec JSON")->required();
  cw->add_option("--u", o.u)->required();
  cw->add_option("--v", o.v)->required();
  cw->add_option("--avoid", o.avoid_csv, "comma-separated ids");
  cw->add_option("--cap", o.cap, "witness budget");
  add_out(cw);
  chain(cw, [&]() { return cmd_cec_witness(o); });
  auto* cb = addsub(cec, "bounded-check", "finite-graph diagnostic");
  add_g(cb); add_out(cb);
  cb->add_option("--t-max", o.t_max, "max avoid-set size");
  chain(cb, [&]() { return cmd_cec_bounded(o); });

  auto* con = addsub(&app, "construct", "streaming partition runs");
  auto* con_run = addsub(con, "run");
  con_run->add_option("--oracle", o.oracle_path, "oracle spec JSON")
      ->required();
  con_run->add_option("--s", o.branch_dsl, "branch spec DSL");
  con_run->add_option("--steps", o.steps)->required();
  con_run->add_option("--cap", o.cap, "witness budget");
  con_run->add_flag("--no-verify", o.no_verify,
                    "skip per-step verification");
  add_out(con_run);
  chain(con_run, [&]() { return cmd_construct_run(o); });
  auto* con_verify = addsub(con, "verify");
  con_verify->add_option("--state", o.state_path, "state JSON")->required();
  add_out(con_verify);
  chain(con_verify, [&]() { return cmd_construct_verify(o); });

  auto* gs = addsub(&app, "gs", "prefix homomorphism into H v K2");
  auto* gs_emit = addsub(gs, "emit");
  gs_emit->add_option("--state", o.state_path, "state JSON")->required();
  add_out(gs_emit);
  chain(gs_emit, [&]() { return cmd_gs_emit(o); });
  auto* gs_rig = addsub(gs, "rigidity");
  gs_rig->add_option("--state", o.state_path, "state JSON")->required();
  add_group_cap(gs_rig); add_out(gs_rig);
  chain(gs_rig, [&]() { return cmd_gs_rigidity(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const SearchExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const GroupTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const BranchSpecExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
