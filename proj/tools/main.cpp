#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"
#include "cyclemetrics/cycles.hpp"
#include "cyclemetrics/cyclewidth.hpp"
#include "cyclemetrics/errors.hpp"
#include "cyclemetrics/graph_io.hpp"
#include "cyclemetrics/isocycle.hpp"
#include "cyclemetrics/planar_dual.hpp"
#include "cyclemetrics/spanning_tree.hpp"
#include "cyclemetrics/stretch.hpp"
#include "cyclemetrics/supported_cycle.hpp"

using namespace cmcli;
using namespace cyclemetrics;

namespace {

struct Options {
  std::string input;
  bool json_out = false;
  Caps caps{kDefaultTreeCap, kDefaultCycleCap};
  std::optional<std::uint64_t> cap;  // per-command alias for the relevant cap
  bool witness = false;
  std::string certificate_out;
  std::string cert_in;
  std::string manifest;
  int k = 0;
  bool all_trees = false;
  // gen
  std::string gen_kind;
  std::vector<std::size_t> gen_args;
  bool gen_plane = false;
  std::string gen_format = "edges";
};

json edges_json(std::span<const Edge> edges) {
  json a = json::array();
  for (const Edge& e : edges) a.push_back({e.u, e.v});
  return a;
}

json edge_json(const std::optional<Edge>& e) { return e ? json{e->u, e->v} : json(nullptr); }

PlaneGraph require_plane(const LoadedInput& in) {
  if (!in.plane) throw InputError("this command needs a plane graph (JSON with \"faces\")");
  auto check = validate_plane(*in.plane);
  if (!check) throw InputError("invalid plane graph: " + check.message);
  return *in.plane;
}

Outcome cmd_width(const Options& o, const LoadedInput& in) {
  auto r = cycle_width(in.graph);
  json res{{"width", r.width}};
  if (o.witness) res["witness"] = r.witness ? witness_to_json(*r.witness) : json(nullptr);
  return {res};
}

Outcome cmd_support_approx(const Options& o, const LoadedInput& in) {
  auto r = support_approx(in.graph);
  json res{{"width", r.width}, {"lower", r.lower}, {"upper", r.upper}};
  res["witness"] = r.witness ? witness_to_json(*r.witness) : json(nullptr);
  res["certificate"] = r.certificate ? certificate_to_json(*r.certificate) : json(nullptr);
  if (r.certificate) {
    auto check = verify_certificate(in.graph, all_pairs_distances(in.graph), *r.certificate);
    res["certificate_verified"] = check.ok;
    if (!check.ok) return {res, kVerifyFailed};
    if (!o.certificate_out.empty()) {
      std::ofstream f(o.certificate_out);
      if (!f) throw InputError("cannot write " + o.certificate_out);
      f << certificate_to_json(*r.certificate).dump(2) << "\n";
    }
  } else if (!o.certificate_out.empty()) {
    throw InputError("width is 0: no supported cycle to certify");
  }
  return {res};
}

Outcome cmd_support_exact(const Options& o, const LoadedInput& in) {
  auto r = support_oracle(in.graph, o.cap.value_or(o.caps.cycle_cap));
  return {{{"k", r.k}, {"certificate", r.witness ? certificate_to_json(*r.witness) : json(nullptr)}}};
}

Outcome cmd_stretch_exact(const Options& o, const LoadedInput& in) {
  auto r = stretch_oracle(in.graph, o.cap.value_or(o.caps.tree_cap));
  return {{{"stretch", r.value}, {"tree", edges_json(r.witness_tree.edges())}, {"edge", edge_json(r.witness_edge)}}};
}

Outcome cmd_congestion_exact(const Options& o, const LoadedInput& in) {
  auto r = congestion_oracle(in.graph, o.cap.value_or(o.caps.tree_cap));
  return {{{"congestion", r.value},
           {"tree", edges_json(r.witness_tree.edges())},
           {"edge", edge_json(r.witness_edge)}}};
}

Outcome cmd_iso_longest(const Options&, const LoadedInput& in) {
  auto r = longest_isometric_cycle(in.graph);
  auto res = isometric_to_json(r);
  res["verified"] = r.length == 0 || is_isometric_cycle(in.graph, r.cycle);
  return {res, res["verified"].get<bool>() ? kOk : kVerifyFailed};
}

Outcome cmd_iso_check(const Options& o, const LoadedInput& in) {
  if (o.k < 3) throw InputError("--k must be at least 3");
  auto c = find_isometric_cycle(in.graph, all_pairs_distances(in.graph), o.k);
  return {{{"k", o.k}, {"found", c.has_value()}, {"cycle", c ? json(*c) : json(nullptr)}}};
}

Outcome cmd_lok36(const Options& o, const LoadedInput& in) {
  if (o.k < 3) throw InputError("--k must be at least 3");
  auto dist = all_pairs_distances(in.graph);
  auto ws = check_lemma36_conditions(in.graph, dist, o.k);
  json list = json::array();
  for (const auto& w : ws) list.push_back({{"u", w.u}, {"v", w.v}, {"x", w.x}});
  auto c = find_isometric_cycle(in.graph, dist, o.k);
  return {{{"k", o.k},
           {"conditions_satisfied", !ws.empty()},
           {"witnesses", list},
           {"isometric_cycle_exists", c.has_value()}}};
}

Outcome cmd_dual(const Options&, const LoadedInput& in) {
  auto dual = dual_graph(require_plane(in));
  return {dual_to_json(dual)};
}

Outcome cmd_verify_duality(const Options& o, const LoadedInput& in) {
  auto pg = require_plane(in);
  auto global = verify_duality_global(pg, o.caps.tree_cap);
  json res{{"congestion", global.congestion},
           {"dual_stretch", global.dual_stretch},
           {"equal_plus_one", global.equal_plus_one}};
  bool ok = global.equal_plus_one;
  if (o.all_trees) {
    std::uint64_t trees = 0, failures = 0;
    json first_failure = nullptr;
    for_each_spanning_tree(pg.base, o.caps.tree_cap, [&](const SpanningTree& t) {
      ++trees;
      auto c = verify_duality_lemma(pg, t);
      if (!c.equal) {
        if (failures++ == 0) {
          first_failure = {{"tree", edges_json(t.edges())},
                           {"congestion", c.congestion},
                           {"dual_stretch", c.dual_stretch}};
        }
      }
    });
    res["trees"] = trees;
    res["tree_failures"] = failures;
    res["first_failure"] = first_failure;
    ok = ok && failures == 0;
  }
  return {res, ok ? kOk : kVerifyFailed};
}

Outcome cmd_verify_cert(const Options& o, const LoadedInput& in) {
  json doc;
  try {
    doc = json::parse(read_source(o.cert_in));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed certificate JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("certificate must be a JSON object");
  const Graph& g = in.graph;
  auto dist = all_pairs_distances(g);
  auto name = [&](Vertex v) { return g.label(v); };

  if (doc.contains("cuts")) {
    auto cert = certificate_from_json(doc);
    auto check = verify_certificate(g, dist, cert);
    json res{{"kind", "supported"}, {"ok", check.ok}, {"verified_k", check.verified_k}, {"claimed_k", cert.claimed_k}};
    if (check.message.rfind("structure", 0) != 0) {
      res["triple"] = {name(check.triple[0]), name(check.triple[1]), name(check.triple[2])};
    }
    if (!check.ok) res["violation"] = check.message;
    return {res, check.ok ? kOk : kVerifyFailed};
  }
  if (doc.contains("cycle") && doc.contains("length")) {
    if (!doc["cycle"].is_array() || !doc["length"].is_number_integer()) {
      throw InputError("isometric certificate needs \"length\" and a \"cycle\" array");
    }
    std::vector<Vertex> cycle;
    for (const auto& v : doc["cycle"]) {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= g.vertex_count()) {
        throw InputError("cycle entries must be vertex ids of the input graph");
      }
      cycle.push_back(v.get<Vertex>());
    }
    json res{{"kind", "isometric"}, {"length", doc["length"]}};
    auto fail = [&](const std::string& why) {
      res["ok"] = false;
      res["violation"] = why;
      return Outcome{res, kVerifyFailed};
    };
    if (doc["length"].get<std::int64_t>() != static_cast<std::int64_t>(cycle.size())) {
      return fail("structure: length " + doc["length"].dump() + " but the cycle lists " +
                  std::to_string(cycle.size()) + " vertices");
    }
    try {
      require_cycle(g, cycle);
    } catch (const InputError& e) {
      return fail(std::string("structure: ") + e.what());
    }
    if (auto bad = find_isometry_violation(g, dist, cycle)) {
      res["pair"] = {name(bad->a), name(bad->b)};
      return fail("isometry: pair (" + name(bad->a) + ", " + name(bad->b) + ") has graph distance " +
                  std::to_string(bad->graph_distance) + " < cycle distance " + std::to_string(bad->cycle_distance));
    }
    res["ok"] = true;
    return {res};
  }
  throw InputError("unrecognized certificate: expected \"cuts\" (supported) or \"length\" (isometric)");
}

int run_gen(const Options& o) {
  std::optional<LoadedInput> in;
  if (o.gen_kind == "subdivide") in = load_graph(o.input, false);
  auto gen = generate(o.gen_kind, o.gen_args, o.gen_plane, in ? &in->graph : nullptr);
  if (gen.plane) {
    std::cout << plane_graph_to_json(*gen.plane).dump() << "\n";
  } else if (o.gen_format == "json") {
    std::cout << graph_to_json(gen.graph).dump() << "\n";
  } else {
    std::cout << to_edge_list(gen.graph);
  }
  return kOk;
}

using Handler = std::function<Outcome(const Options&, const LoadedInput&)>;

int run_report(const std::string& command, const Options& o, const json& params, const Handler& h) {
  auto t0 = std::chrono::steady_clock::now();
  json report;
  int code = kOk;
  if (command == "bench") {
    std::string manifest_text = o.manifest.empty() ? default_manifest() : read_source(o.manifest);
    json manifest;
    try {
      manifest = json::parse(manifest_text);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("malformed manifest: ") + e.what());
    }
    report["input_digest"] = sha256_hex(manifest_text);
    report["result"] = bench_rows(manifest, o.caps, thread_count());
    code = report["result"]["violations"].get<int>() == 0 ? kOk : kVerifyFailed;
  } else {
    auto in = load_graph(o.input);
    report["input_digest"] = sha256_hex(in.bytes);
    auto out = h(o, in);
    report["result"] = std::move(out.result);
    code = out.code;
  }
  report["command"] = command;
  report["parameters"] = params;
  report["caps"] = o.caps.to_json();
  report["wall_time_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (o.json_out) {
    std::cout << report.dump() << "\n";
  } else {
    print_human(command, report);
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"cyclemetrics: cycle width, supported cycles, isometric cycles and exact stretch oracles"};
  app.require_subcommand(1);
  app.add_option("--input,-i", o.input, "graph file (edge list or JSON); default stdin");
  app.add_flag("--json", o.json_out, "emit the JSON report instead of a table");
  app.add_option("--tree-cap", o.caps.tree_cap, "spanning tree enumeration cap")->capture_default_str();
  app.add_option("--cycle-cap", o.caps.cycle_cap, "cycle enumeration cap")->capture_default_str();

  struct Sub {
    CLI::App* app;
    Handler handler;
    std::function<json()> params;
  };
  std::vector<Sub> subs;
  auto add = [&](const char* name, const char* help, Handler h, std::function<json()> params = [] { return json::object(); }) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    subs.push_back({s, std::move(h), std::move(params)});
    return s;
  };

  auto* gen = app.add_subcommand("gen", "generate a corpus graph");
  gen->fallthrough();
  gen->add_option("kind", o.gen_kind, "generator")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "complete", "rect-grid", "tri-grid", "subdivide", "lok-counterexample"}));
  gen->add_option("sizes", o.gen_args, "size arguments");
  gen->add_flag("--plane", o.gen_plane, "emit a plane graph with faces (JSON)");
  gen->add_option("--format", o.gen_format, "edges or json")->check(CLI::IsMember({"edges", "json"}));

  add("width", "cycle width W(G)", cmd_width, [&] { return json{{"witness", o.witness}}; })
      ->add_flag("--witness", o.witness, "include the attaining witness");
  add("support-approx", "W-based bracket and a supported-cycle certificate", cmd_support_approx)
      ->add_option("--certificate", o.certificate_out, "write the certificate JSON here");
  for (auto [name, help, h] : {std::tuple{"support-exact", "exact support number", Handler(cmd_support_exact)},
                               std::tuple{"stretch-exact", "exact tree stretch", Handler(cmd_stretch_exact)},
                               std::tuple{"congestion-exact", "exact spanning tree congestion", Handler(cmd_congestion_exact)}}) {
    add(name, help, h, [&] { return o.cap ? json{{"cap", *o.cap}} : json::object(); })
        ->add_option("--cap", o.cap, "override the relevant enumeration cap");
  }
  add("iso-longest", "longest isometric cycle", cmd_iso_longest);
  add("iso-check", "isometric k-cycle search", cmd_iso_check, [&] { return json{{"k", o.k}}; })
      ->add_option("--k", o.k)
      ->required();
  add("lok36-check", "pair-path conditions for length k", cmd_lok36, [&] { return json{{"k", o.k}}; })
      ->add_option("--k", o.k)
      ->required();
  add("dual", "dual multigraph of a plane graph", cmd_dual);
  add("verify-duality", "congestion/stretch duality on a plane graph", cmd_verify_duality,
      [&] { return json{{"all_trees", o.all_trees}}; })
      ->add_flag("--all-trees", o.all_trees, "check every spanning tree");
  add("verify-cert", "re-verify a supported or isometric certificate", cmd_verify_cert,
      [&] { return json{{"cert", o.cert_in}}; })
      ->add_option("--cert", o.cert_in, "certificate JSON file")
      ->required();
  add("bench", "run the corpus manifest", nullptr, [&] { return json{{"manifest", o.manifest}}; })
      ->add_option("--manifest", o.manifest, "manifest JSON; default built-in corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (gen->parsed()) return run_gen(o);
    for (const auto& s : subs) {
      if (s.app->parsed()) return run_report(s.app->get_name(), o, s.params(), s.handler);
    }
    return kInputError;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return kResourceError;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
