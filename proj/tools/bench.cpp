#include <atomic>
#include <chrono>
#include <thread>

#include "cli.hpp"
#include "cyclemetrics/cyclewidth.hpp"
#include "cyclemetrics/errors.hpp"
#include "cyclemetrics/isocycle.hpp"
#include "cyclemetrics/planar_dual.hpp"
#include "cyclemetrics/stretch.hpp"
#include "cyclemetrics/supported_cycle.hpp"

namespace cmcli {

using namespace cyclemetrics;

std::string default_manifest() {
  json rows = json::array();
  auto add = [&](std::string gen, std::vector<std::size_t> args, bool plane) {
    rows.push_back({{"gen", gen}, {"args", args}, {"plane", plane}});
  };
  add("path", {2}, true);
  add("path", {6}, true);
  for (std::size_t n = 5; n <= 10; ++n) add("cycle", {n}, true);
  add("complete", {4}, false);
  add("complete", {5}, false);
  add("rect-grid", {2, 3}, true);
  add("rect-grid", {2, 4}, true);
  add("rect-grid", {3, 3}, true);
  add("rect-grid", {3, 4}, true);
  add("tri-grid", {3}, true);
  add("tri-grid", {4}, true);
  add("tri-grid", {5}, true);
  add("lok-counterexample", {}, false);
  return rows.dump(2);
}

namespace {

int ceil_div3(int x) { return (x + 2) / 3; }

template <class F>
auto timed(json& timing, const char* key, F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  auto r = f();
  timing[key] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

json run_row(const json& spec, const Caps& defaults) {
  json row;
  json timing = json::object();
  json errors = json::array();
  Caps caps = defaults;
  try {
    if (!spec.is_object() || !spec.contains("gen")) throw InputError("manifest row needs \"gen\"");
    const auto kind = spec["gen"].get<std::string>();
    auto args = spec.value("args", std::vector<std::size_t>{});
    bool plane = spec.value("plane", false);
    if (spec.contains("caps")) {
      caps.tree_cap = spec["caps"].value("tree_cap", caps.tree_cap);
      caps.cycle_cap = spec["caps"].value("cycle_cap", caps.cycle_cap);
    }
    auto gen = generate(kind, args, plane);
    row["name"] = spec.value("name", gen.name);
    row["caps"] = caps.to_json();
    const Graph& g = gen.graph;
    if (!is_connected(g)) throw InputError("generated graph is disconnected");
    row["n"] = g.vertex_count();
    row["m"] = g.edge_count();
    const auto dist = all_pairs_distances(g);

    auto approx = timed(timing, "width", [&] { return support_approx(g); });
    row["width"] = approx.width;
    row["width_lower"] = approx.lower;
    row["width_upper"] = approx.upper;
    if (approx.certificate) {
      auto check = verify_certificate(g, dist, *approx.certificate);
      row["certificate_k"] = check.verified_k;
      if (!check.ok) errors.push_back("certificate: " + check.message);
    }

    auto guarded = [&](const char* what, auto&& f) -> json {
      try {
        return f();
      } catch (const ResourceError& e) {
        errors.push_back(std::string(what) + " skipped: " + e.what());
        return nullptr;
      }
    };
    row["support"] = guarded("support", [&] {
      return json(timed(timing, "support", [&] { return support_oracle(g, caps.cycle_cap).k; }));
    });
    row["stretch"] = guarded("stretch", [&] {
      return json(timed(timing, "stretch", [&] { return stretch_oracle(g, caps.tree_cap).value; }));
    });
    row["congestion"] = guarded("congestion", [&] {
      return json(timed(timing, "congestion", [&] { return congestion_oracle(g, caps.tree_cap).value; }));
    });
    row["iso_longest"] = timed(timing, "iso", [&] { return longest_isometric_cycle(g).length; });
    if (gen.plane) {
      row["dual_stretch"] = guarded("dual", [&] {
        return json(timed(timing, "dual", [&] { return verify_duality_global(*gen.plane, caps.tree_cap).dual_stretch; }));
      });
    }

    // null means the inputs to the check were not computed within caps
    json checks;
    const json &k = row["support"], &sigma = row["stretch"], &s = row["congestion"];
    checks["sigma_ge_k"] = (k.is_null() || sigma.is_null()) ? json(nullptr) : json(sigma.get<int>() >= k.get<int>());
    checks["k_ge_width_lower"] = k.is_null() ? json(nullptr) : json(k.get<int>() >= ceil_div3(approx.width));
    checks["k_le_width_upper"] = k.is_null() ? json(nullptr) : json(k.get<int>() <= approx.width + 4);
    checks["sigma_ge_iso_third"] =
        sigma.is_null() ? json(nullptr) : json(sigma.get<int>() >= ceil_div3(row["iso_longest"].get<int>()));
    if (gen.plane) {
      const json& sd = row["dual_stretch"];
      checks["s_eq_dual_sigma_plus_one"] =
          (s.is_null() || sd.is_null()) ? json(nullptr) : json(s.get<int>() == sd.get<int>() + 1);
    }
    row["checks"] = checks;
    bool ok = true;
    for (const auto& [name, v] : checks.items()) {
      if (v.is_boolean() && !v.get<bool>()) ok = false;
    }
    for (const auto& e : errors) {
      if (e.get<std::string>().rfind("certificate", 0) == 0) ok = false;
    }
    row["ok"] = ok;
  } catch (const std::exception& e) {
    errors.push_back(std::string("error: ") + e.what());
    row["ok"] = false;
    if (!row.contains("name")) row["name"] = spec.is_object() ? spec.value("gen", std::string("?")) : "?";
  }
  row["errors"] = errors;
  row["timing"] = timing;
  return row;
}

}  // namespace

json bench_rows(const json& manifest, const Caps& defaults, unsigned threads) {
  if (!manifest.is_array()) throw InputError("manifest must be a JSON array of rows");
  std::vector<json> rows(manifest.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) rows[i] = run_row(manifest[i], defaults);
  };
  std::vector<std::jthread> pool;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(rows.size())));
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  json out;
  int violations = 0;
  for (const auto& r : rows) violations += r.value("ok", false) ? 0 : 1;
  out["rows"] = rows;
  out["violations"] = violations;
  return out;
}

}  // namespace cmcli
