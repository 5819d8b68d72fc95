#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include <openssl/evp.h>

#include "cli.hpp"
#include "cyclemetrics/errors.hpp"
#include "cyclemetrics/generators.hpp"
#include "cyclemetrics/graph_io.hpp"

namespace cmcli {

using cyclemetrics::InputError;

std::string read_source(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

LoadedInput load_graph(const std::string& path, bool require_connected) {
  LoadedInput out{read_source(path), Graph(0, {}), std::nullopt};
  auto first = out.bytes.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && out.bytes[first] == '{') {
    json doc;
    try {
      doc = json::parse(out.bytes);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("malformed graph JSON: ") + e.what());
    }
    if (doc.is_object() && doc.contains("faces")) {
      out.plane = cyclemetrics::plane_graph_from_json(doc);
      out.graph = out.plane->base;
    } else {
      out.graph = cyclemetrics::graph_from_json(doc);
    }
  } else {
    out.graph = cyclemetrics::parse_edge_list(out.bytes);
  }
  if (out.graph.vertex_count() == 0) throw InputError("empty graph");
  if (require_connected && !cyclemetrics::is_connected(out.graph)) {
    throw InputError("input graph is disconnected");
  }
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string s;
  for (unsigned i = 0; i < len; ++i) {
    s += hex[md[i] >> 4];
    s += hex[md[i] & 15];
  }
  return s;
}

namespace {

void want_args(const std::string& kind, const std::vector<std::size_t>& args, std::size_t count) {
  if (args.size() != count) {
    throw InputError("gen " + kind + " takes " + std::to_string(count) + " size argument(s), got " +
                     std::to_string(args.size()));
  }
}

}  // namespace

Generated generate(const std::string& kind, const std::vector<std::size_t>& args, bool plane, const Graph* input) {
  using namespace cyclemetrics;
  auto no_plane = [&] {
    if (plane) throw InputError("gen " + kind + " has no plane embedding");
  };
  Generated out{Graph(0, {}), std::nullopt, kind};
  for (auto a : args) out.name += " " + std::to_string(a);

  if (kind == "path") {
    want_args(kind, args, 1);
    out.graph = gen_path(args[0]);
    if (plane) out.plane = plane_tree(out.graph);
  } else if (kind == "cycle") {
    want_args(kind, args, 1);
    out.graph = gen_cycle(args[0]);
    if (plane) out.plane = plane_cycle(args[0]);
  } else if (kind == "complete") {
    want_args(kind, args, 1);
    no_plane();
    out.graph = gen_complete(args[0]);
  } else if (kind == "rect-grid") {
    want_args(kind, args, 2);
    auto grid = gen_rect_grid(args[0], args[1]);
    out.graph = grid.graph;
    if (plane) out.plane = grid.plane;
  } else if (kind == "tri-grid") {
    want_args(kind, args, 1);
    auto grid = gen_tri_grid(args[0]);
    out.graph = grid.graph;
    if (plane) out.plane = grid.plane;
  } else if (kind == "subdivide") {
    want_args(kind, args, 0);
    no_plane();
    if (input == nullptr) throw InputError("gen subdivide needs an input graph");
    out.graph = subdivide(*input).result;
  } else if (kind == "lok-counterexample") {
    want_args(kind, args, 0);
    no_plane();
    out.graph = gen_lok_counterexample();
  } else {
    throw InputError("unknown generator " + kind);
  }
  return out;
}

unsigned thread_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CYCLEMETRICS_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw InputError(std::string("CYCLEMETRICS_THREADS must be a positive integer, got '") + env + "'");
  }
  return hw;
}

void print_human(const std::string& command, const json& report) {
  std::ostringstream os;
  os << command << "  (" << report.value("wall_time_ms", 0.0) << " ms)\n";
  const json& result = report.at("result");
  if (command == "bench" && result.contains("rows")) {
    os << "graph                      n    m    W  W/3    k    σ    s  iso  checks\n";
    auto cell = [](const json& v) {
      std::string s = v.is_null() ? "-" : v.dump();
      return std::string(s.size() < 5 ? 5 - s.size() : 0, ' ') + s;
    };
    for (const auto& row : result["rows"]) {
      std::string name = row.value("name", "?");
      name.resize(std::max<std::size_t>(name.size(), 22), ' ');
      auto at = [&](const char* key) { return row.contains(key) ? row.at(key) : json(nullptr); };
      os << name << cell(at("n")) << cell(at("m")) << cell(at("width")) << cell(at("width_lower"))
         << cell(at("support")) << cell(at("stretch")) << cell(at("congestion")) << cell(at("iso_longest"))
         << "  " << (row.value("ok", false) ? "ok" : "FAIL");
      if (row.contains("errors") && !row["errors"].empty()) os << "  " << row["errors"].dump();
      os << "\n";
    }
    os << "violations: " << result.value("violations", 0) << "\n";
  } else {
    for (const auto& [key, value] : result.items()) os << "  " << key << ": " << value.dump() << "\n";
  }
  std::cout << os.str();
}

}  // namespace cmcli
