#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cyclemetrics/graph.hpp"
#include "cyclemetrics/plane_graph.hpp"

namespace cmcli {

using cyclemetrics::Graph;
using cyclemetrics::PlaneGraph;
using nlohmann::json;

enum ExitCode : int { kOk = 0, kInternal = 1, kInputError = 2, kResourceError = 3, kVerifyFailed = 4 };

struct Caps {
  std::uint64_t tree_cap;
  std::uint64_t cycle_cap;
  json to_json() const { return {{"tree_cap", tree_cap}, {"cycle_cap", cycle_cap}}; }
};

// A graph read from stdin or --input. `plane` is set when the JSON carries faces.
struct LoadedInput {
  std::string bytes;
  Graph graph;
  std::optional<PlaneGraph> plane;
};

std::string read_source(const std::string& path);  // "-" or empty reads stdin
LoadedInput load_graph(const std::string& path, bool require_connected = true);

std::string sha256_hex(std::string_view bytes);

// gen kind + integer args, shared by `gen` and `bench`.
struct Generated {
  Graph graph;
  std::optional<PlaneGraph> plane;
  std::string name;
};
Generated generate(const std::string& kind, const std::vector<std::size_t>& args, bool plane,
                   const Graph* input = nullptr);

// result payload + exit code for one subcommand
struct Outcome {
  json result;
  int code = kOk;
};

json bench_rows(const json& manifest, const Caps& defaults, unsigned threads);
std::string default_manifest();
unsigned thread_count();

void print_human(const std::string& command, const json& report);

}  // namespace cmcli
