#include "cyclemetrics/graph_io.hpp"

#include <sstream>
#include <unordered_map>

#include "cyclemetrics/errors.hpp"

namespace cyclemetrics {

namespace {

class NameTable {
 public:
  Vertex intern(const std::string& name) {
    auto [it, inserted] = ids_.try_emplace(name, static_cast<Vertex>(names_.size()));
    if (inserted) names_.push_back(name);
    return it->second;
  }
  std::vector<std::string> take() { return std::move(names_); }
  std::size_t size() const { return names_.size(); }

 private:
  std::unordered_map<std::string, Vertex> ids_;
  std::vector<std::string> names_;
};

std::string json_name(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw InputError("vertex names must be strings or integers");
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  NameTable names;
  std::vector<Edge> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    fields >> a;
    if (!(fields >> b)) {
      names.intern(a);
      continue;
    }
    if (fields >> extra) throw InputError("line " + std::to_string(lineno) + ": expected \"u v\"");
    Vertex u = names.intern(a);
    Vertex v = names.intern(b);
    if (u == v) throw InputError("line " + std::to_string(lineno) + ": self-loop on " + a);
    edges.emplace_back(u, v);
  }
  const std::size_t n = names.size();
  return Graph(n, std::move(edges), names.take());
}

Graph graph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("edges")) throw InputError("graph JSON needs an \"edges\" array");
  std::vector<std::string> labels;
  std::size_t n = 0;
  const auto& vs = doc.contains("vertices") ? doc["vertices"] : nlohmann::json();
  if (vs.is_array()) {
    for (const auto& v : vs) labels.push_back(json_name(v));
    n = labels.size();
  } else if (vs.is_number_unsigned()) {
    n = vs.get<std::size_t>();
  } else {
    throw InputError("graph JSON needs a \"vertices\" array or count");
  }
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      throw InputError("each edge must be a pair of vertex indices");
    }
    auto u = e[0].get<std::uint64_t>();
    auto v = e[1].get<std::uint64_t>();
    if (u >= n || v >= n) throw InputError("edge index out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(n, std::move(edges), std::move(labels));
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.label(v));
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"vertices", vertices}, {"edges", edges}};
}

Graph parse_graph(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("malformed graph JSON: ") + e.what());
    }
    return graph_from_json(doc);
  }
  return parse_edge_list(text);
}

std::string to_edge_list(const Graph& g) {
  // Declarations are only needed when first appearance in the edge list
  // would not reproduce the ids.
  std::vector<bool> seen(g.vertex_count(), false);
  Vertex next = 0;
  bool ordered = true;
  for (const Edge& e : g.edges()) {
    for (Vertex x : {e.u, e.v}) {
      if (seen[x]) continue;
      seen[x] = true;
      if (x != next++) ordered = false;
    }
  }
  if (next != g.vertex_count()) ordered = false;
  // An edge written as "v u" with v < u would flip first appearance; edges are
  // written in stored orientation so this matches the check above.
  std::ostringstream out;
  if (!ordered) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << g.label(v) << '\n';
  }
  for (const Edge& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  return out.str();
}

}  // namespace cyclemetrics
