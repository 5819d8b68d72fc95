#include "cyclemetrics/cycles.hpp"

#include <algorithm>

#include "cyclemetrics/errors.hpp"

namespace cyclemetrics {

namespace {

class CycleSearch {
 public:
  CycleSearch(const Graph& g, std::uint64_t cap, const std::function<void(std::span<const Vertex>)>& visit)
      : g_(g), cap_(cap), visit_(visit), on_path_(g.vertex_count(), false) {}

  void run() {
    for (Vertex s = 0; s < g_.vertex_count(); ++s) {
      start_ = s;
      path_.assign(1, s);
      on_path_[s] = true;
      extend(s);
      on_path_[s] = false;
    }
  }

 private:
  // Grows simple paths from start_ through vertices larger than start_.
  void extend(Vertex tip) {
    for (Vertex w : g_.neighbors(tip)) {
      if (w < start_) continue;
      if (w == start_) {
        // Close only once per cycle: second vertex below the last one.
        if (path_.size() >= 3 && path_[1] < tip) emit();
        continue;
      }
      if (on_path_[w]) continue;
      on_path_[w] = true;
      path_.push_back(w);
      extend(w);
      path_.pop_back();
      on_path_[w] = false;
    }
  }

  void emit() {
    if (++found_ > cap_) throw ResourceError("simple cycle count exceeds the cycle cap", cap_);
    visit_(path_);
  }

  const Graph& g_;
  std::uint64_t cap_;
  const std::function<void(std::span<const Vertex>)>& visit_;
  std::vector<bool> on_path_;
  std::vector<Vertex> path_;
  Vertex start_ = 0;
  std::uint64_t found_ = 0;
};

}  // namespace

void for_each_cycle(const Graph& g, std::uint64_t cap, const std::function<void(std::span<const Vertex>)>& visit) {
  CycleSearch(g, cap, visit).run();
}

std::vector<Cycle> enumerate_cycles(const Graph& g, std::uint64_t cap) {
  std::vector<Cycle> out;
  for_each_cycle(g, cap, [&](std::span<const Vertex> c) { out.emplace_back(c.begin(), c.end()); });
  return out;
}

Cycle canonical_cycle(std::span<const Vertex> cycle) {
  if (cycle.empty()) return {};
  const std::size_t len = cycle.size();
  const auto low = static_cast<std::size_t>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  const Vertex next = cycle[(low + 1) % len];
  const Vertex prev = cycle[(low + len - 1) % len];
  Cycle out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(next <= prev ? cycle[(low + i) % len] : cycle[(low + len - i) % len]);
  }
  return out;
}

void require_cycle(const Graph& g, std::span<const Vertex> cycle) {
  if (cycle.size() < 3) throw InputError("a cycle needs at least 3 vertices");
  std::vector<bool> seen(g.vertex_count(), false);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex v = cycle[i];
    if (v >= g.vertex_count()) throw InputError("cycle vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw InputError("cycle repeats vertex " + g.label(v));
    seen[v] = true;
    const Vertex w = cycle[(i + 1) % cycle.size()];
    if (w < g.vertex_count() && !g.has_edge(v, w)) {
      throw InputError("consecutive cycle vertices " + g.label(v) + " and " + g.label(w) + " are not adjacent");
    }
  }
}

}  // namespace cyclemetrics
