#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cyclemetrics/graph.hpp"

namespace cyclemetrics {

inline constexpr std::uint64_t kDefaultCycleCap = 1'000'000;

using Cycle = std::vector<Vertex>;

/// Calls `visit` once per simple cycle of g (length >= 3), each in canonical
/// orientation: smallest vertex first, then its smaller cycle neighbor.
/// Throws ResourceError as soon as more than `cap` cycles have been found.
void for_each_cycle(const Graph& g, std::uint64_t cap, const std::function<void(std::span<const Vertex>)>& visit);

std::vector<Cycle> enumerate_cycles(const Graph& g, std::uint64_t cap = kDefaultCycleCap);

/// Rotates and reflects a cycle into canonical orientation.
Cycle canonical_cycle(std::span<const Vertex> cycle);

/// Throws InputError unless `cycle` is a simple closed cycle of g of length >= 3.
void require_cycle(const Graph& g, std::span<const Vertex> cycle);

}  // namespace cyclemetrics
