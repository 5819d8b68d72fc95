#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclemetrics/cycles.hpp"
#include "cyclemetrics/graph.hpp"

namespace cyclemetrics {

/// A cycle cut at three positions into three edge-disjoint paths, with the
/// support value it claims and the value actually recomputed for it.
struct SupportedCycleCertificate {
  std::vector<Vertex> cycle;
  std::array<std::size_t, 3> cuts{};  // positions into `cycle`
  int claimed_k = 0;
  int verified_k = 0;
};

/// Min over transversal triples of the max pairwise graph distance, plus the
/// first triple (one vertex per interval) attaining it.
struct SupportedValue {
  int value = 0;
  std::array<Vertex, 3> triple{};
};

/// The three closed intervals of a cut cycle. Cut positions may be given in
/// any order; they are taken in increasing order around the cycle.
std::array<std::vector<Vertex>, 3> cycle_intervals(std::span<const Vertex> cycle, std::array<std::size_t, 3> cuts);

/// Largest k for which the cut cycle is k-supported. A vertex shared by two
/// intervals may stand for both of them. Throws InputError when `cycle` is
/// not a simple cycle of g or the cuts are not three distinct positions.
SupportedValue supported_value(const Graph& g, const DistanceMatrix& dist, std::span<const Vertex> cycle,
                               std::array<std::size_t, 3> cuts);
SupportedValue supported_value(const Graph& g, std::span<const Vertex> cycle, std::array<std::size_t, 3> cuts);

struct SupportResult {
  int k = 0;
  std::optional<SupportedCycleCertificate> witness;  // none for forests
};

/// Exact support number: max of supported_value over all simple cycles and
/// all three-way cuts. Throws ResourceError past `cycle_cap` cycles.
SupportResult support_oracle(const Graph& g, std::uint64_t cycle_cap = kDefaultCycleCap);

struct CertificateCheck {
  bool ok = false;
  int verified_k = 0;
  std::array<Vertex, 3> triple{};  // triple achieving verified_k
  std::string message;             // the violated clause when !ok
};

/// Re-verifies structure and value from scratch; the stored verified_k is
/// ignored. Never throws for malformed certificates, reports them instead.
CertificateCheck verify_certificate(const Graph& g, const DistanceMatrix& dist,
                                    const SupportedCycleCertificate& cert);

nlohmann::json certificate_to_json(const SupportedCycleCertificate& cert);
SupportedCycleCertificate certificate_from_json(const nlohmann::json& doc);

}  // namespace cyclemetrics
