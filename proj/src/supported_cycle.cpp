#include "cyclemetrics/supported_cycle.hpp"

#include <algorithm>
#include <limits>

#include "cyclemetrics/errors.hpp"

namespace cyclemetrics {

namespace {

void require_cuts(std::size_t len, std::array<std::size_t, 3>& cuts) {
  std::sort(cuts.begin(), cuts.end());
  if (cuts[2] >= len) throw InputError("cut position " + std::to_string(cuts[2]) + " outside the cycle");
  if (cuts[0] == cuts[1] || cuts[1] == cuts[2]) throw InputError("cut positions must be distinct");
}

// Exact min-max over triples, giving up early once the running minimum drops
// to `floor` (the caller only cares about values above it).
SupportedValue min_max_triple(const DistanceMatrix& dist, const std::array<std::vector<Vertex>, 3>& iv,
                              int floor = -1) {
  SupportedValue best{std::numeric_limits<int>::max(), {}};
  for (Vertex a : iv[0]) {
    for (Vertex b : iv[1]) {
      const int ab = dist(a, b);
      if (ab >= best.value) continue;
      for (Vertex c : iv[2]) {
        const int worst = std::max({ab, dist(a, c), dist(b, c)});
        if (worst < best.value) {
          best = {worst, {a, b, c}};
          if (best.value <= floor) return best;
        }
      }
    }
  }
  return best;
}

}  // namespace

std::array<std::vector<Vertex>, 3> cycle_intervals(std::span<const Vertex> cycle, std::array<std::size_t, 3> cuts) {
  require_cuts(cycle.size(), cuts);
  std::array<std::vector<Vertex>, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t from = cuts[i];
    const std::size_t to = cuts[(i + 1) % 3];
    for (std::size_t p = from;; p = (p + 1) % cycle.size()) {
      out[i].push_back(cycle[p]);
      if (p == to) break;
    }
  }
  return out;
}

SupportedValue supported_value(const Graph& g, const DistanceMatrix& dist, std::span<const Vertex> cycle,
                               std::array<std::size_t, 3> cuts) {
  require_cycle(g, cycle);
  return min_max_triple(dist, cycle_intervals(cycle, cuts));
}

SupportedValue supported_value(const Graph& g, std::span<const Vertex> cycle, std::array<std::size_t, 3> cuts) {
  return supported_value(g, all_pairs_distances(g), cycle, cuts);
}

SupportResult support_oracle(const Graph& g, std::uint64_t cycle_cap) {
  const DistanceMatrix dist = all_pairs_distances(g);
  SupportResult result;
  int best = 0;

  for_each_cycle(g, cycle_cap, [&](std::span<const Vertex> cycle) {
    const std::size_t len = cycle.size();
    int diameter = 0;
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = i + 1; j < len; ++j) diameter = std::max(diameter, dist(cycle[i], cycle[j]));
    if (diameter <= best) return;

    for (std::size_t a = 0; a < len; ++a) {
      for (std::size_t b = a + 1; b < len; ++b) {
        for (std::size_t c = b + 1; c < len; ++c) {
          // Letting two intervals share their common cut vertex bounds the
          // value by the distance from that vertex to the third interval.
          auto nearest = [&](Vertex from, std::size_t lo, std::size_t hi) {
            int d = std::numeric_limits<int>::max();
            for (std::size_t p = lo;; p = (p + 1) % len) {
              d = std::min(d, dist(from, cycle[p]));
              if (p == hi || d <= best) break;
            }
            return d;
          };
          if (nearest(cycle[b], c, a) <= best) continue;
          if (nearest(cycle[c], a, b) <= best) continue;
          if (nearest(cycle[a], b, c) <= best) continue;
          auto iv = cycle_intervals(cycle, {a, b, c});
          auto sv = min_max_triple(dist, iv, best);
          if (sv.value > best) {
            best = sv.value;
            result.k = best;
            result.witness = SupportedCycleCertificate{{cycle.begin(), cycle.end()}, {a, b, c}, best, best};
          }
        }
      }
    }
  });
  if (!result.witness) {
    // Forests have no cycle; every other graph reaches at least 1 above.
    result.k = 0;
  }
  return result;
}

CertificateCheck verify_certificate(const Graph& g, const DistanceMatrix& dist,
                                    const SupportedCycleCertificate& cert) {
  CertificateCheck check;
  SupportedValue sv;
  try {
    sv = supported_value(g, dist, cert.cycle, cert.cuts);
  } catch (const InputError& e) {
    check.message = std::string("structure: ") + e.what();
    return check;
  }
  check.verified_k = sv.value;
  check.triple = sv.triple;
  if (sv.value < cert.claimed_k) {
    check.message = "value: claimed_k " + std::to_string(cert.claimed_k) + " exceeds the supported value " +
                    std::to_string(sv.value) + " attained by the triple (" + g.label(sv.triple[0]) + ", " +
                    g.label(sv.triple[1]) + ", " + g.label(sv.triple[2]) + ")";
    return check;
  }
  check.ok = true;
  return check;
}

nlohmann::json certificate_to_json(const SupportedCycleCertificate& cert) {
  return {{"cycle", cert.cycle}, {"cuts", cert.cuts}, {"claimed_k", cert.claimed_k}, {"verified_k", cert.verified_k}};
}

SupportedCycleCertificate certificate_from_json(const nlohmann::json& doc) {
  try {
    SupportedCycleCertificate cert;
    cert.cycle = doc.at("cycle").get<std::vector<Vertex>>();
    auto cuts = doc.at("cuts").get<std::vector<std::size_t>>();
    if (cuts.size() != 3) throw InputError("certificate needs exactly three cuts");
    std::copy(cuts.begin(), cuts.end(), cert.cuts.begin());
    cert.claimed_k = doc.at("claimed_k").get<int>();
    cert.verified_k = doc.value("verified_k", 0);
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed certificate JSON: ") + e.what());
  }
}

}  // namespace cyclemetrics
