#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclemetrics {

// Malformed or out-of-contract input (bad vertex id, not a spanning tree, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive oracle refused to run because the work would exceed its cap.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t cap)
      : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

}  // namespace cyclemetrics
