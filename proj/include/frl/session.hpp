#pragma once

#include <cstdint>

#include "frl/modelcheck.hpp"

namespace frl {

/// Per-invocation configuration: free-group rank, RNG seed for the
/// randomized separation search, default bounds for bounded checking, and
/// output mode. A fixed seed makes every randomized search deterministic.
struct SessionConfig {
  enum class Output { Text, Json };

  int rank = 2;
  std::uint64_t seed = 1;
  modelcheck::DomainBounds bounds{};
  Output output = Output::Text;
};

} // namespace frl
