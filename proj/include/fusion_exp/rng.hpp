#pragma once

#include <cstdint>
#include <random>

#include "fusion_exp/bigint.hpp"

namespace fexp {

/// Seeded, platform-independent source of uniform big integers.
///
/// Backed by mt19937_64 with rejection sampling so that a fixed seed yields
/// the same sequence everywhere (the CLI's byte-identical output relies on it).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, bound). bound must be positive.
  Int below(const Int& bound);

  /// Uniform in [lo, hi).
  Int range(const Int& lo, const Int& hi) { return lo + below(hi - lo); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fexp
