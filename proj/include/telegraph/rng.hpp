// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <cstdint>

// Splittable counter-keyed streams (splitmix64 finalizer). Replica i of an
// experiment draws from stream_for(seed, i); no RNG state is shared between
// replicas, so results are independent of how replicas map onto workers.

namespace telegraph {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// uniform on (0, 1]; never returns 0, safe under log()
  double uniform() {
    return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
  }

  double exponential(double rate) { return -std::log(uniform()) / rate; }

  bool coin() { return (next() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

/// Keyed mix of (seed, replica index) -> independent stream.
inline SplitMix64 stream_for(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return SplitMix64(z ^ (z >> 31));
}

}  // namespace telegraph
