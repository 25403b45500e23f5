#pragma once

#include <cstdint>
#include <random>

#include "mixlink/mixed_poly.hpp"

namespace mixlink {

/// Deterministic random source. Only the raw mt19937_64 stream is used and
/// all distributions are implemented here, so sequences are identical across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream number `index` derived from `root` (SplitMix64 mix).
  static Rng substream(std::uint64_t root, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  long uniform_int(long lo, long hi);
  /// Standard normal (Box-Muller).
  double normal();
  /// Standard complex normal: independent N(0,1) real and imaginary parts.
  Complex complex_normal() {
    const double re = normal();
    return {re, normal()};
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace mixlink
