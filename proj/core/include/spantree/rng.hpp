#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace spantree {

/// Deterministic random source: a seeded std::mt19937_64 plus hand-rolled
/// draws.  mt19937_64 output is fully specified by the standard and the
/// draws below avoid std::uniform_int_distribution, whose stream is
/// implementation-defined, so a given seed produces the same values on
/// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound), bound > 0.  Rejection sampling keeps
  /// the draw unbiased.
  std::size_t below(std::size_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    const std::uint64_t b = bound;
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % b;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return static_cast<std::size_t>(x % b);
  }

  /// True with probability p (clamped to [0,1]); uses the top 53 bits of
  /// one engine step.
  bool bernoulli(double p) {
    if (p <= 0.0) { engine_(); return false; }
    if (p >= 1.0) { engine_(); return true; }
    return (engine_() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace spantree
