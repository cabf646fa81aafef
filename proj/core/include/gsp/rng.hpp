#pragma once

#include <cstdint>
#include <random>

namespace gsp {

/// Deterministic random source shared by every stochastic operation.
/// The stream is pinned to mt19937_64 with normals drawn by Box-Muller,
/// so a given seed produces the same sequence on every platform
/// (std::*_distribution is implementation-defined and never used).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; the spare draw is cached.
  double normal();

  bool bernoulli(double p) { return uniform() < p; }
  double rademacher() { return uniform() < 0.5 ? -1.0 : 1.0; }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace gsp
