#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "entdecay/linalg.hpp"
#include "entdecay/states.hpp"

namespace entdecay {

/// Deterministic uniform sampler. Doubles are derived from the raw 64-bit
/// stream directly, so the same seed reproduces the same values on every
/// platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 gen_;
};

/// Uniformly distributed unit vector.
inline NoiseAxis random_axis(SeededRng& rng) {
  const double z = rng.uniform(-1.0, 1.0);
  const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return NoiseAxis(s * std::cos(phi), s * std::sin(phi), z);
}

/// General complex 2x2 matrix with entries uniform in [-1, 1] x [-1, 1]i.
inline Mat2 random_matrix2(SeededRng& rng) {
  Mat2 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      m(i, j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  return m;
}

}  // namespace entdecay
