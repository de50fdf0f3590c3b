#pragma once

#include <complex>
#include <random>

namespace hankelforge {

// Uniform doubles drawn from the raw 64-bit stream so sequences do not
// depend on the standard library's distribution implementation.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

inline std::complex<double> random_in_disk(std::mt19937_64& rng) {
  for (;;) {
    const double x = uniform(rng, -1.0, 1.0);
    const double y = uniform(rng, -1.0, 1.0);
    if (x * x + y * y <= 1.0) return {x, y};
  }
}

inline std::complex<double> random_on_circle(std::mt19937_64& rng) {
  const double theta = uniform(rng, 0.0, 6.283185307179586476925287);
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace hankelforge
