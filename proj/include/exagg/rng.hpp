#pragma once

#include <cstdint>

namespace exagg {
namespace rng {

// Counter-based generation: every draw is a pure function of (seed, counters),
// so streams are reproducible regardless of evaluation order and safe to
// generate concurrently.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                         std::uint64_t c = 0) {
  std::uint64_t h = splitmix64(seed ^ 0xD1B54A32D192ED03ULL);
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ b);
  return splitmix64(h ^ c);
}

// Uniform on [0, 1).
inline double uniform01(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                        std::uint64_t c = 0) {
  return static_cast<double>(mix(seed, a, b, c) >> 11) * 0x1.0p-53;
}

// Uniform on (0, 1]; never exactly zero.
inline double uniform01_open(std::uint64_t seed, std::uint64_t a,
                             std::uint64_t b, std::uint64_t c = 0) {
  return static_cast<double>((mix(seed, a, b, c) >> 11) + 1) * 0x1.0p-53;
}

}  // namespace rng
}  // namespace exagg
