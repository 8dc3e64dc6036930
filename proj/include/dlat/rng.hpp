#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace dlat {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent mt19937_64 stream for (seed, index); schedule-independent.
inline std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ (index + 0x632be59bd9b4e019ULL)));
}

// Own uniform and normal draws so values do not depend on the standard
// library's distribution implementations.
inline double uniform01(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

inline double uniform_real(std::mt19937_64& g, double lo, double hi) { return lo + (hi - lo) * uniform01(g); }

inline std::int64_t uniform_int(std::mt19937_64& g, std::int64_t lo, std::int64_t hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(g());
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do x = g();
  while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

inline double standard_normal(std::mt19937_64& g) {
  double u1;
  do u1 = uniform01(g);
  while (u1 <= 0);
  double u2 = uniform01(g);
  return std::sqrt(-2 * std::log(u1)) * std::cos(2 * M_PI * u2);
}

}  // namespace dlat
