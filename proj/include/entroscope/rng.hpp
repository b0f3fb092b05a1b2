#pragma once

#include <cstdint>
#include <random>

namespace entroscope {

/// splitmix64 step, used to derive independent stream seeds from (seed, counter).
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t counter) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ counter));
}

/// log-uniform positive value over [10^lo, 10^hi]
inline double log_uniform(std::mt19937_64& rng, double lo = -6.0, double hi = 6.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  return std::pow(10.0, u(rng));
}

}  // namespace entroscope
