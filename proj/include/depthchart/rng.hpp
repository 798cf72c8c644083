#ifndef DEPTHCHART_RNG_HPP
#define DEPTHCHART_RNG_HPP

#include <cmath>
#include <cstdint>
#include <vector>

// Counter-based deterministic random streams. Every variate is a pure
// function of (seed, key0, key1, key2), so any subset of a stream can be
// regenerated independently and parallel fills are schedule-independent.

namespace depthchart::rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix(std::uint64_t seed, std::uint64_t k0, std::uint64_t k1,
                         std::uint64_t k2) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ k0);
  h = splitmix64(h ^ k1);
  h = splitmix64(h ^ k2);
  return h;
}

// Uniform in [0,1) from the top 53 bits.
inline double to_unit(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Uniform in (0,1]; safe as a log argument.
inline double to_unit_pos(std::uint64_t h) {
  return static_cast<double>((h >> 11) + 1) * 0x1.0p-53;
}

// Standard normal keyed by (seed, k0, k1, k2) via Box-Muller.
inline double normal(std::uint64_t seed, std::uint64_t k0, std::uint64_t k1,
                     std::uint64_t k2) {
  const double u1 = to_unit_pos(mix(seed, k0, k1, 2 * k2));
  const double u2 = to_unit(mix(seed, k0, k1, 2 * k2 + 1));
  constexpr double two_pi = 6.283185307179586476925286766559;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

// Uniformly distributed unit vector in R^p, keyed by (seed, index).
// Index extends the stream: the first n draws are the same for every n' >= n.
inline std::vector<double> unit_vector(int p, std::uint64_t seed, std::uint64_t index) {
  std::vector<double> v(static_cast<size_t>(p));
  double norm2 = 0.0;
  for (int c = 0; c < p; ++c) {
    v[static_cast<size_t>(c)] = normal(seed, 0x64697273ULL, index, static_cast<std::uint64_t>(c));
    norm2 += v[static_cast<size_t>(c)] * v[static_cast<size_t>(c)];
  }
  if (norm2 == 0.0) {  // vanishing draw; fall back to a fixed axis
    v.assign(static_cast<size_t>(p), 0.0);
    v[0] = 1.0;
    return v;
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& x : v) x *= inv;
  return v;
}

}  // namespace depthchart::rng

#endif  // DEPTHCHART_RNG_HPP
