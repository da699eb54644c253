#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>

#include "latbench/matrix.hpp"

namespace latbench {

// Counter-based random values. Every drawn number is a pure function of a
// 64-bit key, so fields can be initialized per *global* site coordinate and
// come out identical under any lattice decomposition.

inline uint64_t mix64(uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Order-dependent fold of a word tuple into one key.
inline uint64_t key_hash(std::initializer_list<uint64_t> words) {
  uint64_t h = 0x243f6a8885a308d3ull;
  for (uint64_t w : words) h = mix64(h ^ (w + 0x9e3779b97f4a7c15ull));
  return h;
}

/// Uniform in (0, 1], never exactly 0 so log() below is safe.
inline double u01(uint64_t bits) { return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53; }

/// Two independent standard normals derived from one key (Box-Muller).
inline void gauss_pair(uint64_t key, double& g0, double& g1) {
  const double u1 = u01(mix64(key ^ 0x5555555555555555ull));
  const double u2 = u01(mix64(key ^ 0xaaaaaaaaaaaaaaaaull));
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double th = 2.0 * std::numbers::pi * u2;
  g0 = r * std::cos(th);
  g1 = r * std::sin(th);
}

/// Sequential stream view over the keyed generator.
struct RngStream {
  uint64_t key = 0;
  uint64_t counter = 0;

  explicit RngStream(uint64_t k) : key(k) {}

  double gauss() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double a, b;
    gauss_pair(key_hash({key, ++counter}), a, b);
    spare_ = b;
    have_spare_ = true;
    return a;
  }

  Cplx gauss_cplx() {
    double a, b;
    gauss_pair(key_hash({key, ++counter}), a, b);
    return {a, b};
  }

private:
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace latbench
