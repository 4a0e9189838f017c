// Copyright 2026 The geopse authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef GEOPSE_RNG_HPP_
#define GEOPSE_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "geopse/common.hpp"

namespace geopse {

inline uint64_t Fnv1a(const std::string& s) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Deterministic RNG. std::mt19937_64 has a portable bit stream, but the
// standard distributions do not, so the conversions to double live here.
class Rng {
 public:
  explicit Rng(uint64_t seed)
      : engine_(seed), seed_mix_(seed * 0x9e3779b97f4a7c15ull + 1) {}

  uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Inclusive integer range.
  int64_t RandInt(int64_t lo, int64_t hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(engine_() % span);
  }

  // Standard normal via Box-Muller; pairs are cached.
  double Normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = Uniform();
    double u2 = Uniform();
    while (u1 <= 0.0) u1 = Uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * kPi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  float UniformF() { return static_cast<float>(Uniform()); }
  float NormalF() { return static_cast<float>(Normal()); }

  // Independent child stream addressed by name.
  Rng Fork(const std::string& name) const {
    return Rng(seed_mix_ ^ Fnv1a(name));
  }

 private:
  std::mt19937_64 engine_;
  uint64_t seed_mix_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace geopse

#endif  // GEOPSE_RNG_HPP_
