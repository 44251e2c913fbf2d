#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace spoly {

// Deterministic RNG wrapper. mt19937_64 output is fixed by the standard;
// the distribution mappings below are hand-rolled so streams are identical
// across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Per-trial stream: stir the trial index into the seed so trials are
  // independent of execution order.
  static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
    return Rng(mix(seed ^ 0x9e3779b97f4a7c15ULL, trial));
  }

  std::uint64_t next_u64() { return eng_(); }

  double uniform01() {  // in [0,1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double exponential(double rate = 1.0) {
    return -std::log1p(-uniform01()) / rate;
  }

  // Standard Cauchy, trimmed away from the poles of tan.
  double cauchy() {
    const double u = 1e-6 + (1.0 - 2e-6) * uniform01();
    return std::tan(3.14159265358979323846 * (u - 0.5));
  }

  double normal() {  // Box-Muller, one value per call
    const double u = std::max(uniform01(), 1e-300);
    const double v = uniform01();
    return std::sqrt(-2.0 * std::log(u)) *
           std::cos(2.0 * 3.14159265358979323846 * v);
  }

 private:
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
  }
  std::mt19937_64 eng_;
};

}  // namespace spoly
