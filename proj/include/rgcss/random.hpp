#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace rgcss {

/// splitmix64 mixing step; used to derive independent sub-stream seeds.
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Seed for the r-th independent stream of a seeded experiment. Stream 0 of
/// seed s is distinct from stream s of seed 0 by construction.
inline std::uint64_t split_stream(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream + 1));
}

/// Seeded standard-normal sampler.
///
/// Uniform variates are drawn from std::mt19937_64 (a fully specified
/// generator) as (x >> 11) / 2^53 shifted into (0, 1], and transformed by
/// Box-Muller. The output stream is therefore reproducible for a fixed seed;
/// std::normal_distribution is deliberately avoided because its algorithm is
/// implementation-defined.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : gen_(seed) {}

  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = next_open_unit();
    const double u2 = next_open_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  // Uniform on (0, 1]: the +1 keeps log() away from zero.
  double next_open_unit() {
    const std::uint64_t x = gen_() >> 11;
    return double(x + 1) * 0x1.0p-53;
  }

  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace rgcss
