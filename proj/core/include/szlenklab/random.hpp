#pragma once

#include <cstdint>

namespace szlenklab {

// Counter-splittable generator: stream(root, id) yields an independent,
// reproducible substream regardless of thread scheduling. Core is
// xoshiro256** seeded through splitmix64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) { seed_from(seed); }
  Rng(std::uint64_t root_seed, std::uint64_t stream_id) {
    seed_from(root_seed ^ (0x9e3779b97f4a7c15ULL * (stream_id + 1)));
  }

  std::uint64_t next_u64();

  // Uniform in [0,1) with 53 random bits; identical across platforms.
  double u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  // Inclusive bounds.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Log-uniform over [lo, hi], lo > 0.
  double log_uniform(double lo, double hi);

  // Uniform nonzero value in [-m, m] bounded away from zero.
  double nonzero_uniform(double m);

  bool coin() { return (next_u64() & 1u) != 0; }

 private:
  void seed_from(std::uint64_t seed);
  std::uint64_t s_[4] = {};
};

}  // namespace szlenklab
