#pragma once

#include <complex>
#include <cstdint>

namespace qtorus {

// splitmix64; used to expand seeds and to derive per-row streams.
uint64_t splitmix64(uint64_t& state);

// xoshiro256** with portable output mapping. Deterministic across platforms,
// unlike the std:: distributions.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t next_u64();
  double uniform();                       // [0, 1)
  double uniform(double lo, double hi);   // [lo, hi)
  int uniform_int(int lo, int hi);        // inclusive bounds
  std::complex<double> complex_in_disc(double radius = 1.0);

  // independent stream for row `index` of a seeded experiment
  static Rng for_row(uint64_t seed, uint64_t index);

 private:
  uint64_t s_[4];
};

}  // namespace qtorus
