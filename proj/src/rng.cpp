#include "qtorus/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace qtorus {

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {
inline uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

Rng::Rng(uint64_t seed) {
  uint64_t sm = seed;
  for (auto& s : s_) s = splitmix64(sm);
}

uint64_t Rng::next_u64() {
  const uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int Rng::uniform_int(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next_u64() % span);
}

std::complex<double> Rng::complex_in_disc(double radius) {
  // rejection sampling keeps the distribution rotation invariant
  for (;;) {
    const double re = uniform(-1.0, 1.0);
    const double im = uniform(-1.0, 1.0);
    if (re * re + im * im <= 1.0) return {radius * re, radius * im};
  }
}

Rng Rng::for_row(uint64_t seed, uint64_t index) {
  uint64_t sm = seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
  return Rng(splitmix64(sm));
}

}  // namespace qtorus
