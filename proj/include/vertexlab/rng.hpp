#pragma once

#include <complex>
#include <cstdint>

namespace vxl {

// xoshiro256** seeded through splitmix64. <random> distributions are
// implementation-defined, so reproducible test points need a hand-rolled
// generator.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& w : state_) {
      x += 0x9e3779b97f4a7c15ull;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
      w = z ^ (z >> 31);
    }
  }

  std::uint64_t next() {
    auto rotl = [](std::uint64_t v, int s) { return (v << s) | (v >> (64 - s)); };
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // uniform in [0,1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::complex<double> on_circle(double radius) {
    const double t = uniform(0.0, 6.283185307179586476925286766559);
    return {radius * std::cos(t), radius * std::sin(t)};
  }

  std::complex<double> in_annulus(double rlo, double rhi) {
    return on_circle(uniform(rlo, rhi));
  }

 private:
  std::uint64_t state_[4];
};

}  // namespace vxl
