#pragma once

#include <cstdint>

namespace dlab {

// Deterministic 64-bit generator (splitmix64). Unlike <random> distributions,
// every draw is fully specified here, so a seed reproduces the same stream on
// any platform or standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed0_(seed), state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound > 0. Multiply-shift mapping.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  // Uniform integer in [lo, hi], inclusive.
  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

  // Independent child stream; forks of the same (seed, stream) pair coincide.
  Rng fork(std::uint64_t stream) const {
    Rng mixer(seed0_ ^ (stream * 0xd1342543de82ef95ULL + 0x100000001b3ULL));
    return Rng(mixer.next());
  }

  std::uint64_t seed() const { return seed0_; }

 private:
  std::uint64_t seed0_;
  std::uint64_t state_;
};

}  // namespace dlab
