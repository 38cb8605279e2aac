#pragma once

#include <cstdint>

namespace tl {

// Deterministic, platform-independent generator (splitmix64). Seeds and
// streams are recorded in reports so every randomized check replays.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound > 0. Modulo bias is irrelevant for the
  // tiny bounds used here but rejection keeps it exact anyway.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = ~0ULL - ~0ULL % bound;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % bound;
  }

  int range(int lo, int hi) {  // inclusive ends
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

// Stable per-cell stream derived from a base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b, std::uint64_t c) {
  Rng rng(base ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xc2b2ae3d27d4eb4fULL) ^
          (c * 0x165667b19e3779f9ULL));
  return rng.next();
}

}  // namespace tl
