#pragma once
// Deterministic randomness. Every randomized routine takes an explicit
// 64-bit seed, and per-trial seeds are derived statelessly from a master
// seed, so trial t sees the same stream no matter how many workers run
// or in which order trials complete.

#include <cstdint>
#include <random>
#include <stdexcept>

namespace trilow {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t master, uint64_t stream) {
  return splitmix64(master ^ splitmix64(stream));
}

// mt19937_64 engine with our own bounded-int and unit-interval mappings;
// output depends only on the seed, never on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t u64() { return eng_(); }

  // Unbiased integer in [0, bound) by rejection.
  uint64_t below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound is zero");
    const uint64_t cutoff = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const uint64_t x = eng_();
      if (x >= cutoff) return x % bound;
    }
  }

  int below_int(int bound) { return static_cast<int>(below(static_cast<uint64_t>(bound))); }

  // Uniform in [0,1) with 53 random bits.
  double real01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return real01() < p; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace trilow
