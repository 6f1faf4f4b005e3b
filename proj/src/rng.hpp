#pragma once

#include <cstdint>

namespace primfield {

// Counter-based deterministic generator. Draw number t from stream s of seed
// k is splitmix64(mix(k, s) + t * 2^64/phi), so a given (seed, stream, t)
// triple produces the same value on every platform and is independent of how
// many values other streams consumed.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(splitmix64(seed ^ splitmix64(stream + 0x6a09e667f3bcc909ull))) {}

  std::uint64_t next() { return splitmix64(key_ + 0x9e3779b97f4a7c15ull * ++counter_); }

  // Uniform in [0, bound), bound >= 1. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace primfield
