#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

// Deterministic PRNG stack used by every randomized component: splitmix64 as
// the seed mixer and xoshiro256** as the stream generator. Sampling helpers
// are written out explicitly so results are bit-identical across platforms
// and standard-library versions.

namespace topomap {

// splitmix64 (Steele/Lea/Flood finalizer, as published by Vigna): one full
// step of the splitmix64 engine seeded at `x`.
inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Sub-seed derivation: seed XOR stream-index, fed through splitmix64.
// Independent work items (dataset patterns, per-neuron init jitter,
// per-epoch shuffles) get their own stream, so generation order and
// scheduling cannot change results.
inline std::uint64_t subseed(std::uint64_t seed, std::uint64_t index) noexcept {
  return splitmix64(seed ^ index);
}

// xoshiro256** 1.0 (Blackman & Vigna), state seeded by expanding a 64-bit
// seed with splitmix64 as the authors recommend.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed) noexcept {
    std::uint64_t x = seed;
    for (auto& word : state_) {
      x += 0x9e3779b97f4a7c15ull;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
      word = z ^ (z >> 31);
    }
  }

  std::uint64_t next() noexcept {
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

  // Uniform in [0, 1) with 53 random bits.
  double next_double() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Unbiased integer in [0, bound); bound must be >= 1.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  static std::uint64_t rotl(std::uint64_t v, int k) noexcept {
    return (v << k) | (v >> (64 - k));
  }

  std::uint64_t state_[4];
};

// Fisher-Yates shuffle driven by the generator above.
template <typename T>
void shuffle(std::vector<T>& items, Xoshiro256& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace topomap
