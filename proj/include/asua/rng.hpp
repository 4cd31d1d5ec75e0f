#pragma once

#include <array>
#include <cstdint>

// Pinned pseudo-random generators. Seeded runs must reproduce bit-for-bit on
// any platform and from any language, so nothing here defers to <random>
// distributions.
//
//   SplitMix64   state += 0x9E3779B97F4A7C15
//                z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//                z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//                z ^= z >> 31
//   xoshiro256** result = rotl(s1 * 5, 7) * 9, shifts 17 and rotl 45,
//                state filled by four SplitMix64 draws.
//   substream(seed, i): xoshiro256** seeded with
//                mix64(mix64(seed) ^ mix64(i + 0x9E3779B97F4A7C15))
//                where mix64 is the SplitMix64 finalizer.

namespace asua {

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  constexpr std::uint64_t next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

 private:
  std::uint64_t state_;
};

class Xoshiro256 {
 public:
  explicit constexpr Xoshiro256(std::uint64_t seed) noexcept : s_{} {
    SplitMix64 sm(seed);
    for (auto& word : s_) word = sm.next();
  }

  constexpr std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform in [0, bound) by rejection; bound must be > 0.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  static constexpr Xoshiro256 substream(std::uint64_t seed, std::uint64_t index) noexcept {
    return Xoshiro256(mix64(mix64(seed) ^ mix64(index + 0x9E3779B97F4A7C15ULL)));
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }
  std::array<std::uint64_t, 4> s_;
};

}  // namespace asua
