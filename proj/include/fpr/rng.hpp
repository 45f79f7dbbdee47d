#pragma once

#include <cstdint>

namespace fpr {

// SplitMix64 (Steele, Lea & Flood; the java.util.SplittableRandom mixer).
// Seedable and splittable: seeding a child with a parent's next() output
// yields an independent stream, which keeps generation order-free and
// byte-reproducible for a fixed seed.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  SplitMix64 split() { return SplitMix64(next()); }

  // Uniform double in [0, 1), 53 mantissa bits.
  constexpr double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace fpr
