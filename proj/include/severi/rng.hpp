#pragma once

#include <cstdint>

#include "severi/rational.hpp"

namespace severi {

// splitmix64. Hand-rolled so that seeded runs are bit-identical across
// platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Integer in [1, 10^6], used as an exact rational specialization value.
  long coefficient() { return static_cast<long>(next() % 1000000ULL) + 1; }

  Rat rat_coefficient() { return Rat(coefficient()); }

 private:
  std::uint64_t state_;
};

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  SplitMix64 g(seed ^ (salt * 0x9e3779b97f4a7c15ULL));
  return g.next();
}

}  // namespace severi
