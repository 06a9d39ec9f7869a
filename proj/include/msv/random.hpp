#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "msv/permutation.hpp"

namespace msv {

// SplitMix64: small, seedable, identical output on every platform. Used for
// all sampling so runs are reproducible across machines and languages.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Unbiased uniform draw from [0, bound).
  uint64_t below(uint64_t bound) {
    if (bound < 2) return 0;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

 private:
  uint64_t state_;
};

// Uniform permutation of [n] by Fisher-Yates.
inline Permutation random_permutation(int n, SplitMix64& gen) {
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    std::swap(word[static_cast<size_t>(i)],
              word[gen.below(static_cast<uint64_t>(i) + 1)]);
  }
  return Permutation::from_one_line(std::move(word));
}

}  // namespace msv
