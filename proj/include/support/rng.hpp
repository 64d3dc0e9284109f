#pragma once

#include <cstdint>
#include <string_view>

namespace support {

// splitmix64: tiny deterministic generator. Suites derive one stream per case
// from (master seed, case id) so reports are reproducible across platforms,
// which std::mt19937 + std::uniform_int_distribution would not guarantee.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, n) by rejection; n must be nonzero.
  uint64_t below(uint64_t n) {
    uint64_t limit = ~0ULL - ~0ULL % n;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  int64_t range(int64_t lo, int64_t hi) {  // inclusive bounds
    return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

 private:
  uint64_t state_;
};

inline uint64_t fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Per-case stream: decorrelates cases sharing a master seed.
inline SplitMix64 case_rng(uint64_t master_seed, std::string_view case_id) {
  SplitMix64 mixer(master_seed ^ fnv1a(case_id));
  mixer.next();
  return mixer;
}

}  // namespace support
