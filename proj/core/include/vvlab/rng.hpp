#pragma once

#include <cstdint>

namespace vvlab {

// splitmix64; self-contained so streams are identical across platforms
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound), rejection sampling
  uint64_t below(uint64_t bound) {
    uint64_t lim = ~0ull - ~0ull % bound;
    uint64_t v;
    do {
      v = next();
    } while (v >= lim);
    return v % bound;
  }

private:
  uint64_t state_;
};

inline uint64_t mix_seed(uint64_t base, uint64_t salt) {
  Rng r(base ^ (salt * 0x9e3779b97f4a7c15ull + 0x243f6a8885a308d3ull));
  return r.next();
}

} // namespace vvlab
