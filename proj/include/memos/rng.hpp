#pragma once

#include <cstdint>

namespace memos {

// splitmix64: fixed, documented generator so every stream is bit-reproducible
// across platforms and compilers (std:: distributions are not).
class Splitmix64 {
 public:
  explicit Splitmix64(uint64_t seed = 0) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0,1), 53 mantissa bits
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

// child stream seed derived from (parent seed, stream index)
inline uint64_t derive_seed(uint64_t seed, uint64_t index) {
  Splitmix64 s(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
  return s.next();
}

}  // namespace memos
