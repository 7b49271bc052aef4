#pragma once

#include <cstdint>
#include <random>

namespace lsa {

// SplitMix64 step; used to derive independent stream seeds from one master
// seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Seedable 64-bit generator; stream(master, k) gives the k-th independent
// stream of a master seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng stream(std::uint64_t master, std::uint64_t index) {
    std::uint64_t state = master;
    std::uint64_t derived = splitmix64(state);
    state = derived ^ (index * 0xD1B54A32D192ED03ULL);
    return Rng(splitmix64(state));
  }

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lsa
