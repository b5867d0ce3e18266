#pragma once

#include <cstdint>
#include <random>
#include <utility>

namespace stabset {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-style seed for the `index`-th member of `stream` under `master`.
/// Independent of the order in which indices are consumed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(master) ^ stream) ^ index);
}

/// mt19937_64 with portable integer/real draws (no std distributions, whose
/// output is implementation-defined).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(engine_()) * bound) >> 64);
  }

  /// Uniform index in [0, bound) together with the low word of the same product,
  /// which is uniform on [0, 2^64) given the index (up to a granularity of bound / 2^64).
  std::pair<std::uint64_t, std::uint64_t> split_below(std::uint64_t bound) {
    auto p = static_cast<unsigned __int128>(engine_()) * bound;
    return {static_cast<std::uint64_t>(p >> 64), static_cast<std::uint64_t>(p)};
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace stabset
