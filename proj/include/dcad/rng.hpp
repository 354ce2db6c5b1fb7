#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace dcad {

/// Deterministic 64-bit mixer; used to derive independent per-unit seeds
/// from one master seed so parallel and serial runs agree bit-for-bit.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// mt19937_64 as the bit source with hand-rolled derivations, so every
/// draw is identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform index in [0, n); n must be positive.
  std::size_t next_index(std::size_t n) {
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

 private:
  std::mt19937_64 engine_;
};

/// First m slots of a seeded partial Fisher-Yates shuffle of 0..n-1.
inline std::vector<std::uint32_t> sample_without_replacement(std::size_t n, std::size_t m,
                                                             Rng& rng) {
  std::vector<std::uint32_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<std::uint32_t>(i);
  if (m > n) m = n;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t j = i + rng.next_index(n - i);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(m);
  return idx;
}

}  // namespace dcad
