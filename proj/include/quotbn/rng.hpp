#pragma once

#include <cstdint>

namespace quotbn {

/// splitmix64: deterministic across platforms, cheap to key into independent
/// substreams. Used only as a reproducibility knob for sampling.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [-bound, bound].
  long next_coeff(int bound) {
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
    return static_cast<long>(next() % span) - bound;
  }
};

/// Keyed substream derivation so per-trial streams are independent of the
/// order they are drawn in.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t key) {
  SplitMix64 s(seed ^ (0xa0761d6478bd642fULL + key * 0xe7037ed1a0b428dbULL));
  return s.next();
}

}  // namespace quotbn
