#pragma once

#include <cstdint>
#include <string_view>

namespace hdc {

// Counter-based deterministic generator (splitmix64 output function over a
// running counter). The same seed produces the same stream on every platform.
// Substreams are derived by hashing, so every trial of an experiment can be
// replayed on its own.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), counter_(0) {}

  static constexpr std::string_view algorithm() { return "splitmix64"; }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next() { return mix(seed_ + (++counter_) * kGolden); }

  // Uniform in [0, bound), bound > 0.
  std::uint64_t bounded(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  // Uniform in [0, 1) with 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Independent generator for a labelled substream. Does not advance *this,
  // and depends on the current position, so successive forks with the same
  // label at different points differ.
  Rng fork(std::uint64_t stream) const {
    return Rng(derive(seed_ + mix(counter_), stream));
  }

  // Sub-seed as a hash of (seed, index).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    return mix(seed + kGolden * mix(index + kGolden));
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t seed_;
  std::uint64_t counter_;
};

}  // namespace hdc
