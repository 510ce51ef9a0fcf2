#pragma once

#include <cstdint>

namespace cheese {

/// Counter-based generator: the value at (key, counter) is a pure function of
/// the pair, so any draw can be recomputed without replaying a stream.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  static constexpr std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31U);
  }

  std::uint64_t bits(std::uint64_t key, std::uint64_t counter) const {
    return mix(mix(seed_ ^ mix(key)) + counter);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform(std::uint64_t key, std::uint64_t counter) const {
    return static_cast<double>(bits(key, counter) >> 11U) * 0x1.0p-53;
  }

  /// Sequential convenience interface over an internal counter.
  std::uint64_t next_bits() { return bits(stream_key_, counter_++); }
  double next_uniform() { return uniform(stream_key_, counter_++); }
  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_uniform(); }

  CounterRng substream(std::uint64_t key) const {
    CounterRng r(seed_);
    r.stream_key_ = mix(stream_key_ ^ mix(key + 0x51ed2701ULL));
    return r;
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace cheese
