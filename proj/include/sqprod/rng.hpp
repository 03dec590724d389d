#pragma once

#include <cstdint>
#include <limits>

namespace sqprod {

// Counter-based stream: output i of stream (key, stream_id) is a fixed
// bijective mix of (key, stream_id, i), so any trial's randomness can be
// regenerated without touching other streams. The mixer is SplitMix64's
// finalizer applied to a Weyl sequence offset by the mixed stream key.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t key, std::uint64_t stream_id)
      : base_(mix(mix(key) ^ (stream_id * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return mix(base_ + ++counter_ * 0x9E3779B97F4A7C15ULL); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  std::uint64_t counter() const { return counter_; }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

}  // namespace sqprod
