#ifndef MERCHANT_RNG_HPP
#define MERCHANT_RNG_HPP

#include <cstdint>

namespace merchant {

/// xorshift64* (Vigna 2016): state ^= state >> 12; state ^= state << 25;
/// state ^= state >> 27; output = state * 0x2545F4914F6CDD1D.
///
/// The seed is passed once through SplitMix64 to spread low-entropy seeds;
/// a zero result is replaced by the SplitMix64 increment constant. Part of
/// the reproducibility contract: same seed, same stream, in any language.
class XorShift64Star {
 public:
  explicit XorShift64Star(std::uint64_t seed) : state_(mix(seed)) {
    if (state_ == 0) state_ = kGolden;
  }

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  static std::uint64_t mix(std::uint64_t z) {
    z += kGolden;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace merchant

#endif  // MERCHANT_RNG_HPP
