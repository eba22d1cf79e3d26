#pragma once

#include <cstdint>

#include "pacres/rational.hpp"

// Deterministic random streams.
//
// All randomness flows through SplitMix64 streams addressed by
// (seed, tag).  A run derives one stream per purpose from its master
// seed, so e.g. the sampler and the masker never share a stream and
// changing the masking rate does not perturb the drawn assignments.
//
// Bitstream contract (relied on by the samples file format and by the
// reproducibility tests):
//   * stream state starts at mix(seed ^ (tag * 0x9E3779B97F4A7C15))
//   * every random decision consumes exactly one 64-bit word
//   * a fair bit is the low bit of a word
//   * Bernoulli(p) for exact p = num/den holds iff
//       (word >> 11) * den < num * 2^53
// Parallel use: worker k derives its stream with tag + ((k+1) << 8).

namespace pacres {

inline std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

enum class StreamTag : std::uint64_t {
  Sampling = 1,
  Masking = 2,
};

class Rng {
 public:
  Rng(std::uint64_t seed, StreamTag tag)
      : state_(splitmix64_mix(
            seed ^ (static_cast<std::uint64_t>(tag) * 0x9E3779B97F4A7C15ull))) {}

  explicit Rng(std::uint64_t raw_state) : state_(raw_state) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    return splitmix64_mix(z);
  }

  // Fair coin: low bit of one word.
  bool next_bit() { return (next_u64() & 1ull) != 0; }

  // Exact Bernoulli(p); consumes one word for any p, including 0 and 1.
  bool bernoulli(const Rational& p) {
    const std::uint64_t u = next_u64() >> 11;  // 53 bits
    const unsigned __int128 lhs =
        static_cast<unsigned __int128>(u) * p.den;
    const unsigned __int128 rhs =
        (static_cast<unsigned __int128>(p.num)) << 53;
    return lhs < rhs;
  }

  // Uniform real in [0,1) as a 53-bit dyadic, for categorical draws.
  // Consumes one word.
  std::uint64_t next_u53() { return next_u64() >> 11; }

 private:
  std::uint64_t state_;
};

}  // namespace pacres
