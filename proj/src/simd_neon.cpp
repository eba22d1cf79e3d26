// NEON kernel variant for aarch64, where NEON is part of the baseline ISA.

#include <arm_neon.h>

#include "pacres/simd.hpp"

namespace pacres::simd {
namespace {

inline std::uint64_t popcount_u64x2(uint64x2_t v) {
  const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(v));
  return vaddvq_u8(bytes);
}

std::uint64_t n_popcount(const std::uint64_t* a, std::size_t n) {
  std::uint64_t c = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) c += popcount_u64x2(vld1q_u64(a + i));
  for (; i < n; ++i) c += __builtin_popcountll(a[i]);
  return c;
}

std::uint64_t n_popcount_and2(const std::uint64_t* a, const std::uint64_t* b,
                              std::size_t n) {
  std::uint64_t c = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    c += popcount_u64x2(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  }
  for (; i < n; ++i) c += __builtin_popcountll(a[i] & b[i]);
  return c;
}

void n_and_store(std::uint64_t* dst, const std::uint64_t* a,
                 const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_u64(dst + i, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void n_and_inplace(std::uint64_t* dst, const std::uint64_t* a, std::size_t n) {
  n_and_store(dst, dst, a, n);
}

void n_or_inplace(std::uint64_t* dst, const std::uint64_t* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), vld1q_u64(a + i)));
  }
  for (; i < n; ++i) dst[i] |= a[i];
}

void n_xor_inplace(std::uint64_t* dst, const std::uint64_t* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(a + i)));
  }
  for (; i < n; ++i) dst[i] ^= a[i];
}

bool n_is_zero(const std::uint64_t* a, std::size_t n) {
  std::uint64_t acc = 0;
  std::size_t i = 0;
  uint64x2_t vacc = vdupq_n_u64(0);
  for (; i + 2 <= n; i += 2) vacc = vorrq_u64(vacc, vld1q_u64(a + i));
  acc = vgetq_lane_u64(vacc, 0) | vgetq_lane_u64(vacc, 1);
  for (; i < n; ++i) acc |= a[i];
  return acc == 0;
}

bool n_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::uint64_t acc = 0;
  std::size_t i = 0;
  uint64x2_t vacc = vdupq_n_u64(0);
  for (; i + 2 <= n; i += 2) {
    vacc = vorrq_u64(vacc, vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  }
  acc = vgetq_lane_u64(vacc, 0) | vgetq_lane_u64(vacc, 1);
  for (; i < n; ++i) acc |= a[i] & ~b[i];
  return acc == 0;
}

}  // namespace

const Kernels& neon_kernels() {
  static const Kernels k{
      "neon",       n_popcount,   n_popcount_and2, n_and_store,
      n_and_inplace, n_or_inplace, n_xor_inplace,   n_is_zero,
      n_subset,
  };
  return k;
}

}  // namespace pacres::simd
