// AVX2 kernel variant.  This translation unit is compiled with -mavx2 and
// its functions run only after the runtime CPU check in simd_select.cpp.

#include <immintrin.h>

#include "pacres/simd.hpp"

namespace pacres::simd {
namespace {

inline std::uint64_t hsum_popcount(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return static_cast<std::uint64_t>(__builtin_popcountll(lanes[0])) +
         __builtin_popcountll(lanes[1]) + __builtin_popcountll(lanes[2]) +
         __builtin_popcountll(lanes[3]);
}

std::uint64_t v_popcount(const std::uint64_t* a, std::size_t n) {
  std::uint64_t c = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    c += hsum_popcount(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)));
  }
  for (; i < n; ++i) c += __builtin_popcountll(a[i]);
  return c;
}

std::uint64_t v_popcount_and2(const std::uint64_t* a, const std::uint64_t* b,
                              std::size_t n) {
  std::uint64_t c = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    c += hsum_popcount(_mm256_and_si256(va, vb));
  }
  for (; i < n; ++i) c += __builtin_popcountll(a[i] & b[i]);
  return c;
}

void v_and_store(std::uint64_t* dst, const std::uint64_t* a,
                 const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_and_si256(va, vb));
  }
  for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void v_and_inplace(std::uint64_t* dst, const std::uint64_t* a, std::size_t n) {
  v_and_store(dst, dst, a, n);
}

void v_or_inplace(std::uint64_t* dst, const std::uint64_t* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i vd = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_or_si256(vd, va));
  }
  for (; i < n; ++i) dst[i] |= a[i];
}

void v_xor_inplace(std::uint64_t* dst, const std::uint64_t* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i vd = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_xor_si256(vd, va));
  }
  for (; i < n; ++i) dst[i] ^= a[i];
}

bool v_is_zero(const std::uint64_t* a, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_or_si256(acc,
                          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)));
  }
  std::uint64_t tail = 0;
  for (; i < n; ++i) tail |= a[i];
  return _mm256_testz_si256(acc, acc) && tail == 0;
}

bool v_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_or_si256(acc, _mm256_andnot_si256(vb, va));
  }
  std::uint64_t tail = 0;
  for (; i < n; ++i) tail |= a[i] & ~b[i];
  return _mm256_testz_si256(acc, acc) && tail == 0;
}

}  // namespace

const Kernels& avx2_kernels() {
  static const Kernels k{
      "avx2",       v_popcount,   v_popcount_and2, v_and_store,
      v_and_inplace, v_or_inplace, v_xor_inplace,   v_is_zero,
      v_subset,
  };
  return k;
}

}  // namespace pacres::simd
