#include "pacres/simd.hpp"

namespace pacres::simd {
namespace {

std::uint64_t sc_popcount(const std::uint64_t* a, std::size_t n) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += __builtin_popcountll(a[i]);
  return c;
}

std::uint64_t sc_popcount_and2(const std::uint64_t* a, const std::uint64_t* b,
                               std::size_t n) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += __builtin_popcountll(a[i] & b[i]);
  return c;
}

void sc_and_store(std::uint64_t* dst, const std::uint64_t* a,
                  const std::uint64_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

void sc_and_inplace(std::uint64_t* dst, const std::uint64_t* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] &= a[i];
}

void sc_or_inplace(std::uint64_t* dst, const std::uint64_t* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] |= a[i];
}

void sc_xor_inplace(std::uint64_t* dst, const std::uint64_t* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= a[i];
}

bool sc_is_zero(const std::uint64_t* a, std::size_t n) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc |= a[i];
  return acc == 0;
}

bool sc_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc |= a[i] & ~b[i];
  return acc == 0;
}

}  // namespace

const Kernels& scalar() {
  static const Kernels k{
      "scalar",      sc_popcount,   sc_popcount_and2, sc_and_store,
      sc_and_inplace, sc_or_inplace, sc_xor_inplace,   sc_is_zero,
      sc_subset,
  };
  return k;
}

}  // namespace pacres::simd
