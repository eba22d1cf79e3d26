#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

// Bit-stream kernels with runtime dispatch.
//
// The hot loops of this library are bitwise streaming operations over
// packed uint64 words: counting how often a clause is falsified across a
// packed sample set, XOR-ing rows during F2 elimination, OR-ing per-clause
// falsification masks.  A portable scalar implementation is the reference;
// on x86-64 an AVX2 variant is selected at runtime when the CPU and OS
// support it, and on aarch64 a NEON variant is used.  The selection can be
// forced with the environment variable PACRES_KERNELS (scalar|avx2|neon|
// auto) or programmatically with force().  The test suite checks every
// built variant against the scalar reference bit for bit.

namespace pacres::simd {

struct Kernels {
  const char* name;
  std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t n);
  std::uint64_t (*popcount_and2)(const std::uint64_t* a, const std::uint64_t* b,
                                 std::size_t n);
  void (*and_store)(std::uint64_t* dst, const std::uint64_t* a,
                    const std::uint64_t* b, std::size_t n);
  void (*and_inplace)(std::uint64_t* dst, const std::uint64_t* a, std::size_t n);
  void (*or_inplace)(std::uint64_t* dst, const std::uint64_t* a, std::size_t n);
  void (*xor_inplace)(std::uint64_t* dst, const std::uint64_t* a, std::size_t n);
  bool (*is_zero)(const std::uint64_t* a, std::size_t n);
  // a subset of b, i.e. (a & ~b) == 0
  bool (*subset)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
};

const Kernels& scalar();

// The currently selected kernel set.
const Kernels& active();

// Kernel sets usable on this machine (always includes scalar).
std::vector<const Kernels*> available();

// Force a variant by name; "auto" re-runs detection.  Returns false if the
// requested variant is not built or not supported on this CPU.
bool force(std::string_view name);

}  // namespace pacres::simd
