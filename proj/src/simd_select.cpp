#include "pacres/simd.hpp"

#include <cstdlib>
#include <string>

#if defined(__x86_64__) || defined(_M_X64)
#include <cpuid.h>
#define PACRES_X86 1
#else
#define PACRES_X86 0
#endif

namespace pacres::simd {

#if PACRES_HAVE_AVX2_TU
const Kernels& avx2_kernels();
#endif
#if PACRES_HAVE_NEON_TU
const Kernels& neon_kernels();
#endif

namespace {

#if PACRES_X86
bool cpu_supports_avx2() {
  unsigned eax = 0, ebx = 0, ecx = 0, edx = 0;
  if (!__get_cpuid_count(7, 0, &eax, &ebx, &ecx, &edx)) return false;
  if ((ebx & (1u << 5)) == 0) return false;  // AVX2
  // OS must save/restore YMM state.
  if (!__get_cpuid(1, &eax, &ebx, &ecx, &edx)) return false;
  if ((ecx & (1u << 27)) == 0) return false;  // OSXSAVE
  unsigned lo = 0, hi = 0;
  __asm__ volatile("xgetbv" : "=a"(lo), "=d"(hi) : "c"(0));
  return (lo & 0x6u) == 0x6u;  // XMM and YMM enabled
}
#endif

const Kernels* detect() {
#if PACRES_HAVE_AVX2_TU && PACRES_X86
  if (cpu_supports_avx2()) return &avx2_kernels();
#endif
#if PACRES_HAVE_NEON_TU
  return &neon_kernels();
#endif
  return &scalar();
}

const Kernels* find(std::string_view name) {
  if (name == "scalar") return &scalar();
#if PACRES_HAVE_AVX2_TU && PACRES_X86
  if (name == "avx2" && cpu_supports_avx2()) return &avx2_kernels();
#endif
#if PACRES_HAVE_NEON_TU
  if (name == "neon") return &neon_kernels();
#endif
  return nullptr;
}

const Kernels* initial() {
  if (const char* env = std::getenv("PACRES_KERNELS"); env && *env) {
    if (std::string_view(env) != "auto") {
      if (const Kernels* k = find(env)) return k;
      // Unknown or unsupported request: fall through to detection.
    }
  }
  return detect();
}

const Kernels*& current() {
  static const Kernels* k = initial();
  return k;
}

}  // namespace

const Kernels& active() { return *current(); }

std::vector<const Kernels*> available() {
  std::vector<const Kernels*> out{&scalar()};
#if PACRES_HAVE_AVX2_TU && PACRES_X86
  if (cpu_supports_avx2()) out.push_back(&avx2_kernels());
#endif
#if PACRES_HAVE_NEON_TU
  out.push_back(&neon_kernels());
#endif
  return out;
}

bool force(std::string_view name) {
  if (name == "auto") {
    current() = detect();
    return true;
  }
  if (const Kernels* k = find(name)) {
    current() = k;
    return true;
  }
  return false;
}

}  // namespace pacres::simd
