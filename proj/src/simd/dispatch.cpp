#include "asua/simd.hpp"

#include <cstdlib>
#include <cstring>

namespace asua::simd {

#if defined(ASUA_HAVE_AVX2)
namespace detail {
const Kernels& avx2_table();
}
#endif

const Kernels* avx2() {
#if defined(ASUA_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const Kernels& active() {
  static const Kernels& chosen = [] () -> const Kernels& {
    const char* forced = std::getenv("ASUA_SIMD");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return scalar();
    if (const Kernels* k = avx2()) return *k;
    return scalar();
  }();
  return chosen;
}

}  // namespace asua::simd
