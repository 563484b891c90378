#include "sgr/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace sgr::kern {

#if defined(SGR_BUILD_AVX2)
const Table& avx2_table();
#endif
#if defined(SGR_BUILD_NEON)
const Table& neon_table();
#endif

namespace {

struct Selection {
  const Table* table;
  const char* name;
};

Selection select() {
  // SGR_KERNELS=scalar forces the reference path (useful when validating
  // a SIMD variant against it on the same machine).
  if (const char* env = std::getenv("SGR_KERNELS"); env && std::strcmp(env, "scalar") == 0) {
    return {&scalar(), "scalar"};
  }
#if defined(SGR_BUILD_AVX2)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return {&avx2_table(), "avx2"};
  }
#endif
#if defined(SGR_BUILD_NEON)
  return {&neon_table(), "neon"};
#endif
  return {&scalar(), "scalar"};
}

const Selection& selection() {
  static const Selection s = select();
  return s;
}

}  // namespace

const Table& active() { return *selection().table; }
const char* active_name() { return selection().name; }

}  // namespace sgr::kern
