#include <cstdlib>
#include <stdexcept>
#include <string>

#include "abhlab/kernels.hpp"

namespace abh::kernels {

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

const Ops& select() {
  if (const char* env = std::getenv("ABHLAB_KERNELS")) {
    const std::string v(env);
    if (v == "scalar") return scalar_ops();
    if (v == "avx2") {
      if (!avx2_available())
        throw std::runtime_error(
            "ABHLAB_KERNELS=avx2 requested but this CPU lacks AVX2/FMA");
      return avx2_ops();
    }
    throw std::runtime_error("unrecognized ABHLAB_KERNELS value '" + v +
                             "' (expected 'scalar' or 'avx2')");
  }
  return avx2_available() ? avx2_ops() : scalar_ops();
}

}  // namespace

const Ops& active() {
  static const Ops& ops = select();
  return ops;
}

}  // namespace abh::kernels
