#include <cstdlib>
#include <cstring>

#include "cyclocode/simd.hpp"

namespace cyclocode::kernels {

namespace {

const ops& pick() {
    const char* forced = std::getenv("CYCLOCODE_KERNELS");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0)
        return scalar_ops();
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_available()) return avx2_ops();
#elif defined(__aarch64__)
    return neon_ops();
#endif
    return scalar_ops();
}

}  // namespace

const ops& active_ops() {
    static const ops& chosen = pick();
    return chosen;
}

}  // namespace cyclocode::kernels
