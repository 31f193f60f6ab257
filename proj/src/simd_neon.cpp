#if defined(__aarch64__)

#include <arm_neon.h>

#include "cyclocode/simd.hpp"

namespace cyclocode::kernels {

namespace {

void xor_rows_neon(std::uint64_t* dst, const std::uint64_t* src,
                   std::size_t words) {
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        uint64x2_t a = vld1q_u64(dst + i);
        uint64x2_t b = vld1q_u64(src + i);
        vst1q_u64(dst + i, veorq_u64(a, b));
    }
    for (; i < words; ++i) dst[i] ^= src[i];
}

std::uint64_t popcount_words_neon(const std::uint64_t* w, std::size_t words) {
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        uint8x16_t v = vreinterpretq_u8_u64(vld1q_u64(w + i));
        total += vaddvq_u8(vcntq_u8(v));
    }
    for (; i < words; ++i)
        total += static_cast<std::uint64_t>(__builtin_popcountll(w[i]));
    return total;
}

void addmul_bytes_neon(std::uint8_t* dst, const std::uint8_t* src,
                       std::size_t len, std::uint8_t lambda, std::uint8_t p) {
    const uint8x16_t vp = vdupq_n_u8(p);
    for (std::uint8_t round = 0; round < lambda; ++round) {
        std::size_t i = 0;
        for (; i + 16 <= len; i += 16) {
            uint8x16_t t = vaddq_u8(vld1q_u8(dst + i), vld1q_u8(src + i));
            uint8x16_t ge = vcgeq_u8(t, vp);
            t = vsubq_u8(t, vandq_u8(ge, vp));
            vst1q_u8(dst + i, t);
        }
        for (; i < len; ++i) {
            std::uint8_t t = static_cast<std::uint8_t>(dst[i] + src[i]);
            dst[i] = t >= p ? static_cast<std::uint8_t>(t - p) : t;
        }
    }
}

std::size_t count_nonzero_neon(const std::uint8_t* v, std::size_t len) {
    const uint8x16_t one = vdupq_n_u8(1);
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 16 <= len; i += 16) {
        uint8x16_t eq = vceqq_u8(vld1q_u8(v + i), vdupq_n_u8(0));
        total += 16u - vaddvq_u8(vandq_u8(eq, one));
    }
    for (; i < len; ++i) total += v[i] != 0;
    return total;
}

}  // namespace

const ops& neon_ops() {
    static const ops table = {xor_rows_neon, popcount_words_neon,
                              addmul_bytes_neon, count_nonzero_neon, "neon"};
    return table;
}

}  // namespace cyclocode::kernels

#endif
