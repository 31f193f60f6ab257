#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "cyclocode/simd.hpp"

namespace cyclocode::kernels {

namespace {

void xor_rows_avx2(std::uint64_t* dst, const std::uint64_t* src,
                   std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
        __m256i b =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            _mm256_xor_si256(a, b));
    }
    for (; i < words; ++i) dst[i] ^= src[i];
}

// Nibble-table popcount: per byte, look up the bit count of each half.
std::uint64_t popcount_words_avx2(const std::uint64_t* w, std::size_t words) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2,
                                         3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2,
                                         2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
        __m256i lo = _mm256_and_si256(v, low_mask);
        __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
        __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                                      _mm256_shuffle_epi8(lut, hi));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < words; ++i)
        total += static_cast<std::uint64_t>(__builtin_popcountll(w[i]));
    return total;
}

void addmul_bytes_avx2(std::uint8_t* dst, const std::uint8_t* src,
                       std::size_t len, std::uint8_t lambda, std::uint8_t p) {
    const __m256i vp = _mm256_set1_epi8(static_cast<char>(p));
    for (std::uint8_t round = 0; round < lambda; ++round) {
        std::size_t i = 0;
        for (; i + 32 <= len; i += 32) {
            __m256i d =
                _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
            __m256i s =
                _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
            __m256i t = _mm256_add_epi8(d, s);
            // t >= p (unsigned) exactly when max(t, p) == t
            __m256i ge = _mm256_cmpeq_epi8(_mm256_max_epu8(t, vp), t);
            t = _mm256_sub_epi8(t, _mm256_and_si256(ge, vp));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), t);
        }
        for (; i < len; ++i) {
            std::uint8_t t = static_cast<std::uint8_t>(dst[i] + src[i]);
            dst[i] = t >= p ? static_cast<std::uint8_t>(t - p) : t;
        }
    }
}

std::size_t count_nonzero_avx2(const std::uint8_t* v, std::size_t len) {
    const __m256i zero = _mm256_setzero_si256();
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 32 <= len; i += 32) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
        unsigned mask = static_cast<unsigned>(
            _mm256_movemask_epi8(_mm256_cmpeq_epi8(x, zero)));
        total += 32u - static_cast<unsigned>(__builtin_popcount(mask));
    }
    for (; i < len; ++i) total += v[i] != 0;
    return total;
}

}  // namespace

bool avx2_available() { return __builtin_cpu_supports("avx2"); }

const ops& avx2_ops() {
    static const ops table = {xor_rows_avx2, popcount_words_avx2,
                              addmul_bytes_avx2, count_nonzero_avx2, "avx2"};
    return table;
}

}  // namespace cyclocode::kernels

#endif
