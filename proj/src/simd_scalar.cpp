#include "cyclocode/simd.hpp"

namespace cyclocode::kernels {

namespace {

void xor_rows_scalar(std::uint64_t* dst, const std::uint64_t* src,
                     std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

std::uint64_t popcount_words_scalar(const std::uint64_t* w, std::size_t words) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < words; ++i)
        total += static_cast<std::uint64_t>(__builtin_popcountll(w[i]));
    return total;
}

void addmul_bytes_scalar(std::uint8_t* dst, const std::uint8_t* src,
                         std::size_t len, std::uint8_t lambda, std::uint8_t p) {
    for (std::uint8_t round = 0; round < lambda; ++round) {
        for (std::size_t i = 0; i < len; ++i) {
            std::uint8_t t = static_cast<std::uint8_t>(dst[i] + src[i]);
            dst[i] = t >= p ? static_cast<std::uint8_t>(t - p) : t;
        }
    }
}

std::size_t count_nonzero_scalar(const std::uint8_t* v, std::size_t len) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < len; ++i) total += v[i] != 0;
    return total;
}

}  // namespace

const ops& scalar_ops() {
    static const ops table = {xor_rows_scalar, popcount_words_scalar,
                              addmul_bytes_scalar, count_nonzero_scalar,
                              "scalar"};
    return table;
}

}  // namespace cyclocode::kernels
