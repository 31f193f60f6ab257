#pragma once

#include <cstddef>
#include <cstdint>

namespace cyclocode::kernels {

// Row-operation kernels for the distance hot loops. Binary codes use packed
// 64-bit words; odd characteristics use one byte per symbol with values in
// [0, p). addmul requires p <= 127 so the intermediate sum a + b stays
// below 255.
struct ops {
    void (*xor_rows)(std::uint64_t* dst, const std::uint64_t* src,
                     std::size_t words);
    std::uint64_t (*popcount_words)(const std::uint64_t* w, std::size_t words);
    void (*addmul_bytes)(std::uint8_t* dst, const std::uint8_t* src,
                         std::size_t len, std::uint8_t lambda, std::uint8_t p);
    std::size_t (*count_nonzero)(const std::uint8_t* v, std::size_t len);
    const char* name;
};

const ops& scalar_ops();

// Best kernel set for this machine; honours CYCLOCODE_KERNELS=scalar.
const ops& active_ops();

#if defined(__x86_64__) || defined(_M_X64)
bool avx2_available();
const ops& avx2_ops();
#endif

#if defined(__aarch64__)
const ops& neon_ops();
#endif

}  // namespace cyclocode::kernels
