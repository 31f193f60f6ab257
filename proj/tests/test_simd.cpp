#include <doctest.h>

#include <cstdint>
#include <string_view>
#include <vector>

#include "cyclocode/rng.hpp"
#include "cyclocode/simd.hpp"

using namespace cyclocode;

namespace {

std::vector<const kernels::ops*> kernel_sets() {
    std::vector<const kernels::ops*> sets{&kernels::scalar_ops(),
                                          &kernels::active_ops()};
#if defined(__x86_64__) || defined(_M_X64)
    if (kernels::avx2_available()) sets.push_back(&kernels::avx2_ops());
#endif
    return sets;
}

}  // namespace

TEST_CASE("xor and popcount agree across kernel sets") {
    xoshiro256ss rng(5150);
    for (size_t words : {1u, 2u, 3u, 4u, 7u, 31u, 64u, 129u}) {
        std::vector<std::uint64_t> base(words), src(words);
        for (auto& w : base) w = rng.next();
        for (auto& w : src) w = rng.next();

        std::uint64_t want_pop = 0;
        std::vector<std::uint64_t> want = base;
        for (size_t i = 0; i < words; ++i) {
            want[i] ^= src[i];
            want_pop += static_cast<std::uint64_t>(
                __builtin_popcountll(want[i]));
        }

        for (const kernels::ops* k : kernel_sets()) {
            CAPTURE(k->name);
            CAPTURE(words);
            std::vector<std::uint64_t> dst = base;
            k->xor_rows(dst.data(), src.data(), words);
            CHECK(dst == want);
            CHECK(k->popcount_words(dst.data(), words) == want_pop);
        }
    }
}

TEST_CASE("byte add-multiply agrees across kernel sets") {
    xoshiro256ss rng(6021);
    for (std::uint8_t p : {3, 5, 7, 127}) {
        for (size_t len : {1u, 5u, 16u, 33u, 64u, 100u, 257u}) {
            std::vector<std::uint8_t> base(len), src(len);
            for (auto& b : base) b = static_cast<std::uint8_t>(rng.below(p));
            for (auto& b : src) b = static_cast<std::uint8_t>(rng.below(p));

            for (std::uint8_t lambda :
                 {std::uint8_t{1}, std::uint8_t{2},
                  static_cast<std::uint8_t>(p - 1)}) {
                std::vector<std::uint8_t> want = base;
                for (size_t i = 0; i < len; ++i)
                    want[i] = static_cast<std::uint8_t>(
                        (want[i] + lambda * src[i]) % p);

                size_t want_nonzero = 0;
                for (std::uint8_t b : want) want_nonzero += b != 0;

                for (const kernels::ops* k : kernel_sets()) {
                    CAPTURE(k->name);
                    CAPTURE(static_cast<int>(p));
                    CAPTURE(static_cast<int>(lambda));
                    CAPTURE(len);
                    std::vector<std::uint8_t> dst = base;
                    k->addmul_bytes(dst.data(), src.data(), len, lambda, p);
                    CHECK(dst == want);
                    CHECK(k->count_nonzero(dst.data(), len) == want_nonzero);
                }
            }
        }
    }
}

TEST_CASE("kernel sets carry distinct names") {
    CHECK(std::string_view(kernels::scalar_ops().name) == "scalar");
    CHECK(!std::string_view(kernels::active_ops().name).empty());
}
