#include <doctest.h>

#include "cyclocode/rng.hpp"

using namespace cyclocode;

TEST_CASE("splitmix64 known-answer sequence from seed 0") {
    splitmix64 sm(0);
    CHECK(sm.next() == 0xE220A8397B1DCDAFull);
    CHECK(sm.next() == 0x6E789E6AA1B965F4ull);
    CHECK(sm.next() == 0x06C45D188009454Full);
    CHECK(sm.next() == 0xF88BB8A8724C81ECull);
}

TEST_CASE("splitmix64 known-answer sequence from seed 42") {
    splitmix64 sm(42);
    CHECK(sm.next() == 0xBDD732262FEB6E95ull);
    CHECK(sm.next() == 0x28EFE333B266F103ull);
}

TEST_CASE("xoshiro256** derives its state from splitmix64") {
    xoshiro256ss a(0);
    CHECK(a.next() == 0x99EC5F36CB75F2B4ull);
    CHECK(a.next() == 0xBF6E1F784956452Aull);
    CHECK(a.next() == 0x1A5F849D4933E6E0ull);
    CHECK(a.next() == 0x6AA594F1262D2D2Cull);

    xoshiro256ss b(42);
    CHECK(b.next() == 0x15780B2E0C2EC716ull);
    CHECK(b.next() == 0x6104D9866D113A7Eull);
}

TEST_CASE("bounded draws are unbiased rejections inside the bound") {
    xoshiro256ss rng(7);
    for (int i = 0; i < 10000; ++i) {
        CHECK(rng.below(1) == 0);
        CHECK(rng.below(7) < 7);
        CHECK(rng.below(256) < 256);
    }

    bool saw[5] = {};
    xoshiro256ss rng2(8);
    for (int i = 0; i < 1000; ++i) saw[rng2.below(5)] = true;
    for (bool s : saw) CHECK(s);
}

TEST_CASE("iteration seeds decorrelate the per-iteration streams") {
    CHECK(iteration_seed(1, 0) == 0x910A2DEC89025CC1ull);
    CHECK(iteration_seed(1, 1) == 0xE99FF867DBF682C9ull);
    CHECK(iteration_seed(1, 2) == 0xF893A2EEFB32555Eull);
    CHECK(iteration_seed(1, 1) != iteration_seed(2, 1));
    CHECK(iteration_seed(1, 1) == iteration_seed(1, 1));
}
