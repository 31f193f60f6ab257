#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <vector>

#include "cyclocode/rng.hpp"
#include "cyclocode/simd.hpp"

using namespace cyclocode;

namespace {

double time_ms(const std::function<void()>& fn, int rounds) {
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < rounds; ++i) fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() /
           rounds;
}

}  // namespace

int main() {
    constexpr size_t words = 4096;
    constexpr size_t bytes = words * 8;
    constexpr int rounds = 2000;

    xoshiro256ss rng(42);
    std::vector<std::uint64_t> wa(words), wb(words);
    std::vector<std::uint8_t> ba(bytes), bb(bytes);
    for (auto& w : wa) w = rng.next();
    for (auto& w : wb) w = rng.next();
    for (auto& b : ba) b = static_cast<std::uint8_t>(rng.below(5));
    for (auto& b : bb) b = static_cast<std::uint8_t>(rng.below(5));

    const kernels::ops& scalar = kernels::scalar_ops();
    const kernels::ops& active = kernels::active_ops();
    std::printf("active kernel set: %s\n", active.name);

    std::uint64_t sum = 0;
    volatile std::uint64_t sink = 0;
    for (const kernels::ops* k : {&scalar, &active}) {
        const double t_xor = time_ms(
            [&] { k->xor_rows(wa.data(), wb.data(), words); }, rounds);
        const double t_pop = time_ms(
            [&] { sum += k->popcount_words(wa.data(), words); }, rounds);
        const double t_add = time_ms(
            [&] { k->addmul_bytes(ba.data(), bb.data(), bytes, 3, 5); },
            rounds);
        const double t_cnt = time_ms(
            [&] { sum += k->count_nonzero(ba.data(), bytes); }, rounds);
        sink = sum;
        std::printf(
            "%-8s xor_rows %8.4f ms  popcount %8.4f ms  addmul %8.4f ms  "
            "count_nonzero %8.4f ms\n",
            k->name, t_xor, t_pop, t_add, t_cnt);
    }
    (void)sink;
    return 0;
}
