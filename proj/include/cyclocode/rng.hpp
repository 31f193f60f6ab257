#pragma once

#include <array>
#include <cstdint>

namespace cyclocode {

// splitmix64: state += 0x9E3779B97F4A7C15; z = state;
// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
// z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31).
struct splitmix64 {
    std::uint64_t state;

    explicit constexpr splitmix64(std::uint64_t seed) : state(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

// xoshiro256**: result = rotl(s[1] * 5, 7) * 9;
// t = s[1] << 17; s[2] ^= s[0]; s[3] ^= s[1]; s[1] ^= s[2]; s[0] ^= s[3];
// s[2] ^= t; s[3] = rotl(s[3], 45).
// The four state words are the first four outputs of splitmix64(seed).
struct xoshiro256ss {
    std::array<std::uint64_t, 4> s;

    explicit constexpr xoshiro256ss(std::uint64_t seed) : s{} {
        splitmix64 mix(seed);
        for (auto& w : s) w = mix.next();
    }

    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    constexpr std::uint64_t next() {
        const std::uint64_t result = rotl(s[1] * 5, 7) * 9;
        const std::uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return result;
    }

    // Uniform value in [0, bound) by rejection below the largest multiple
    // of bound, so every residue is equally likely.
    constexpr std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % bound;
    }
};

// Seed for search iteration i, derived so that iterations are independent
// streams and a partitioned run merges to the same answer as a serial one.
constexpr std::uint64_t iteration_seed(std::uint64_t seed, std::uint64_t i) {
    return splitmix64(seed ^ (i * 0x9E3779B97F4A7C15ull)).next();
}

}  // namespace cyclocode
