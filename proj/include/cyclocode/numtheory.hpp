#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cyclocode {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);
u64 gcd_u64(u64 a, u64 b);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

// Distinct prime factors, ascending.
std::vector<u64> prime_factors(u64 n);

// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
u64 mult_order(u64 a, u64 m);

bool is_primitive_root(u64 g, u64 prime);

// Smallest g that is a primitive root modulo both primes.
u64 common_primitive_root(u64 n1, u64 n2);

// x with x = r1 (mod m1), x = r2 (mod m2); moduli coprime.
u64 crt_pair(u64 r1, u64 m1, u64 r2, u64 m2);

// Least s >= 0 with base^s = target (mod prime); base must generate target.
u64 discrete_log(u64 base, u64 target, u64 prime);

// 128-bit helpers for extension-field orders up to 2^127.
u128 checked_pow_u128(u64 base, unsigned exp);
std::string u128_to_string(u128 v);
bool is_prime_u128(u128 n);
std::vector<u128> prime_factors_u128(u128 n);

// Distinct prime factors of p^m - 1, computed through the cyclotomic
// factorization x^m - 1 = prod_{d | m} Phi_d(x) so that each piece stays
// well below the 128-bit limit before it is split.
std::vector<u128> prime_factors_of_pm1(u64 p, unsigned m);

// Value of the d-th cyclotomic polynomial at x = p.
u128 cyclotomic_value(unsigned d, u64 p);

}  // namespace cyclocode
