#include "cyclocode/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "cyclocode/errors.hpp"

namespace cyclocode {

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

namespace {

bool miller_rabin(u64 n, u64 a) {
    if (a % n == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto step = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = gcd_u64(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

// Prime factors with multiplicity, unsorted.
std::vector<u64> factor_multi(u64 n) {
    std::vector<u64> out;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % q == 0) {
            out.push_back(q);
            n /= q;
        }
    }
    factor_rec(n, out);
    return out;
}

u64 carmichael(u64 m) {
    if (m == 1) return 1;
    auto fm = factor_multi(m);
    std::sort(fm.begin(), fm.end());
    u64 lam = 1;
    for (size_t i = 0; i < fm.size();) {
        u64 q = fm[i];
        u64 pk = 1;
        while (i < fm.size() && fm[i] == q) {
            pk *= q;
            ++i;
        }
        u64 part = pk / q * (q - 1);
        if (q == 2 && pk >= 8) part = pk / 4;
        lam = lam / gcd_u64(lam, part) * part;
    }
    return lam;
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        if (!miller_rabin(n, a)) return false;
    }
    return true;
}

std::vector<u64> prime_factors(u64 n) {
    auto out = factor_multi(n);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

u64 mult_order(u64 a, u64 m) {
    if (gcd_u64(a % m, m) != 1)
        throw invalid_params("multiplicative order requires gcd(a, m) = 1");
    u64 ord = carmichael(m);
    for (u64 q : prime_factors(ord)) {
        while (ord % q == 0 && powmod(a, ord / q, m) == 1) ord /= q;
    }
    return ord;
}

bool is_primitive_root(u64 g, u64 prime) {
    if (g % prime == 0) return false;
    for (u64 q : prime_factors(prime - 1)) {
        if (powmod(g, (prime - 1) / q, prime) == 1) return false;
    }
    return true;
}

u64 common_primitive_root(u64 n1, u64 n2) {
    for (u64 g = 2;; ++g) {
        if (is_primitive_root(g, n1) && is_primitive_root(g, n2)) return g;
    }
}

u64 crt_pair(u64 r1, u64 m1, u64 r2, u64 m2) {
    // x = r1 + m1 * t with t = (r2 - r1) / m1 (mod m2)
    u64 inv = powmod(m1 % m2, carmichael(m2) - 1, m2);
    u64 diff = (r2 + m2 - r1 % m2) % m2;
    u64 t = mulmod(diff, inv, m2);
    return r1 + m1 * t;
}

u64 discrete_log(u64 base, u64 target, u64 prime) {
    u64 cur = 1 % prime;
    target %= prime;
    for (u64 s = 0; s < prime; ++s) {
        if (cur == target) return s;
        cur = mulmod(cur, base, prime);
    }
    throw verification_error("discrete log does not exist");
}

u128 checked_pow_u128(u64 base, unsigned exp) {
    u128 r = 1;
    const u128 limit = (u128{1} << 127);
    for (unsigned i = 0; i < exp; ++i) {
        if (r >= limit / base)
            throw cap_exceeded("field order exceeds the 128-bit working range");
        r *= base;
    }
    return r;
}

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

namespace {

u128 gcd_u128(u128 a, u128 b) {
    while (b) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 mulmod_u128(u128 a, u128 b, u128 m) {
    a %= m;
    u128 r = 0;
    while (b) {
        if (b & 1) {
            r += a;
            if (r >= m) r -= m;
        }
        a <<= 1;
        if (a >= m) a -= m;
        b >>= 1;
    }
    return r;
}

u128 powmod_u128(u128 a, u128 e, u128 m) {
    u128 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u128(r, a, m);
        a = mulmod_u128(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin_u128(u128 n, u128 a) {
    if (a % n == 0) return true;
    u128 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u128 x = powmod_u128(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u128(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

u128 pollard_rho_u128(u128 n) {
    if ((n & 1) == 0) return 2;
    for (u128 c = 1;; ++c) {
        auto step = [&](u128 v) {
            u128 s = mulmod_u128(v, v, n) + c;
            return s >= n ? s - n : s;
        };
        u128 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            u128 diff = x > y ? x - y : y - x;
            d = diff == 0 ? n : gcd_u128(diff, n);
        }
        if (d != n) return d;
    }
}

void factor_rec_u128(u128 n, std::vector<u128>& out) {
    if (n == 1) return;
    if (n < (u128{1} << 64)) {
        for (u64 q : prime_factors(static_cast<u64>(n))) out.push_back(q);
        return;
    }
    if (is_prime_u128(n)) {
        out.push_back(n);
        return;
    }
    u128 d = pollard_rho_u128(n);
    factor_rec_u128(d, out);
    factor_rec_u128(n / d, out);
}

std::vector<unsigned> divisors_of(unsigned m) {
    std::vector<unsigned> ds;
    for (unsigned d = 1; d <= m; ++d) {
        if (m % d == 0) ds.push_back(d);
    }
    return ds;
}

// Integer coefficients of the d-th cyclotomic polynomial, ascending degree.
std::vector<long long> cyclotomic_poly(unsigned d) {
    std::vector<long long> f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;
    for (unsigned e : divisors_of(d)) {
        if (e == d) continue;
        std::vector<long long> g = cyclotomic_poly(e);
        // exact division f /= g (g is monic)
        std::vector<long long> q(f.size() - g.size() + 1, 0);
        for (size_t i = q.size(); i-- > 0;) {
            long long c = f[i + g.size() - 1];
            q[i] = c;
            if (c == 0) continue;
            for (size_t j = 0; j < g.size(); ++j) f[i + j] -= c * g[j];
        }
        f = std::move(q);
    }
    return f;
}

}  // namespace

bool is_prime_u128(u128 n) {
    if (n < (u128{1} << 64)) return is_prime(static_cast<u64>(n));
    if ((n & 1) == 0) return false;
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull, 41ull, 43ull, 47ull, 53ull, 59ull,
                  61ull, 67ull, 71ull, 73ull, 79ull, 83ull, 89ull, 97ull}) {
        if (!miller_rabin_u128(n, a)) return false;
    }
    return true;
}

std::vector<u128> prime_factors_u128(u128 n) {
    std::vector<u128> out;
    for (u64 q = 2; q < 1000; q = (q == 2 ? 3 : q + 2)) {
        while (n % q == 0) {
            out.push_back(q);
            n /= q;
        }
    }
    factor_rec_u128(n, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

u128 cyclotomic_value(unsigned d, u64 p) {
    auto f = cyclotomic_poly(d);
    __int128 v = 0;
    for (size_t i = f.size(); i-- > 0;) {
        v = v * static_cast<__int128>(p) + f[i];
    }
    if (v <= 0) throw verification_error("cyclotomic value must be positive");
    return static_cast<u128>(v);
}

std::vector<u128> prime_factors_of_pm1(u64 p, unsigned m) {
    checked_pow_u128(p, m);
    std::vector<u128> out;
    for (unsigned d : divisors_of(m)) {
        for (u128 q : prime_factors_u128(cyclotomic_value(d, p)))
            out.push_back(q);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace cyclocode
