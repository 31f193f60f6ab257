#include "cyclocode/gfpoly.hpp"

#include <sstream>

#include "cyclocode/errors.hpp"

namespace cyclocode::gfp {

void trim(poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const poly& f) { return static_cast<int>(f.size()) - 1; }

u64 inv_mod(u64 a, u64 p) {
    return powmod(a % p, p - 2, p);
}

poly add(const poly& f, const poly& g, u64 p) {
    poly out(std::max(f.size(), g.size()), 0);
    for (size_t i = 0; i < f.size(); ++i) out[i] = f[i];
    for (size_t i = 0; i < g.size(); ++i) out[i] = (out[i] + g[i]) % p;
    trim(out);
    return out;
}

poly sub(const poly& f, const poly& g, u64 p) {
    poly out(std::max(f.size(), g.size()), 0);
    for (size_t i = 0; i < f.size(); ++i) out[i] = f[i];
    for (size_t i = 0; i < g.size(); ++i)
        out[i] = static_cast<u32>((out[i] + p - g[i]) % p);
    trim(out);
    return out;
}

poly mul(const poly& f, const poly& g, u64 p) {
    if (f.empty() || g.empty()) return {};
    std::vector<u64> acc(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (size_t j = 0; j < g.size(); ++j) {
            if (g[j] == 0) continue;
            acc[i + j] = (acc[i + j] + static_cast<u64>(f[i]) * g[j]) % p;
        }
    }
    poly out(acc.begin(), acc.end());
    trim(out);
    return out;
}

std::pair<poly, poly> divmod(const poly& f, const poly& g, u64 p) {
    if (g.empty()) throw verification_error("polynomial division by zero");
    poly r = f;
    size_t dg = g.size() - 1;
    if (r.size() <= dg) return {poly{}, r};
    poly q(r.size() - dg, 0);
    u64 inv = inv_mod(g.back(), p);
    for (size_t i = r.size() - 1; i >= dg; --i) {
        u64 c = r[i] * inv % p;
        if (c) {
            size_t s = i - dg;
            q[s] = static_cast<u32>(c);
            for (size_t j = 0; j <= dg; ++j)
                r[s + j] = static_cast<u32>((r[s + j] + p - c * g[j] % p) % p);
        }
        if (i == 0) break;
    }
    trim(q);
    trim(r);
    return {std::move(q), std::move(r)};
}

poly make_monic(poly f, u64 p) {
    if (f.empty() || f.back() == 1) return f;
    u64 inv = inv_mod(f.back(), p);
    for (auto& c : f) c = static_cast<u32>(c * inv % p);
    return f;
}

poly gcd(poly f, poly g, u64 p) {
    while (!g.empty()) {
        poly r = divmod(f, g, p).second;
        f = std::move(g);
        g = std::move(r);
    }
    return make_monic(std::move(f), p);
}

poly divexact(const poly& f, const poly& g, u64 p) {
    auto [q, r] = divmod(f, g, p);
    if (!r.empty())
        throw verification_error("expected exact polynomial division, got remainder of degree " +
                                 std::to_string(deg(r)));
    return q;
}

bool divides(const poly& d, const poly& f, u64 p) {
    return divmod(f, d, p).second.empty();
}

poly xn_minus_1(u64 n, u64 p) {
    poly f(n + 1, 0);
    f[0] = static_cast<u32>(p - 1);
    f[n] = 1;
    return f;
}

poly x_minus_1(u64 p) { return poly{static_cast<u32>(p - 1), 1}; }

u64 eval(const poly& f, u64 x, u64 p) {
    u64 v = 0;
    for (size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
    return v;
}

std::string to_string(const poly& f) {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << f[i];
            continue;
        }
        if (f[i] != 1) os << f[i];
        os << "x";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

poly from_digits(std::string_view digits) {
    poly f;
    f.reserve(digits.size());
    for (char ch : digits) f.push_back(static_cast<u32>(ch - '0'));
    trim(f);
    return f;
}

std::string to_digits(const poly& f) {
    if (f.empty()) return "0";
    std::string s;
    s.reserve(f.size());
    for (u32 c : f) s.push_back(static_cast<char>('0' + c));
    return s;
}

}  // namespace cyclocode::gfp
