#include "cyclocode/field.hpp"

#include <utility>

#include "cyclocode/errors.hpp"

namespace cyclocode {

namespace {

gfp::poly powmod_poly(gfp::poly base, u64 e, const gfp::poly& mod, u64 p) {
    gfp::poly r{1};
    while (e) {
        if (e & 1) r = gfp::divmod(gfp::mul(r, base, p), mod, p).second;
        base = gfp::divmod(gfp::mul(base, base, p), mod, p).second;
        e >>= 1;
    }
    return r;
}

// f monic of degree m with coefficients in [0, p).
bool is_irreducible(const gfp::poly& f, u64 p, unsigned m) {
    if (m >= 2 && f[0] == 0) return false;
    gfp::poly x{0, 1};
    gfp::poly x_red = gfp::divmod(x, f, p).second;
    gfp::poly r = x_red;
    for (unsigned k = 1; k <= m; ++k) {
        r = powmod_poly(r, p, f, p);
        if (k <= m / 2) {
            if (gfp::deg(gfp::gcd(gfp::sub(r, x_red, p), f, p)) != 0)
                return false;
        }
    }
    return r == x_red;
}

}  // namespace

extension_field::extension_field(u64 p, unsigned m) : p_(p), m_(m) {
    if (!is_prime(p)) throw invalid_params("field characteristic must be prime");
    if (p > 255)
        throw cap_exceeded("characteristic " + std::to_string(p) +
                           " exceeds the supported tower representation");
    if (m < 1 || m > max_degree)
        throw cap_exceeded("extension degree " + std::to_string(m) +
                           " exceeds the supported maximum of " +
                           std::to_string(max_degree));
    order_ = checked_pow_u128(p, m) - 1;

    // Scan monic degree-m candidates in ascending N order. For m >= 2 a zero
    // constant term forces reducibility, so the scan starts at N = p^(m-1).
    std::vector<u32> low(m, 0);
    if (m >= 2) low[0] = 1;
    for (;;) {
        gfp::poly f(low.begin(), low.end());
        f.push_back(1);
        if (is_irreducible(f, p, m)) {
            modulus_ = std::move(f);
            break;
        }
        // The N encoding makes low[m-1] the least significant digit.
        unsigned i = m;
        while (i-- > 0) {
            if (++low[i] < p) break;
            low[i] = 0;
        }
        if (i == static_cast<unsigned>(-1))
            throw verification_error("no irreducible modulus found");
    }

    if (m >= 2) {
        reduction_.resize(m - 1);
        auto& first = reduction_[0];
        for (unsigned i = 0; i < m; ++i)
            first[i] = static_cast<std::uint8_t>((p - modulus_[i]) % p);
        for (unsigned j = 1; j + 1 < m; ++j) {
            const auto& prev = reduction_[j - 1];
            auto& cur = reduction_[j];
            u64 hi = prev[m - 1];
            for (unsigned i = m; i-- > 1;)
                cur[i] = static_cast<std::uint8_t>((prev[i - 1] + hi * first[i]) % p);
            cur[0] = static_cast<std::uint8_t>(hi * first[0] % p);
        }
    }
}

extension_field::elt extension_field::scalar(u64 c) const {
    elt a;
    a.d[0] = static_cast<std::uint8_t>(c % p_);
    return a;
}

bool extension_field::is_scalar(const elt& a) const {
    for (unsigned i = 1; i < m_; ++i)
        if (a.d[i]) return false;
    return true;
}

u64 extension_field::scalar_value(const elt& a) const { return a.d[0]; }

extension_field::elt extension_field::add(const elt& a, const elt& b) const {
    elt out;
    for (unsigned i = 0; i < m_; ++i)
        out.d[i] = static_cast<std::uint8_t>((a.d[i] + b.d[i]) % p_);
    return out;
}

extension_field::elt extension_field::sub(const elt& a, const elt& b) const {
    elt out;
    for (unsigned i = 0; i < m_; ++i)
        out.d[i] = static_cast<std::uint8_t>((a.d[i] + p_ - b.d[i]) % p_);
    return out;
}

extension_field::elt extension_field::scal(u64 c, const elt& a) const {
    c %= p_;
    elt out;
    for (unsigned i = 0; i < m_; ++i)
        out.d[i] = static_cast<std::uint8_t>(c * a.d[i] % p_);
    return out;
}

extension_field::elt extension_field::mul(const elt& a, const elt& b) const {
    // digit products stay below 2^16 and m <= 64, so u32 accumulators
    // cannot overflow even with reduction folded in
    u32 acc[2 * max_degree - 1] = {};
    for (unsigned i = 0; i < m_; ++i) {
        if (!a.d[i]) continue;
        u32 ai = a.d[i];
        for (unsigned j = 0; j < m_; ++j) acc[i + j] += ai * b.d[j];
    }
    for (unsigned i = 2 * m_ - 2; i >= m_ && m_ >= 2; --i) {
        u32 hi = acc[i] % p_;
        if (hi) {
            const auto& row = reduction_[i - m_];
            for (unsigned k = 0; k < m_; ++k) acc[k] += hi * row[k];
        }
        if (i == m_) break;
    }
    elt out;
    for (unsigned i = 0; i < m_; ++i)
        out.d[i] = static_cast<std::uint8_t>(acc[i] % p_);
    return out;
}

extension_field::elt extension_field::pow(elt a, u128 e) const {
    elt r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

extension_field::elt extension_field::from_poly(const gfp::poly& f) const {
    if (f.size() > m_)
        throw verification_error("element degree exceeds the extension degree");
    elt a;
    for (size_t i = 0; i < f.size(); ++i)
        a.d[i] = static_cast<std::uint8_t>(f[i] % p_);
    return a;
}

gfp::poly extension_field::to_poly(const elt& a) const {
    gfp::poly f(a.d.begin(), a.d.begin() + m_);
    gfp::trim(f);
    return f;
}

extension_field::elt extension_field::from_index(u64 n_index) const {
    // digit 0 (the constant term) is the most significant key, so the
    // least significant base-p digit of N lands at position m-1
    elt a;
    for (unsigned i = m_; i-- > 0;) {
        a.d[i] = static_cast<std::uint8_t>(n_index % p_);
        n_index /= p_;
    }
    return a;
}

const extension_field::elt& extension_field::primitive_element() const {
    if (primitive_ready_) return primitive_;
    auto primes = prime_factors_of_pm1(p_, m_);
    for (u64 n_index = 1;; ++n_index) {
        elt cand = from_index(n_index);
        bool ok = true;
        for (u128 q : primes) {
            if (pow(cand, order_ / q) == one()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            primitive_ = cand;
            primitive_ready_ = true;
            return primitive_;
        }
    }
}

extension_field::elt extension_field::nth_root_of_unity(u64 n) const {
    if (order_ % n != 0)
        throw verification_error("n does not divide the multiplicative order");
    return pow(primitive_element(), order_ / n);
}

extension_field::elt extension_field::eval_poly(const gfp::poly& f, const elt& x) const {
    elt v = zero();
    for (size_t i = f.size(); i-- > 0;) {
        v = mul(v, x);
        v.d[0] = static_cast<std::uint8_t>((v.d[0] + f[i]) % p_);
    }
    return v;
}

}  // namespace cyclocode
