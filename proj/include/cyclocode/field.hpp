#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cyclocode/gfpoly.hpp"
#include "cyclocode/numtheory.hpp"

namespace cyclocode {

// GF(p^m) = GF(p)[x] / (f) for the deterministic modulus described below.
//
// Elements are residue-class polynomials stored as ascending digit arrays of
// length m (digit i = coefficient of x^i). Determinism conventions:
//   * a polynomial of degree < m maps to the integer
//       N = c_0 * p^(m-1) + c_1 * p^(m-2) + ... + c_(m-1),
//     i.e. the constant coefficient is the most significant key;
//   * the modulus is the monic irreducible of degree m whose lower
//     coefficients have the smallest such N;
//   * the reference primitive element gamma is the element with the
//     smallest N that generates the multiplicative group.
// These choices pin every derived object (n-th roots of unity, character
// sums, factor labels) to a single reproducible value.
class extension_field {
  public:
    static constexpr unsigned max_degree = 64;

    struct elt {
        std::array<std::uint8_t, max_degree> d{};
        friend bool operator==(const elt&, const elt&) = default;
    };

    extension_field(u64 p, unsigned m);

    u64 p() const { return p_; }
    unsigned m() const { return m_; }
    u128 order() const { return order_; }  // p^m - 1
    const gfp::poly& modulus() const { return modulus_; }

    elt zero() const { return elt{}; }
    elt one() const { return scalar(1); }
    elt minus_one() const { return scalar(p_ - 1); }
    elt scalar(u64 c) const;
    bool is_scalar(const elt& a) const;
    u64 scalar_value(const elt& a) const;

    elt add(const elt& a, const elt& b) const;
    elt sub(const elt& a, const elt& b) const;
    elt scal(u64 c, const elt& a) const;
    elt mul(const elt& a, const elt& b) const;
    elt pow(elt a, u128 e) const;

    elt from_poly(const gfp::poly& f) const;  // deg(f) < m required
    gfp::poly to_poly(const elt& a) const;

    // Smallest-N generator of the multiplicative group (cached).
    const elt& primitive_element() const;

    // gamma^((p^m - 1) / n); requires n | p^m - 1.
    elt nth_root_of_unity(u64 n) const;

    // Horner evaluation of a base-field polynomial at an extension point.
    elt eval_poly(const gfp::poly& f, const elt& x) const;

  private:
    elt from_index(u64 n_index) const;  // inverse of the N encoding, N < p^m

    u64 p_;
    unsigned m_;
    u128 order_;
    gfp::poly modulus_;
    // reduction_[i] = digits of x^(m+i) mod modulus
    std::vector<std::array<std::uint8_t, max_degree>> reduction_;
    mutable elt primitive_;
    mutable bool primitive_ready_ = false;
};

}  // namespace cyclocode
