#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cyclocode/numtheory.hpp"

namespace cyclocode::gfp {

// Dense polynomial over GF(p), ascending coefficients in [0, p).
// The empty vector is the zero polynomial; values are kept trimmed.
using poly = std::vector<u32>;

void trim(poly& f);
int deg(const poly& f);  // -1 for the zero polynomial

u64 inv_mod(u64 a, u64 p);

poly add(const poly& f, const poly& g, u64 p);
poly sub(const poly& f, const poly& g, u64 p);
poly mul(const poly& f, const poly& g, u64 p);
std::pair<poly, poly> divmod(const poly& f, const poly& g, u64 p);
poly make_monic(poly f, u64 p);
poly gcd(poly f, poly g, u64 p);  // monic result

// Quotient f / g; throws verification_error when the division is not exact.
poly divexact(const poly& f, const poly& g, u64 p);

bool divides(const poly& d, const poly& f, u64 p);

poly xn_minus_1(u64 n, u64 p);
poly x_minus_1(u64 p);

u64 eval(const poly& f, u64 x, u64 p);

// "1 + 2x^3 + x^7" style rendering, ascending degree.
std::string to_string(const poly& f);

// Inverse of from ascending digit strings such as "1021".
poly from_digits(std::string_view digits);
std::string to_digits(const poly& f);

}  // namespace cyclocode::gfp
