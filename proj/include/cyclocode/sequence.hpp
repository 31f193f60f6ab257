#pragma once

#include <vector>

#include "cyclocode/cyclotomy.hpp"
#include "cyclocode/gfpoly.hpp"

namespace cyclocode {

enum class sequence_kind { wgcs1, wgcs2 };

struct binary_sequence {
    std::vector<bool> bits;  // one period, index i holds s_i
    sequence_kind kind;

    u64 weight() const;
};

// Second-family sequence: s_i = 1 exactly when i mod n lies in P u W3 u W4 u W5.
binary_sequence wgcs2(const whiteman_classes& cl);

// First-family sequence: ones on P u W1 u W3 u W5.
binary_sequence wgcs1(const whiteman_classes& cl);

struct stu_polys {
    gfp::poly s;  // support P u W3 u W4 u W5
    gfp::poly t;  // support P u W1 u W2 u W3
    gfp::poly u;  // support P u W2 u W3 u W4
};

// Characteristic polynomials of the three supports with coefficients in GF(p).
stu_polys stu_polynomials(const whiteman_classes& cl, u32 p);

// Characteristic polynomial of an arbitrary sorted support set.
gfp::poly support_poly(const std::vector<u32>& support, u64 n, u32 p);

}  // namespace cyclocode
