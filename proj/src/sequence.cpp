#include "cyclocode/sequence.hpp"

#include <algorithm>

namespace cyclocode {

u64 binary_sequence::weight() const {
    return static_cast<u64>(std::count(bits.begin(), bits.end(), true));
}

namespace {

binary_sequence from_support(const whiteman_classes& cl,
                             std::initializer_list<const std::vector<u32>*> parts,
                             sequence_kind kind) {
    binary_sequence seq;
    seq.kind = kind;
    seq.bits.assign(cl.n, false);
    for (const auto* part : parts)
        for (u32 i : *part) seq.bits[i] = true;
    return seq;
}

}  // namespace

binary_sequence wgcs2(const whiteman_classes& cl) {
    return from_support(cl, {&cl.P, &cl.W[3], &cl.W[4], &cl.W[5]},
                        sequence_kind::wgcs2);
}

binary_sequence wgcs1(const whiteman_classes& cl) {
    return from_support(cl, {&cl.P, &cl.W[1], &cl.W[3], &cl.W[5]},
                        sequence_kind::wgcs1);
}

gfp::poly support_poly(const std::vector<u32>& support, u64 n, u32 p) {
    gfp::poly f(n, 0);
    for (u32 i : support) f[i] = 1 % p;
    gfp::trim(f);
    return f;
}

stu_polys stu_polynomials(const whiteman_classes& cl, u32 p) {
    stu_polys out;
    out.s = support_poly(cl.c1, cl.n, p);
    out.t = support_poly(cl.t_support, cl.n, p);
    out.u = support_poly(cl.u_support, cl.n, p);
    return out;
}

}  // namespace cyclocode
