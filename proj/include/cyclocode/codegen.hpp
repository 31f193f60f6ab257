#pragma once

#include <array>
#include <string>
#include <vector>

#include "cyclocode/cyclotomy.hpp"
#include "cyclocode/field.hpp"
#include "cyclocode/gfpoly.hpp"
#include "cyclocode/report.hpp"
#include "cyclocode/sequence.hpp"

namespace cyclocode {

// gcd path, base field only: g(x) = (x^n - 1) / gcd(x^n - 1, S(x)) where
// S is the characteristic polynomial of the ones of the sequence.
gfp::poly minimal_code_generator(const whiteman_classes& cl, u32 p);

// n - deg gcd(x^n - 1, S(x)) = deg(minimal_code_generator).
u64 linear_span(const whiteman_classes& cl, u32 p);

// Same gcd construction for one period of an arbitrary binary sequence,
// with S(x) the characteristic polynomial of its ones. The period must be
// coprime to p.
gfp::poly minimal_polynomial(const binary_sequence& s, u32 p);

// deg(minimal_polynomial) = n - deg gcd(x^n - 1, S(x)).
u64 linear_span(const binary_sequence& s, u32 p);

// GF(p^m) with m = ord_n(p), beta the deterministic primitive n-th root of
// unity, and the table of its powers.
struct tower_context {
    extension_field field;
    extension_field::elt beta;
    std::vector<extension_field::elt> pw;  // pw[i] = beta^i, 0 <= i < n

    extension_field::elt sum_over(const std::vector<u32>& idx) const;
    // sum over idx of beta^(i t)
    extension_field::elt sum_over_at(const std::vector<u32>& idx, u64 t) const;
};

tower_context build_tower(const whiteman_classes& cl, u32 p);

enum class elt_tag { zero, minus_one, other };
const char* tag_name(elt_tag t);

struct delta_values {
    u32 delta1;  // (n1 + 1)/2 mod p
    u32 delta2;  // (n2 - 1)/2 mod p
    u32 delta;   // (n1 + 1)(n2 - 1)/2 mod p
};
delta_values compute_deltas(const whiteman_classes& cl, u32 p);

struct eval_profile {
    extension_field::elt s_beta, t_beta, u_beta;
    elt_tag s_tag, t_tag, u_tag;
    delta_values deltas;
    int q_class;      // class index of p mod n
    int minus_one;    // class index of -1
};

eval_profile make_eval_profile(const whiteman_classes& cl,
                               const tower_context& tw);

// Power-sum identities: sum over P and over Q of beta^i both equal -1, the
// sum over all six classes equals 1, and for every t in P u Q each class sum
// at exponent t equals -(n1-1)/6 resp. -(n2-1)/6 mod p.
void check_power_sums(const whiteman_classes& cl, const tower_context& tw);

// The transform table for S, T, U at beta^t, checked for every t in Z_n
// against direct evaluation.
void check_stu_pointwise(const whiteman_classes& cl, const tower_context& tw,
                         const eval_profile& pr);

// Both sides of V(V+1) = base + sign * coef * D_V for V in {S, T, U}, with
// the class-difference sums D and signs selected by the parity of eta and
// (rho - varrho) mod 3.
void check_stu_products(const whiteman_classes& cl, const tower_context& tw,
                        const eval_profile& pr, const quad_partition& qp);

// Frobenius behaviour by the class of q: q in W0 fixes S, T, U inside the
// base field; odd classes satisfy V^(q^3) = -(V+1); classes 2 and 4 satisfy
// V^(q^3) = V; any q outside W0 keeps S, T, U away from {0, -1}.
void check_frobenius(const whiteman_classes& cl, const tower_context& tw,
                     const eval_profile& pr);

struct remark_report {
    bool diff_c2_c0_zero;
    bool diff_c0_c1_zero;
    bool diff_c1_c2_zero;
};
// Paired-class sums C_r = sum over W_r u W_(r+3); verifies C0+C1+C2 = 1 and
// reports which differences vanish.
remark_report remark_sums(const whiteman_classes& cl, const tower_context& tw);

// The degree-e factors omega_i(x) = prod over j in W_i of (x - beta^j),
// projected to the base field. Requires p in W0; verifies the projection and
// the product identity with the trivial factors.
std::array<gfp::poly, 6> omega_factors(const whiteman_classes& cl,
                                       const tower_context& tw);

struct classification {
    gfp::poly generator;
    std::string case_tag;
    std::vector<int> removed_omegas;
    std::vector<std::string> factors_removed;
};

// Generator polynomial from the evaluation profile: the five trivial-factor
// cases keyed by the deltas when q lies outside W0, otherwise the removal
// map keyed by the (S, T, U) tags followed by the delta correction. Pass the
// omega factors when q is in W0.
classification classify_generator(const whiteman_classes& cl,
                                  const eval_profile& pr,
                                  const std::array<gfp::poly, 6>* omegas,
                                  u32 p);

struct corollary_report {
    unsigned n_mod_12;
    bool quarter_vanishes;  // (n -+ 1)/4 = 0 mod p, sign per n mod 12
    u32 coef_residue;       // 2y/3 | (x+y)/3 | (x-y)/3 mod p, per column
    bool applies;           // both vanish: all of S, T, U land in {0, -1}
};
corollary_report corollary_conditions(const whiteman_classes& cl,
                                      const quad_partition& qp, u32 p);

struct build_options {
    bool skip_verify = false;
    u64 m_cap = extension_field::max_degree;
};

// Full construction: gcd-path generator always; when ord_n(p) fits the cap
// and verification is not skipped, the tower is built, every evaluation
// check above runs, and the classification path must reproduce the gcd
// generator exactly.
code_report build_code(u64 n1, u64 n2, u32 p, const build_options& opt = {});

}  // namespace cyclocode
