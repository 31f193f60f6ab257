#include "cyclocode/codegen.hpp"

#include <algorithm>
#include <string>

#include "cyclocode/errors.hpp"

namespace cyclocode {

namespace {

using elt = extension_field::elt;

u32 neg_mod(u64 v, u64 p) { return static_cast<u32>((p - v % p) % p); }

elt_tag tag_of(const extension_field& f, const elt& v) {
    if (v == f.zero()) return elt_tag::zero;
    if (v == f.minus_one()) return elt_tag::minus_one;
    return elt_tag::other;
}

std::string coeffs_str(const extension_field& f, const elt& v) {
    return gfp::to_digits(f.to_poly(v));
}

std::string trivial_name(const whiteman_classes& cl, char which) {
    if (which == '1') return "x-1";
    if (which == 'a') return "x^" + std::to_string(cl.n1) + "-1";
    return "x^" + std::to_string(cl.n2) + "-1";
}

}  // namespace

const char* tag_name(elt_tag t) {
    switch (t) {
        case elt_tag::zero: return "0";
        case elt_tag::minus_one: return "-1";
        default: return "other";
    }
}

gfp::poly minimal_code_generator(const whiteman_classes& cl, u32 p) {
    gfp::poly s = support_poly(cl.c1, cl.n, p);
    gfp::poly xn1 = gfp::xn_minus_1(cl.n, p);
    gfp::poly g = gfp::gcd(xn1, s, p);
    return gfp::divexact(xn1, g, p);
}

u64 linear_span(const whiteman_classes& cl, u32 p) {
    gfp::poly s = support_poly(cl.c1, cl.n, p);
    gfp::poly g = gfp::gcd(gfp::xn_minus_1(cl.n, p), s, p);
    return cl.n - static_cast<u64>(gfp::deg(g));
}

gfp::poly minimal_polynomial(const binary_sequence& s, u32 p) {
    const u64 n = s.bits.size();
    if (n == 0) throw invalid_params("sequence has no bits");
    if (gcd_u64(n, p) != 1)
        throw invalid_params("sequence period " + std::to_string(n) +
                             " must be coprime to p = " + std::to_string(p));
    std::vector<u32> support;
    for (u64 i = 0; i < n; ++i)
        if (s.bits[i]) support.push_back(static_cast<u32>(i));
    gfp::poly sx = support_poly(support, n, p);
    gfp::poly xn1 = gfp::xn_minus_1(n, p);
    return gfp::divexact(xn1, gfp::gcd(xn1, sx, p), p);
}

u64 linear_span(const binary_sequence& s, u32 p) {
    return static_cast<u64>(gfp::deg(minimal_polynomial(s, p)));
}

elt tower_context::sum_over(const std::vector<u32>& idx) const {
    elt acc = field.zero();
    for (u32 i : idx) acc = field.add(acc, pw[i]);
    return acc;
}

elt tower_context::sum_over_at(const std::vector<u32>& idx, u64 t) const {
    const u64 n = pw.size();
    elt acc = field.zero();
    for (u32 i : idx) acc = field.add(acc, pw[(i * t) % n]);
    return acc;
}

tower_context build_tower(const whiteman_classes& cl, u32 p) {
    if (cl.n % p == 0 || gcd_u64(p, cl.n) != 1)
        throw invalid_params("p must be coprime to n");
    u64 m = mult_order(p, cl.n);
    if (m > extension_field::max_degree)
        throw cap_exceeded("ord_n(p) = " + std::to_string(m) +
                           " exceeds the representable extension degree " +
                           std::to_string(extension_field::max_degree));
    tower_context tw{extension_field(p, static_cast<unsigned>(m)), {}, {}};
    tw.beta = tw.field.nth_root_of_unity(cl.n);
    tw.pw.reserve(cl.n);
    tw.pw.push_back(tw.field.one());
    for (u64 i = 1; i < cl.n; ++i)
        tw.pw.push_back(tw.field.mul(tw.pw.back(), tw.beta));
    if (tw.field.mul(tw.pw.back(), tw.beta) != tw.field.one())
        throw verification_error("beta does not have exact order n");
    return tw;
}

delta_values compute_deltas(const whiteman_classes& cl, u32 p) {
    delta_values d;
    d.delta1 = static_cast<u32>(((cl.n1 + 1) / 2) % p);
    d.delta2 = static_cast<u32>(((cl.n2 - 1) / 2) % p);
    d.delta = static_cast<u32>(((cl.n1 + 1) * (cl.n2 - 1) / 2) % p);
    return d;
}

eval_profile make_eval_profile(const whiteman_classes& cl,
                               const tower_context& tw) {
    const extension_field& f = tw.field;
    eval_profile pr;
    pr.s_beta = tw.sum_over(cl.c1);
    pr.t_beta = tw.sum_over(cl.t_support);
    pr.u_beta = tw.sum_over(cl.u_support);
    pr.s_tag = tag_of(f, pr.s_beta);
    pr.t_tag = tag_of(f, pr.t_beta);
    pr.u_tag = tag_of(f, pr.u_beta);
    pr.deltas = compute_deltas(cl, static_cast<u32>(f.p()));
    pr.q_class = cl.class_of(f.p() % cl.n);
    pr.minus_one = cl.minus_one_class();
    if (pr.q_class < 0)
        throw invalid_params("p mod n is not a unit of the class partition");
    return pr;
}

void check_power_sums(const whiteman_classes& cl, const tower_context& tw) {
    const extension_field& f = tw.field;
    const u64 p = f.p();
    if (tw.sum_over(cl.P) != f.minus_one())
        throw verification_error("sum of beta^i over P is not -1");
    if (tw.sum_over(cl.Q) != f.minus_one())
        throw verification_error("sum of beta^i over Q is not -1");
    elt all = f.zero();
    for (int j = 0; j < 6; ++j) all = f.add(all, tw.sum_over(cl.W[j]));
    if (all != f.one())
        throw verification_error("sum of beta^i over the six classes is not 1");

    const elt at_p = f.scalar(neg_mod((cl.n1 - 1) / 6, p));
    const elt at_q = f.scalar(neg_mod((cl.n2 - 1) / 6, p));
    for (u32 t : cl.P) {
        for (int j = 0; j < 6; ++j) {
            if (tw.sum_over_at(cl.W[j], t) != at_p)
                throw verification_error(
                    "class sum over W" + std::to_string(j) + " at t=" +
                    std::to_string(t) + " in P differs from -(n1-1)/6 mod p");
        }
    }
    for (u32 t : cl.Q) {
        for (int j = 0; j < 6; ++j) {
            if (tw.sum_over_at(cl.W[j], t) != at_q)
                throw verification_error(
                    "class sum over W" + std::to_string(j) + " at t=" +
                    std::to_string(t) + " in Q differs from -(n2-1)/6 mod p");
        }
    }
}

void check_stu_pointwise(const whiteman_classes& cl, const tower_context& tw,
                         const eval_profile& pr) {
    const extension_field& f = tw.field;
    const u64 p = f.p();
    const elt at_p = f.scalar(neg_mod((cl.n1 + 1) / 2, p));
    const elt at_q = f.scalar(((cl.n2 - 1) / 2) % p);
    auto neg1p = [&](const elt& v) { return f.sub(f.sub(f.zero(), v), f.one()); };

    const elt S = pr.s_beta, T = pr.t_beta, U = pr.u_beta;
    const std::array<elt, 6> tab_s = {S, neg1p(T), neg1p(U), neg1p(S), T, U};
    const std::array<elt, 6> tab_t = {T, U, S, neg1p(T), neg1p(U), neg1p(S)};
    const std::array<elt, 6> tab_u = {U, S, neg1p(T), neg1p(U), neg1p(S), T};

    struct row {
        const char* name;
        const std::vector<u32>* supp;
        const std::array<elt, 6>* tab;
    };
    const row rows[3] = {{"S", &cl.c1, &tab_s},
                         {"T", &cl.t_support, &tab_t},
                         {"U", &cl.u_support, &tab_u}};
    for (const row& r : rows) {
        for (u64 t = 1; t < cl.n; ++t) {
            elt direct = tw.sum_over_at(*r.supp, t);
            const elt& want = cl.in_p(t)   ? at_p
                              : cl.in_q(t) ? at_q
                                           : (*r.tab)[cl.class_of(t)];
            if (!(direct == want))
                throw verification_error(
                    std::string(r.name) + "(beta^t) at t=" + std::to_string(t) +
                    " is " + coeffs_str(f, direct) + ", transform table says " +
                    coeffs_str(f, want));
        }
    }
}

void check_stu_products(const whiteman_classes& cl, const tower_context& tw,
                        const eval_profile& pr, const quad_partition& qp) {
    const extension_field& f = tw.field;
    const u64 p = f.p();
    std::array<elt, 6> wsum;
    for (int j = 0; j < 6; ++j) wsum[j] = tw.sum_over(cl.W[j]);

    auto combo = [&](std::initializer_list<std::pair<int, int>> signs) {
        elt acc = f.zero();
        for (auto [i, s] : signs) {
            u64 c = s > 0 ? 1 : p - 1;
            acc = f.add(acc, f.scal(c, wsum[i]));
        }
        return acc;
    };
    const elt d_a = combo({{0, -1}, {2, 1}, {3, -1}, {5, 1}});
    const elt d_b = combo({{0, 1}, {1, -1}, {3, 1}, {4, -1}});
    const elt d_c = combo({{1, 1}, {2, -1}, {4, 1}, {5, -1}});

    const bool even = cl.eta_even();
    const long long x = qp.x, y = qp.y;
    long long coef;
    const elt *ds, *dt, *du;
    int sgn;
    if (cl.col == 0) {
        if ((2 * y) % 3 != 0)
            throw verification_error("2y/3 is not integral in the product identity");
        coef = 2 * y / 3;
        ds = &d_a; dt = &d_b; du = &d_c;
        sgn = even ? 1 : -1;
    } else if (cl.col == 1) {
        if ((x + y) % 3 != 0)
            throw verification_error("(x+y)/3 is not integral in the product identity");
        coef = (x + y) / 3;
        ds = &d_c; dt = &d_a; du = &d_b;
        sgn = even ? -1 : 1;
    } else {
        if ((x - y) % 3 != 0)
            throw verification_error("(x-y)/3 is not integral in the product identity");
        coef = (x - y) / 3;
        ds = &d_b; dt = &d_c; du = &d_a;
        sgn = even ? 1 : -1;
    }
    const long long base = even ? -static_cast<long long>((cl.n + 1) / 4)
                                : static_cast<long long>((cl.n - 1) / 4);
    const u64 base_res = static_cast<u64>(((base % static_cast<long long>(p)) +
                                           static_cast<long long>(p)) % static_cast<long long>(p));
    const long long sc = sgn * coef;
    const u64 sc_res = static_cast<u64>(((sc % static_cast<long long>(p)) +
                                         static_cast<long long>(p)) % static_cast<long long>(p));

    struct row { const char* name; const elt* v; const elt* d; };
    const row rows[3] = {{"S", &pr.s_beta, ds},
                         {"T", &pr.t_beta, dt},
                         {"U", &pr.u_beta, du}};
    for (const row& r : rows) {
        elt lhs = f.mul(*r.v, f.add(*r.v, f.one()));
        elt rhs = f.add(f.scalar(base_res), f.scal(sc_res, *r.d));
        if (!(lhs == rhs))
            throw verification_error(
                std::string("product identity for ") + r.name + ": lhs " +
                coeffs_str(f, lhs) + " differs from rhs " + coeffs_str(f, rhs));
    }
}

void check_frobenius(const whiteman_classes& cl, const tower_context& tw,
                     const eval_profile& pr) {
    const extension_field& f = tw.field;
    const u64 p = f.p();
    struct row { const char* name; const elt* v; };
    const row rows[3] = {{"S", &pr.s_beta}, {"T", &pr.t_beta}, {"U", &pr.u_beta}};
    (void)cl;
    if (pr.q_class == 0) {
        for (const row& r : rows) {
            if (!f.is_scalar(*r.v))
                throw verification_error(std::string(r.name) +
                                         "(beta) is not in the base field "
                                         "although q lies in W0");
            if (!(f.pow(*r.v, p) == *r.v))
                throw verification_error(std::string(r.name) +
                                         "(beta) is not Frobenius-fixed");
        }
        return;
    }
    for (const row& r : rows) {
        if (tag_of(f, *r.v) != elt_tag::other)
            throw verification_error(std::string(r.name) +
                                     "(beta) lies in {0, -1} although q is "
                                     "outside W0");
        elt q3 = f.pow(f.pow(f.pow(*r.v, p), p), p);
        if (pr.q_class % 2 == 1) {
            elt want = f.sub(f.sub(f.zero(), *r.v), f.one());
            if (!(q3 == want))
                throw verification_error(std::string(r.name) +
                                         "^(q^3) + " + r.name +
                                         " + 1 != 0 for odd-class q");
        } else {
            if (!(q3 == *r.v))
                throw verification_error(std::string(r.name) +
                                         "^(q^3) != " + r.name +
                                         " for even-class q");
        }
    }
}

remark_report remark_sums(const whiteman_classes& cl, const tower_context& tw) {
    const extension_field& f = tw.field;
    elt c0 = f.add(tw.sum_over(cl.W[0]), tw.sum_over(cl.W[3]));
    elt c1 = f.add(tw.sum_over(cl.W[1]), tw.sum_over(cl.W[4]));
    elt c2 = f.add(tw.sum_over(cl.W[2]), tw.sum_over(cl.W[5]));
    if (!(f.add(f.add(c0, c1), c2) == f.one()))
        throw verification_error("paired-class sums C0 + C1 + C2 != 1");
    remark_report r;
    r.diff_c2_c0_zero = f.sub(c2, c0) == f.zero();
    r.diff_c0_c1_zero = f.sub(c0, c1) == f.zero();
    r.diff_c1_c2_zero = f.sub(c1, c2) == f.zero();
    return r;
}

std::array<gfp::poly, 6> omega_factors(const whiteman_classes& cl,
                                       const tower_context& tw) {
    const extension_field& f = tw.field;
    if (cl.class_of(f.p() % cl.n) != 0)
        throw invalid_params(
            "omega factors are base-field polynomials only when q lies in W0");
    const u32 p = static_cast<u32>(f.p());
    std::array<gfp::poly, 6> out;
    for (int i = 0; i < 6; ++i) {
        std::vector<elt> poly = {f.one()};
        for (u32 j : cl.W[i]) {
            elt neg_root = f.sub(f.zero(), tw.pw[j]);
            std::vector<elt> next(poly.size() + 1, f.zero());
            for (size_t t = 0; t < poly.size(); ++t) {
                next[t + 1] = f.add(next[t + 1], poly[t]);
                next[t] = f.add(next[t], f.mul(poly[t], neg_root));
            }
            poly = std::move(next);
        }
        gfp::poly proj(poly.size());
        for (size_t t = 0; t < poly.size(); ++t) {
            if (!f.is_scalar(poly[t]))
                throw verification_error(
                    "coefficient of omega_" + std::to_string(i) +
                    " lies outside the base field");
            proj[t] = static_cast<u32>(f.scalar_value(poly[t]));
        }
        gfp::trim(proj);
        if (gfp::deg(proj) != static_cast<int>(cl.e))
            throw verification_error("omega_" + std::to_string(i) +
                                     " does not have degree e");
        out[i] = std::move(proj);
    }
    gfp::poly prod = {1};
    for (const auto& w : out) prod = gfp::mul(prod, w, p);
    prod = gfp::mul(prod, gfp::xn_minus_1(cl.n1, p), p);
    prod = gfp::mul(prod, gfp::xn_minus_1(cl.n2, p), p);
    prod = gfp::divexact(prod, gfp::x_minus_1(p), p);
    if (!(prod == gfp::xn_minus_1(cl.n, p)))
        throw verification_error(
            "product of the omegas with the trivial factors is not x^n - 1");
    return out;
}

classification classify_generator(const whiteman_classes& cl,
                                  const eval_profile& pr,
                                  const std::array<gfp::poly, 6>* omegas,
                                  u32 p) {
    classification out;
    const auto& d = pr.deltas;
    gfp::poly removed = {1};

    if (pr.q_class == 0) {
        if (omegas == nullptr)
            throw invalid_params("classification with q in W0 needs the omega factors");
        struct rule { elt_tag tag; int at_zero; int at_minus_one; };
        const std::array<rule, 3> rules = {{{pr.s_tag, 0, 3},
                                            {pr.t_tag, 4, 1},
                                            {pr.u_tag, 5, 2}}};
        for (const rule& r : rules) {
            if (r.tag == elt_tag::zero)
                out.removed_omegas.push_back(r.at_zero);
            else if (r.tag == elt_tag::minus_one)
                out.removed_omegas.push_back(r.at_minus_one);
        }
        std::sort(out.removed_omegas.begin(), out.removed_omegas.end());
        for (int i : out.removed_omegas) {
            removed = gfp::mul(removed, (*omegas)[i], p);
            out.factors_removed.push_back("omega_" + std::to_string(i));
        }
    }

    const bool has_omegas = !out.removed_omegas.empty();
    std::string plain, with_omegas;
    if (d.delta1 != 0 && d.delta2 != 0 && d.delta != 0) {
        plain = "zero";
        with_omegas = "omegas";
    } else if (d.delta1 != 0 && d.delta2 != 0 && d.delta == 0) {
        removed = gfp::mul(removed, gfp::x_minus_1(p), p);
        out.factors_removed.push_back(trivial_name(cl, '1'));
        plain = "x1_removed";
        with_omegas = "omegas_x1";
    } else if (d.delta1 != 0 && d.delta2 == 0) {
        removed = gfp::mul(removed, gfp::xn_minus_1(cl.n1, p), p);
        out.factors_removed.push_back(trivial_name(cl, 'a'));
        plain = "xn1_removed";
        with_omegas = "omegas_xn1";
    } else if (d.delta1 == 0 && d.delta2 != 0) {
        removed = gfp::mul(removed, gfp::xn_minus_1(cl.n2, p), p);
        out.factors_removed.push_back(trivial_name(cl, 'b'));
        plain = "xn2_removed";
        with_omegas = "omegas_xn2";
    } else {
        removed = gfp::mul(removed, gfp::xn_minus_1(cl.n1, p), p);
        removed = gfp::mul(removed, gfp::xn_minus_1(cl.n2, p), p);
        removed = gfp::divexact(removed, gfp::x_minus_1(p), p);
        out.factors_removed.push_back(trivial_name(cl, 'a'));
        out.factors_removed.push_back(trivial_name(cl, 'b'));
        plain = "xn1_xn2_removed";
        with_omegas = "omegas_xn1_xn2";
    }
    out.case_tag = has_omegas ? with_omegas : plain;

    out.generator = gfp::divexact(gfp::xn_minus_1(cl.n, p), removed, p);
    return out;
}

corollary_report corollary_conditions(const whiteman_classes& cl,
                                      const quad_partition& qp, u32 p) {
    corollary_report r;
    r.n_mod_12 = static_cast<unsigned>(cl.n % 12);
    const u64 quarter = r.n_mod_12 == 7 ? (cl.n + 1) / 4 : (cl.n - 1) / 4;
    r.quarter_vanishes = quarter % p == 0;
    long long num = cl.col == 0 ? 2 * qp.y : cl.col == 1 ? qp.x + qp.y : qp.x - qp.y;
    if (num % 3 != 0)
        throw verification_error("corollary coefficient is not integral");
    long long coef = num / 3;
    r.coef_residue = static_cast<u32>(((coef % p) + p) % p);
    r.applies = r.quarter_vanishes && r.coef_residue == 0;
    return r;
}

code_report build_code(u64 n1, u64 n2, u32 p, const build_options& opt) {
    if (!is_prime(p)) throw invalid_params("p must be prime");
    whiteman_classes cl = build_classes(n1, n2);
    if (gcd_u64(p, cl.n) != 1)
        throw invalid_params("p divides n = n1 * n2; gcd(n, p) must be 1");

    code_report rep;
    rep.n1 = n1;
    rep.n2 = n2;
    rep.n = cl.n;
    rep.p = p;
    rep.m = mult_order(p, cl.n);
    rep.generator = minimal_code_generator(cl, p);
    rep.k = cl.n - static_cast<u64>(gfp::deg(rep.generator));

    const delta_values d = compute_deltas(cl, p);
    const u64 e = cl.e;

    if (!opt.skip_verify && rep.m <= opt.m_cap) {
        tower_context tw = build_tower(cl, p);
        eval_profile pr = make_eval_profile(cl, tw);
        quad_partition qp = solve_quad_partition(cl);
        check_power_sums(cl, tw);
        check_stu_pointwise(cl, tw, pr);
        check_stu_products(cl, tw, pr, qp);
        check_frobenius(cl, tw, pr);
        remark_sums(cl, tw);

        std::array<gfp::poly, 6> omegas;
        const std::array<gfp::poly, 6>* omega_ptr = nullptr;
        if (pr.q_class == 0) {
            omegas = omega_factors(cl, tw);
            omega_ptr = &omegas;
        }
        classification cls = classify_generator(cl, pr, omega_ptr, p);
        if (!(cls.generator == rep.generator))
            throw verification_error(
                "classification generator (case " + cls.case_tag + ", degree " +
                std::to_string(gfp::deg(cls.generator)) +
                ") differs from the gcd generator (degree " +
                std::to_string(gfp::deg(rep.generator)) + ")");
        corollary_report cr = corollary_conditions(cl, qp, p);
        if (cr.applies && pr.q_class == 0 && cls.removed_omegas.size() != 3)
            throw verification_error(
                "corollary predicts three removed omegas, classification "
                "removed " + std::to_string(cls.removed_omegas.size()));
        rep.case_tag = cls.case_tag;
        rep.removed_omegas = cls.removed_omegas;
        rep.factors_removed = cls.factors_removed;
        rep.classification_checked = true;
    } else {
        if (!opt.skip_verify && rep.m > opt.m_cap)
            rep.warnings.push_back(
                "classification layer skipped: ord_n(p) = " +
                std::to_string(rep.m) + " exceeds the cap " +
                std::to_string(opt.m_cap));
        u64 removed_deg = cl.n - static_cast<u64>(gfp::deg(rep.generator));
        u64 corr = 0;
        std::string suffix = "zero";
        if (d.delta1 != 0 && d.delta2 != 0 && d.delta == 0) {
            corr = 1;
            suffix = "x1";
            rep.factors_removed.push_back(trivial_name(cl, '1'));
        } else if (d.delta1 != 0 && d.delta2 == 0) {
            corr = cl.n1;
            suffix = "xn1";
            rep.factors_removed.push_back(trivial_name(cl, 'a'));
        } else if (d.delta1 == 0 && d.delta2 != 0) {
            corr = cl.n2;
            suffix = "xn2";
            rep.factors_removed.push_back(trivial_name(cl, 'b'));
        } else if (d.delta1 == 0 && d.delta2 == 0) {
            corr = cl.n1 + cl.n2 - 1;
            suffix = "xn1_xn2";
            rep.factors_removed.push_back(trivial_name(cl, 'a'));
            rep.factors_removed.push_back(trivial_name(cl, 'b'));
        }
        if (removed_deg < corr)
            throw verification_error(
                "removed degree is smaller than the trivial correction");
        u64 r = (removed_deg - corr) / e;
        if (r * e + corr != removed_deg)
            throw verification_error(
                "removed degree is not a multiple of e plus the trivial "
                "correction");
        if (r == 0) {
            rep.case_tag = suffix == "zero" ? "zero" : suffix + "_removed";
        } else {
            rep.case_tag = suffix == "zero" ? "omegas" : "omegas_" + suffix;
            rep.warnings.push_back(
                std::to_string(r) +
                " omega factors removed; indices not identified because the "
                "verification layer did not run");
        }
    }
    return rep;
}

}  // namespace cyclocode
