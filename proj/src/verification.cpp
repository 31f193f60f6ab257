#include "cyclocode/verification.hpp"

#include <functional>
#include <optional>

#include "cyclocode/codegen.hpp"
#include "cyclocode/cyclotomy.hpp"
#include "cyclocode/errors.hpp"

namespace cyclocode {

namespace {

check_result run_one(const std::string& name,
                     const std::function<void()>& body) {
    try {
        body();
        return {name, check_status::ok, ""};
    } catch (const verification_error& e) {
        return {name, check_status::fail, e.what()};
    }
}

}  // namespace

std::vector<check_result> run_verification(u64 n1, u64 n2, u32 p, u64 m_cap) {
    std::vector<check_result> out;

    // Parameter and partition failures are not recoverable per-check.
    whiteman_classes cl = build_classes(n1, n2);
    out.push_back({"class partition of Z_n", check_status::ok, ""});

    std::optional<quad_partition> qp;
    out.push_back(run_one("closed-form tables vs brute-force counts", [&] {
        qp = solve_quad_partition(cl);
    }));
    if (qp) {
        out.push_back(run_one("shifted-count closed forms, all t", [&] {
            check_shift_counts(cl, *qp);
        }));
    } else {
        out.push_back({"shifted-count closed forms, all t",
                       check_status::skipped, "no quadratic partition"});
    }
    out.push_back(run_one("parity conditions four-way equivalence", [&] {
        parity_report pr = parity_conditions(cl);
        if (!pr.consistent())
            throw verification_error(
                "parity conditions disagree: eta_even=" +
                std::to_string(pr.eta_even) + " minus_one_in_w3=" +
                std::to_string(pr.minus_one_in_w3) + " residues_1_7=" +
                std::to_string(pr.residues_1_7) + " n_mod_12_is_7=" +
                std::to_string(pr.n_mod_12_is_7));
    }));
    out.push_back(run_one("-1 lies in W0 or W3 per parity", [&] {
        const int c = cl.minus_one_class();
        const int want = cl.eta_even() ? 3 : 0;
        if (c != want)
            throw verification_error("-1 lies in W" + std::to_string(c) +
                                     ", parity says W" + std::to_string(want));
    }));

    if (gcd_u64(p, cl.n) != 1) {
        out.push_back({"extension-tower checks", check_status::skipped,
                       "p divides n"});
        return out;
    }
    const u64 m = mult_order(p, cl.n);
    if (m > m_cap) {
        out.push_back({"extension-tower checks", check_status::skipped,
                       "ord_n(p) = " + std::to_string(m) + " exceeds cap " +
                           std::to_string(m_cap)});
    } else {
        tower_context tw = build_tower(cl, p);
        eval_profile pr = make_eval_profile(cl, tw);
        out.push_back(run_one("power sums over P, Q and the classes", [&] {
            check_power_sums(cl, tw);
        }));
        out.push_back(run_one("S/T/U transform table, all t", [&] {
            check_stu_pointwise(cl, tw, pr);
        }));
        if (qp) {
            out.push_back(run_one("S/T/U product identities", [&] {
                check_stu_products(cl, tw, pr, *qp);
            }));
        }
        out.push_back(run_one("Frobenius behaviour of S/T/U", [&] {
            check_frobenius(cl, tw, pr);
        }));
        out.push_back(run_one("paired-class sums", [&] {
            remark_sums(cl, tw);
        }));
        if (pr.q_class == 0) {
            out.push_back(run_one("omega factors in the base field", [&] {
                omega_factors(cl, tw);
            }));
        } else {
            out.push_back({"omega factors in the base field",
                           check_status::skipped,
                           "p lies in W" + std::to_string(pr.q_class) +
                               ", the degree-e factors do not project to "
                               "the base field"});
        }
    }

    out.push_back(run_one("classification matches the gcd generator", [&] {
        build_options opt;
        opt.m_cap = m_cap;
        code_report rep = build_code(n1, n2, p, opt);
        if (!rep.classification_checked && m <= m_cap)
            throw verification_error("classification layer did not run");
    }));
    return out;
}

bool all_passed(const std::vector<check_result>& results) {
    for (const auto& r : results)
        if (r.status == check_status::fail) return false;
    return true;
}

const check_result* first_failure(const std::vector<check_result>& results) {
    for (const auto& r : results)
        if (r.status == check_status::fail) return &r;
    return nullptr;
}

}  // namespace cyclocode
