#include "cyclocode/cyclotomy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <string>

#include "cyclocode/errors.hpp"

namespace cyclocode {

namespace {

std::atomic<bool> tables_corrupted{false};

// Row selector and coefficient triples (c0, cx, cy) per table column for
// 36 * (i, j) = 6 M + c0 + cx * x + cy * y. One table per parity of eta;
// rows are indexed by the equivalence class of (i, j) under the relations
// that hold among the cyclotomic numbers.
constexpr int even_row[36] = {
    0, 1, 2, 3, 4, 5,
    6, 7, 8, 4, 2, 8,
    7, 9, 6, 5, 8, 1,
    0, 6, 7, 0, 6, 7,
    6, 5, 8, 1, 7, 9,
    7, 8, 4, 2, 8, 6,
};
constexpr long long even_triples[10][3][3] = {
    {{10, -8, 0}, {10, -2, 0}, {10, -2, 0}},      // class of (0,0)
    {{-2, -2, 12}, {-2, 4, 0}, {-2, -2, -12}},    // class of (0,1)
    {{-2, -2, 12}, {-2, -2, 12}, {-2, -8, 12}},   // class of (0,2)
    {{-2, 16, 0}, {-2, 10, -12}, {-2, 10, 12}},   // class of (0,3)
    {{-2, -2, -12}, {-2, -8, -12}, {-2, -2, -12}},// class of (0,4)
    {{-2, -2, -12}, {-2, -2, 12}, {-2, 4, 0}},    // class of (0,5)
    {{4, 4, 6}, {4, -2, 6}, {4, 4, 6}},           // class of (1,0)
    {{4, 4, -6}, {4, 4, -6}, {4, -2, -6}},        // class of (1,1)
    {{-2, -2, 0}, {-2, 4, 0}, {-2, 4, 0}},        // class of (1,2)
    {{-2, -2, 0}, {-2, -8, -12}, {-2, -8, 12}},   // class of (2,1)
};
constexpr int odd_row[36] = {
    0, 1, 2, 3, 4, 5,
    1, 5, 6, 7, 8, 6,
    2, 6, 4, 8, 9, 7,
    3, 7, 8, 3, 7, 8,
    4, 8, 9, 7, 2, 6,
    5, 6, 7, 8, 6, 1,
};
constexpr long long odd_triples[10][3][3] = {
    {{16, -20, 0}, {16, -8, 6}, {16, -8, -6}},    // class of (0,0)
    {{4, 4, 18}, {4, 4, 12}, {4, 4, 6}},          // class of (0,1)
    {{4, 4, 6}, {4, 4, -6}, {4, -8, 0}},          // class of (0,2)
    {{4, 4, 0}, {4, 4, -6}, {4, 4, 6}},           // class of (0,3)
    {{4, 4, -6}, {4, -8, 0}, {4, 4, 6}},          // class of (0,4)
    {{4, 4, -18}, {4, 4, -6}, {4, 4, -12}},       // class of (0,5)
    {{-2, -2, 0}, {-2, -2, -6}, {-2, -2, 6}},     // class of (1,2)
    {{-2, -2, 0}, {-2, -2, -6}, {-2, -2, -12}},   // class of (1,3)
    {{-2, -2, 0}, {-2, -2, 12}, {-2, -2, 6}},     // class of (1,4)
    {{-2, -2, 0}, {-2, 10, 6}, {-2, 10, -6}},     // class of (2,4)
};

u64 isqrt_u64(u64 v) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

void append_sorted(std::vector<u32>& dst, const std::vector<u32>& src) {
    dst.insert(dst.end(), src.begin(), src.end());
}

std::vector<u32> union_sorted(std::initializer_list<const std::vector<u32>*> parts) {
    std::vector<u32> out;
    for (const auto* part : parts) append_sorted(out, *part);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

void debug_corrupt_tables(bool enabled) { tables_corrupted.store(enabled); }

int whiteman_classes::class_of(u64 t) const {
    std::int8_t k = kind[t % n];
    return k <= 5 ? k : -1;
}

whiteman_classes build_classes(u64 n1, u64 n2) {
    if (!is_prime(n1) || !is_prime(n2) || n1 == n2)
        throw invalid_params("n1 and n2 must be distinct primes");
    u64 d = gcd_u64(n1 - 1, n2 - 1);
    if (d != 6)
        throw invalid_params("gcd(n1-1, n2-1) = " + std::to_string(d) +
                             ", need 6");
    whiteman_classes cl;
    cl.n1 = n1;
    cl.n2 = n2;
    cl.n = n1 * n2;
    cl.e = (n1 - 1) * (n2 - 1) / 6;
    cl.g = common_primitive_root(n1, n2);
    cl.u = crt_pair(cl.g % n1, n1, 1, n2);
    cl.eta = (n1 - 1) * (n2 - 1) / 36;
    cl.big_m = ((n1 - 2) * (n2 - 2) - 1) / 6;
    if (mult_order(cl.g, cl.n) != cl.e)
        throw verification_error("common primitive root has wrong order mod n");

    cl.kind.assign(cl.n, -1);
    cl.kind[0] = 8;
    for (u64 t = n1; t < cl.n; t += n1) {
        cl.kind[t] = 6;
        cl.P.push_back(static_cast<u32>(t));
    }
    for (u64 t = n2; t < cl.n; t += n2) {
        cl.kind[t] = 7;
        cl.Q.push_back(static_cast<u32>(t));
    }
    for (int i = 0; i < 6; ++i) {
        u64 x = powmod(cl.u, static_cast<u64>(i), cl.n);
        auto& w = cl.W[i];
        w.reserve(cl.e);
        for (u64 s = 0; s < cl.e; ++s) {
            if (cl.kind[x] != -1)
                throw verification_error(
                    "classes do not partition Z_n: residue " + std::to_string(x) +
                    " reached twice");
            cl.kind[x] = static_cast<std::int8_t>(i);
            w.push_back(static_cast<u32>(x));
            x = mulmod(x, cl.g, cl.n);
        }
        std::sort(w.begin(), w.end());
    }
    for (u64 t = 0; t < cl.n; ++t) {
        if (cl.kind[t] == -1)
            throw verification_error("residue " + std::to_string(t) +
                                     " not covered by the partition");
    }

    cl.rho = static_cast<unsigned>(discrete_log(cl.g % n1, 2 % n1, n1));
    cl.varrho = static_cast<unsigned>(discrete_log(cl.g % n2, 2 % n2, n2));
    cl.col = static_cast<unsigned>(((static_cast<long long>(cl.rho) -
                                     static_cast<long long>(cl.varrho)) % 3 + 3) % 3);

    cl.c1 = union_sorted({&cl.P, &cl.W[3], &cl.W[4], &cl.W[5]});
    cl.c1_first_family = union_sorted({&cl.P, &cl.W[1], &cl.W[3], &cl.W[5]});
    cl.t_support = union_sorted({&cl.P, &cl.W[1], &cl.W[2], &cl.W[3]});
    cl.u_support = union_sorted({&cl.P, &cl.W[2], &cl.W[3], &cl.W[4]});
    return cl;
}

unsigned cyclotomic_count(const whiteman_classes& cl, int i, int j) {
    return shifted_count(cl, i, j, 1);
}

unsigned shifted_count(const whiteman_classes& cl, int i, int j, u64 t) {
    unsigned count = 0;
    t %= cl.n;
    for (u32 w : cl.W[i]) {
        u64 s = w + t;
        if (s >= cl.n) s -= cl.n;
        if (cl.kind[s] == j) ++count;
    }
    return count;
}

std::vector<std::pair<long long, long long>> two_three_representations(u64 n) {
    std::vector<std::pair<long long, long long>> reps;
    for (u64 y = 1; 3 * y * y < n; ++y) {
        u64 x2 = n - 3 * y * y;
        u64 x = isqrt_u64(x2);
        if (x * x == x2 && x > 0) {
            for (int sx : {1, -1}) {
                for (int sy : {1, -1}) {
                    reps.emplace_back(sx * static_cast<long long>(x),
                                      sy * static_cast<long long>(y));
                }
            }
        }
    }
    return reps;
}

long long cyclotomic_formula36(const whiteman_classes& cl, long long x,
                               long long y, int i, int j) {
    const bool even = cl.eta_even();
    const int row = (even ? even_row : odd_row)[i * 6 + j];
    const long long* t = (even ? even_triples : odd_triples)[row][cl.col];
    long long v = 6 * static_cast<long long>(cl.big_m) + t[0] + t[1] * x + t[2] * y;
    if (tables_corrupted.load()) v += 36;
    return v;
}

quad_partition solve_quad_partition(const whiteman_classes& cl) {
    unsigned counts[36];
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) counts[i * 6 + j] = cyclotomic_count(cl, i, j);

    auto reps = two_three_representations(cl.n);
    if (reps.empty())
        throw verification_error("n = " + std::to_string(cl.n) +
                                 " has no representation x^2 + 3 y^2");
    std::vector<std::pair<long long, long long>> matches;
    std::string first_fail;
    for (auto [x, y] : reps) {
        bool ok = true;
        for (int i = 0; i < 6 && ok; ++i) {
            for (int j = 0; j < 6; ++j) {
                long long v = cyclotomic_formula36(cl, x, y, i, j);
                if (v != 36LL * counts[i * 6 + j]) {
                    if (first_fail.empty())
                        first_fail = "(x,y)=(" + std::to_string(x) + "," +
                                     std::to_string(y) + ") at (i,j)=(" +
                                     std::to_string(i) + "," + std::to_string(j) +
                                     "): formula " + std::to_string(v) +
                                     " vs 36*count " +
                                     std::to_string(36LL * counts[i * 6 + j]);
                    ok = false;
                    break;
                }
            }
        }
        if (ok) matches.emplace_back(x, y);
    }
    if (matches.empty())
        throw verification_error(
            "no representation of n matches the brute-force cyclotomic "
            "numbers; first mismatch " + first_fail);
    std::sort(matches.begin(), matches.end());
    auto [x, y] = matches.front();

    quad_partition qp{};
    qp.x = x;
    qp.y = y;
    long long num;
    if (cl.eta_even()) {
        if (cl.col == 0) {
            qp.a = 2 * x;
            qp.b = -2 * y;
            qp.c = -2 * x;
            num = 2 * y;
        } else if (cl.col == 1) {
            qp.a = -x - 3 * y;
            qp.b = -x + y;
            qp.c = x - 3 * y;
            num = -x - y;
        } else {
            qp.a = -x + 3 * y;
            qp.b = x + y;
            qp.c = x + 3 * y;
            num = x - y;
        }
    } else {
        if (cl.col == 0) {
            qp.a = -2 * x;
            qp.b = 2 * y;
            qp.c = 2 * x;
            num = 2 * y;
        } else if (cl.col == 1) {
            qp.a = x + 3 * y;
            qp.b = x - y;
            qp.c = x - 3 * y;
            num = -x - y;
        } else {
            qp.a = x - 3 * y;
            qp.b = -x - y;
            qp.c = x + 3 * y;
            num = x - y;
        }
    }
    if (num % 3 != 0)
        throw verification_error("quadratic partition: d = " +
                                 std::to_string(num) + "/3 is not integral");
    qp.d = num / 3;
    long long n4 = 4 * static_cast<long long>(cl.n);
    if (qp.a * qp.a + 3 * qp.b * qp.b != n4)
        throw verification_error("quadratic partition: 4n != a^2 + 3 b^2");
    if (qp.c * qp.c + 27 * qp.d * qp.d != n4)
        throw verification_error("quadratic partition: 4n != c^2 + 27 d^2");
    return qp;
}

unsigned cyclotomic_number(const whiteman_classes& cl, const quad_partition& qp,
                           int i, int j) {
    long long v = cyclotomic_formula36(cl, qp.x, qp.y, i, j);
    if (v < 0 || v % 36 != 0)
        throw verification_error("table value 36*(i,j) = " + std::to_string(v) +
                                 " at (i,j)=(" + std::to_string(i) + "," +
                                 std::to_string(j) + ") is not divisible by 36");
    return static_cast<unsigned>(v / 36);
}

void check_shift_counts(const whiteman_classes& cl, const quad_partition& qp) {
    const long long eta = static_cast<long long>(cl.eta);
    const long long diag_p = static_cast<long long>((cl.n1 - 1) * (cl.n2 - 7) / 36);
    const long long diag_q = static_cast<long long>((cl.n1 - 7) * (cl.n2 - 1) / 36);
    unsigned table[36];
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) table[i * 6 + j] = cyclotomic_number(cl, qp, i, j);
    for (u64 t = 1; t < cl.n; ++t) {
        const std::int8_t kd = cl.kind[t];
        long long got[36] = {};
        for (int i = 0; i < 6; ++i) {
            for (u32 w : cl.W[i]) {
                u64 s = w + t;
                if (s >= cl.n) s -= cl.n;
                const std::int8_t j = cl.kind[s];
                if (j <= 5) ++got[i * 6 + j];
            }
        }
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) {
                long long want;
                if (kd == 6)
                    want = i == j ? diag_p : eta;
                else if (kd == 7)
                    want = i == j ? diag_q : eta;
                else
                    want = table[((i - kd + 6) % 6) * 6 + (j - kd + 6) % 6];
                if (got[i * 6 + j] != want)
                    throw verification_error(
                        "shifted count d(" + std::to_string(i) + "," +
                        std::to_string(j) + ";" + std::to_string(t) + ") = " +
                        std::to_string(got[i * 6 + j]) +
                        ", closed form says " + std::to_string(want));
            }
        }
    }
}

parity_report parity_conditions(const whiteman_classes& cl) {
    parity_report r{};
    r.eta_even = cl.eta_even();
    r.minus_one_in_w3 = cl.minus_one_class() == 3;
    u64 a = cl.n1 % 12, b = cl.n2 % 12;
    r.residues_1_7 = (a == 1 && b == 7) || (a == 7 && b == 1);
    r.n_mod_12_is_7 = cl.n % 12 == 7;
    return r;
}

bool omega_set_admissible(std::vector<int> labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (labels.size() == 1) return true;
    if (labels.size() == 2) {
        int diff = labels[1] - labels[0];
        return diff != 3;  // the excluded pairs are exactly the antipodal ones
    }
    if (labels.size() == 3) {
        static const std::set<std::vector<int>> admissible = {
            {0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {0, 4, 5}, {0, 1, 5},
            {0, 2, 4}, {1, 3, 5}};
        return admissible.count(labels) > 0;
    }
    return false;
}

}  // namespace cyclocode
