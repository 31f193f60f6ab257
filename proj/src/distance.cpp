#include "cyclocode/distance.hpp"

#include <algorithm>
#include <numeric>

#include "cyclocode/errors.hpp"
#include "cyclocode/rng.hpp"
#include "cyclocode/simd.hpp"

namespace cyclocode {

namespace {

using kernels::ops;

int ceil_sqrt(u64 b) {
    int d = 1;
    while (static_cast<u64>(d) * static_cast<u64>(d) < b) ++d;
    return d;
}

int least_quadratic(u64 b) {
    int d = 1;
    while (static_cast<u64>(d) * static_cast<u64>(d - 1) + 1 < b) ++d;
    return d;
}

// k x words packed matrix for GF(2), row i = x^i * g
std::vector<u64> packed_rows(const gfp::poly& g, u64 n, u64 k, size_t words) {
    std::vector<u64> rows(k * words, 0);
    for (u64 i = 0; i < k; ++i) {
        u64* row = rows.data() + i * words;
        for (size_t j = 0; j < g.size(); ++j) {
            if (g[j]) {
                u64 bit = i + j;
                row[bit / 64] |= u64{1} << (bit % 64);
            }
        }
    }
    (void)n;
    return rows;
}

std::vector<std::uint8_t> byte_rows(const gfp::poly& g, u64 n, u64 k) {
    std::vector<std::uint8_t> rows(k * n, 0);
    for (u64 i = 0; i < k; ++i) {
        std::uint8_t* row = rows.data() + i * n;
        for (size_t j = 0; j < g.size(); ++j)
            row[i + j] = static_cast<std::uint8_t>(g[j]);
    }
    return rows;
}

int exhaustive_gf2(const gfp::poly& g, u64 n, u64 k, const ops& kr) {
    const size_t words = (n + 63) / 64;
    std::vector<u64> rows = packed_rows(g, n, k, words);
    std::vector<u64> cw(words, 0);
    u64 best = n + 1;
    const u64 total = u64{1} << k;
    for (u64 i = 1; i < total; ++i) {
        const unsigned j = static_cast<unsigned>(__builtin_ctzll(i));
        kr.xor_rows(cw.data(), rows.data() + j * words, words);
        const u64 w = kr.popcount_words(cw.data(), words);
        if (w < best) best = w;
    }
    return static_cast<int>(best);
}

int exhaustive_gfp(const gfp::poly& g, u64 n, u64 k, u32 p, const ops& kr) {
    std::vector<std::uint8_t> rows = byte_rows(g, n, k);
    std::vector<std::uint8_t> cw(n, 0);
    std::vector<std::uint8_t> digit(k, 0);
    u64 best = n + 1;
    u64 remaining = 1;
    for (u64 i = 0; i < k; ++i) remaining *= p;
    for (u64 i = 1; i < remaining; ++i) {
        u64 j = 0;
        while (true) {
            kr.addmul_bytes(cw.data(), rows.data() + j * n, n, 1,
                            static_cast<std::uint8_t>(p));
            if (++digit[j] < p) break;
            digit[j] = 0;
            ++j;
        }
        const u64 w = kr.count_nonzero(cw.data(), n);
        if (w < best) best = w;
    }
    return static_cast<int>(best);
}

struct gauss_scratch_gf2 {
    std::vector<u64> mat;
    std::vector<u64> perm;
};

u64 search_iteration_gf2(const std::vector<u64>& rows, u64 n, u64 k,
                         size_t words, u64 it_seed, gauss_scratch_gf2& sc,
                         const ops& kr) {
    xoshiro256ss rng(it_seed);
    sc.mat = rows;
    sc.perm.resize(n);
    std::iota(sc.perm.begin(), sc.perm.end(), 0);
    for (u64 j = n - 1; j > 0; --j)
        std::swap(sc.perm[j], sc.perm[rng.below(j + 1)]);

    u64* mat = sc.mat.data();
    u64 r = 0;
    for (u64 idx = 0; idx < n && r < k; ++idx) {
        const u64 col = sc.perm[idx];
        const u64 word = col / 64;
        const u64 mask = u64{1} << (col % 64);
        u64 pivot = r;
        while (pivot < k && !(mat[pivot * words + word] & mask)) ++pivot;
        if (pivot == k) continue;
        if (pivot != r)
            for (size_t w = 0; w < words; ++w)
                std::swap(mat[pivot * words + w], mat[r * words + w]);
        for (u64 row = 0; row < k; ++row) {
            if (row != r && (mat[row * words + word] & mask))
                kr.xor_rows(mat + row * words, mat + r * words, words);
        }
        ++r;
    }

    u64 best = n + 1;
    std::vector<u64> tmp(words);
    for (u64 a = 0; a < k; ++a) {
        const u64 w = kr.popcount_words(mat + a * words, words);
        if (w > 0 && w < best) best = w;
    }
    for (u64 a = 0; a + 1 < k; ++a) {
        for (u64 b = a + 1; b < k; ++b) {
            std::copy(mat + a * words, mat + (a + 1) * words, tmp.begin());
            kr.xor_rows(tmp.data(), mat + b * words, words);
            const u64 w = kr.popcount_words(tmp.data(), words);
            if (w > 0 && w < best) best = w;
        }
    }
    return best;
}

struct gauss_scratch_gfp {
    std::vector<std::uint8_t> mat;
    std::vector<u64> perm;
};

u64 search_iteration_gfp(const std::vector<std::uint8_t>& rows, u64 n, u64 k,
                         u32 p, u64 it_seed, gauss_scratch_gfp& sc,
                         const ops& kr) {
    xoshiro256ss rng(it_seed);
    sc.mat = rows;
    sc.perm.resize(n);
    std::iota(sc.perm.begin(), sc.perm.end(), 0);
    for (u64 j = n - 1; j > 0; --j)
        std::swap(sc.perm[j], sc.perm[rng.below(j + 1)]);

    std::uint8_t* mat = sc.mat.data();
    const std::uint8_t pb = static_cast<std::uint8_t>(p);
    auto scale_row = [&](std::uint8_t* row, u32 c) {
        for (u64 j = 0; j < n; ++j)
            row[j] = static_cast<std::uint8_t>(row[j] * c % p);
    };
    u64 r = 0;
    for (u64 idx = 0; idx < n && r < k; ++idx) {
        const u64 col = sc.perm[idx];
        u64 pivot = r;
        while (pivot < k && mat[pivot * n + col] == 0) ++pivot;
        if (pivot == k) continue;
        if (pivot != r)
            std::swap_ranges(mat + pivot * n, mat + (pivot + 1) * n,
                             mat + r * n);
        const u32 inv = static_cast<u32>(gfp::inv_mod(mat[r * n + col], p));
        if (inv != 1) scale_row(mat + r * n, inv);
        for (u64 row = 0; row < k; ++row) {
            const std::uint8_t c = mat[row * n + col];
            if (row != r && c != 0)
                kr.addmul_bytes(mat + row * n, mat + r * n, n,
                                static_cast<std::uint8_t>(p - c), pb);
        }
        ++r;
    }

    u64 best = n + 1;
    std::vector<std::uint8_t> tmp(n);
    for (u64 a = 0; a < k; ++a) {
        const u64 w = kr.count_nonzero(mat + a * n, n);
        if (w > 0 && w < best) best = w;
    }
    for (u64 a = 0; a + 1 < k; ++a) {
        for (u64 b = a + 1; b < k; ++b) {
            for (u32 lam = 1; lam < p; ++lam) {
                std::copy(mat + a * n, mat + (a + 1) * n, tmp.begin());
                kr.addmul_bytes(tmp.data(), mat + b * n, n,
                                static_cast<std::uint8_t>(lam), pb);
                const u64 w = kr.count_nonzero(tmp.data(), n);
                if (w > 0 && w < best) best = w;
            }
        }
    }
    return best;
}

}  // namespace

lower_bound_result theorem_lower_bound(const code_report& rep) {
    const std::string& tag = rep.case_tag;
    if (tag == "xn1_removed") return {static_cast<int>(rep.n2), "exact_theorem"};
    if (tag == "xn2_removed") return {static_cast<int>(rep.n1), "exact_theorem"};
    if (tag == "xn1_xn2_removed")
        return {static_cast<int>(std::min(rep.n1, rep.n2)), "exact_theorem"};

    u64 base = 0;
    if (tag == "omegas_xn1")
        base = rep.n2;
    else if (tag == "omegas_xn2")
        base = rep.n1;
    else if (tag == "omegas_xn1_xn2")
        base = std::min(rep.n1, rep.n2);
    else
        return {1, "none"};

    if (!rep.classification_checked) return {1, "none"};
    if (!omega_set_admissible(rep.removed_omegas))
        return {1, "outside_theorem_scope"};
    const bool eta_even = ((rep.n1 - 1) * (rep.n2 - 1) / 36) % 2 == 0;
    if (eta_even) return {least_quadratic(base), "quadratic_bound"};
    return {ceil_sqrt(base), "sqrt_bound"};
}

bool message_space_fits(u32 p, u64 k, u64 cap) {
    u128 total = 1;
    for (u64 i = 0; i < k; ++i) {
        total *= p;
        if (total > cap) return false;
    }
    return true;
}

int exact_distance_exhaustive(const code_report& rep, u64 cap) {
    if (rep.k == 0)
        throw invalid_params("zero code: there are no nonzero codewords");
    if (rep.p > 127)
        throw cap_exceeded("byte kernels require p <= 127");
    if (!message_space_fits(rep.p, rep.k, cap))
        throw cap_exceeded("message space " + std::to_string(rep.p) + "^" +
                           std::to_string(rep.k) +
                           " exceeds the enumeration cap " +
                           std::to_string(cap));
    const ops& kr = kernels::active_ops();
    if (rep.p == 2) return exhaustive_gf2(rep.generator, rep.n, rep.k, kr);
    return exhaustive_gfp(rep.generator, rep.n, rep.k, rep.p, kr);
}

int upper_bound_search(const code_report& rep, u64 seed, u64 iterations) {
    if (rep.k == 0)
        throw invalid_params("zero code: there are no nonzero codewords");
    if (rep.p > 127)
        throw cap_exceeded("byte kernels require p <= 127");
    const ops& kr = kernels::active_ops();
    u64 best = rep.n + 1;
    if (rep.p == 2) {
        const size_t words = (rep.n + 63) / 64;
        std::vector<u64> rows = packed_rows(rep.generator, rep.n, rep.k, words);
        gauss_scratch_gf2 sc;
        for (u64 it = 0; it < iterations; ++it) {
            const u64 w = search_iteration_gf2(rows, rep.n, rep.k, words,
                                               iteration_seed(seed, it), sc, kr);
            if (w < best) best = w;
        }
    } else {
        std::vector<std::uint8_t> rows = byte_rows(rep.generator, rep.n, rep.k);
        gauss_scratch_gfp sc;
        for (u64 it = 0; it < iterations; ++it) {
            const u64 w = search_iteration_gfp(rows, rep.n, rep.k, rep.p,
                                               iteration_seed(seed, it), sc, kr);
            if (w < best) best = w;
        }
    }
    return static_cast<int>(best);
}

shift_check_report multiplicative_shift_check(
    const whiteman_classes& cl, const std::array<gfp::poly, 6>& omegas,
    const code_report& rep, u64 r, unsigned samples, u64 seed) {
    const u32 p = rep.p;
    const int kappa = cl.class_of(r);
    if (kappa < 0)
        throw invalid_params("shift residue r must lie in one of the classes");

    shift_check_report out;
    for (int j : rep.removed_omegas)
        out.image_omegas.push_back((j - kappa + 6) % 6);
    std::sort(out.image_omegas.begin(), out.image_omegas.end());

    gfp::poly removed = {1};
    for (int j : out.image_omegas) removed = gfp::mul(removed, omegas[j], p);
    const delta_values d = compute_deltas(cl, p);
    if (d.delta1 != 0 && d.delta2 != 0 && d.delta == 0) {
        removed = gfp::mul(removed, gfp::x_minus_1(p), p);
    } else if (d.delta1 != 0 && d.delta2 == 0) {
        removed = gfp::mul(removed, gfp::xn_minus_1(cl.n1, p), p);
    } else if (d.delta1 == 0 && d.delta2 != 0) {
        removed = gfp::mul(removed, gfp::xn_minus_1(cl.n2, p), p);
    } else if (d.delta1 == 0 && d.delta2 == 0) {
        removed = gfp::mul(removed, gfp::xn_minus_1(cl.n1, p), p);
        removed = gfp::mul(removed, gfp::xn_minus_1(cl.n2, p), p);
        removed = gfp::divexact(removed, gfp::x_minus_1(p), p);
    }
    const gfp::poly sibling =
        gfp::divexact(gfp::xn_minus_1(cl.n, p), removed, p);

    xoshiro256ss rng(seed);
    const u64 k = rep.k;
    for (unsigned s = 0; s < samples; ++s) {
        gfp::poly msg(k, 0);
        for (u64 i = 0; i < k; ++i)
            msg[i] = static_cast<u32>(rng.below(p));
        gfp::poly c = gfp::mul(msg, rep.generator, p);
        if (gfp::deg(c) < 0) continue;
        gfp::poly image(cl.n, 0);
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i]) {
                const u64 pos = (i * r) % cl.n;
                image[pos] = static_cast<u32>((image[pos] + c[i]) % p);
            }
        }
        gfp::trim(image);
        const auto weight_of = [](const gfp::poly& f) {
            size_t w = 0;
            for (u32 v : f) w += v != 0;
            return w;
        };
        if (weight_of(c) != weight_of(image)) out.all_weights_equal = false;
        if (!gfp::divides(sibling, image, p)) out.all_members = false;
        ++out.samples_checked;
    }
    return out;
}

distance_bounds bounds_only(const code_report& rep) {
    distance_bounds b;
    const lower_bound_result lb = theorem_lower_bound(rep);
    b.lower = lb.value;
    b.lower_method = lb.method;
    if (lb.method == "exact_theorem") {
        b.upper = lb.value;
        b.upper_method = "exact_theorem";
    }
    return b;
}

distance_bounds bounds_with_exhaustive(const code_report& rep, u64 cap) {
    const int d = exact_distance_exhaustive(rep, cap);
    distance_bounds b;
    b.lower = d;
    b.lower_method = "exhaustive";
    b.upper = d;
    b.upper_method = "exhaustive";
    return b;
}

distance_bounds bounds_with_search(const code_report& rep, u64 seed,
                                   u64 iterations) {
    distance_bounds b = bounds_only(rep);
    const int found = upper_bound_search(rep, seed, iterations);
    b.search_seed = seed;
    b.search_iterations = iterations;
    if (!b.upper.has_value() || found < *b.upper) {
        b.upper = found;
        b.upper_method = "search";
    }
    return b;
}

distance_bounds default_construct_bounds(const code_report& rep, u64 quick_cap,
                                         u64 seed, u64 iterations) {
    if (rep.k == 0) {
        distance_bounds b;
        b.lower_method = "none";
        return b;
    }
    if (rep.p <= 127 && message_space_fits(rep.p, rep.k, quick_cap))
        return bounds_with_exhaustive(rep, quick_cap);
    if (rep.n <= 2048) return bounds_with_search(rep, seed, iterations);
    return bounds_only(rep);
}

}  // namespace cyclocode
