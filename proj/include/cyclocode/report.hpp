#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclocode/gfpoly.hpp"

namespace cyclocode {

// Minimum-distance information attached to a constructed code. The lower
// bound comes from the factor-structure dispatch, the upper bound from
// exhaustive enumeration or seeded search; either side may be absent.
struct distance_bounds {
    int lower = 1;
    // none | exact_theorem | sqrt_bound | quadratic_bound | exhaustive |
    // outside_theorem_scope
    std::string lower_method = "none";
    std::optional<int> upper;
    // exact_theorem | exhaustive | search | unknown
    std::string upper_method = "unknown";
    std::optional<u64> search_seed;
    std::optional<u64> search_iterations;

    friend bool operator==(const distance_bounds&,
                           const distance_bounds&) = default;
};

// Full description of one constructed cyclic code.
struct code_report {
    u64 n1 = 0, n2 = 0, n = 0;
    u32 p = 0;   // base field size (q = p)
    u64 m = 0;   // ord_n(p)
    gfp::poly generator;  // monic divisor of x^n - 1
    u64 k = 0;            // n - deg(generator)

    // Closed case vocabulary: zero, x1_removed, xn1_removed, xn2_removed,
    // xn1_xn2_removed, and the omegas/omegas_x1/omegas_xn1/omegas_xn2/
    // omegas_xn1_xn2 family when degree-e factors are removed as well.
    std::string case_tag;

    // Indices of removed omega factors (only when p lies in W0).
    std::vector<int> removed_omegas;
    // Symbolic removed root blocks, e.g. "x-1", "x^13-1", "omega_2".
    // Overlapping roots (x = 1 sits in every block) are removed once.
    std::vector<std::string> factors_removed;

    bool classification_checked = false;
    std::vector<std::string> warnings;

    distance_bounds bounds;

    friend bool operator==(const code_report&, const code_report&) = default;
};

}  // namespace cyclocode
