#pragma once

#include <array>
#include <string>
#include <vector>

#include "cyclocode/codegen.hpp"
#include "cyclocode/report.hpp"

namespace cyclocode {

struct lower_bound_result {
    int value;
    std::string method;
};

// Dispatch on the generator's factor structure: removing a whole x^{n_i}-1
// block (with or without the other one) pins the distance exactly; removing
// omega factors on top of a block gives the square-root bound on the same
// base, refined to the least d with d^2 - d + 1 >= B when -1 lies in W3.
// Removed omega sets outside the admissible lists, and structures with no
// proven bound, fall back to the trivial bound 1.
lower_bound_result theorem_lower_bound(const code_report& rep);

// True when p^k <= cap, i.e. the message space can be enumerated.
bool message_space_fits(u32 p, u64 k, u64 cap);

// Exact minimum weight over all p^k - 1 nonzero codewords. Binary codes use
// packed words with a Gray-code walk; odd characteristics use a base-p
// odometer where every digit rollover is a free wrap because p copies of a
// row cancel.
int exact_distance_exhaustive(const code_report& rep, u64 cap = u64{1} << 26);

// Seeded information-set search: each iteration draws its own generator
// state from iteration_seed(seed, i), permutes the columns, reduces the
// generator matrix, and scans all single rows and row pairs (with every
// nonzero scalar on the second row). Deterministic for fixed inputs and
// monotone nonincreasing in the iteration count.
int upper_bound_search(const code_report& rep, u64 seed, u64 iterations);

struct shift_check_report {
    std::vector<int> image_omegas;
    unsigned samples_checked = 0;
    bool all_members = true;
    bool all_weights_equal = true;
};

// For a unit r in W_kappa, maps sampled codewords c(x) to c(x^r) modulo
// x^n - 1 and verifies membership in the sibling code whose omega indices
// are shifted by -kappa, with the Hamming weight unchanged. This is the
// mechanism behind the square-root bounds.
shift_check_report multiplicative_shift_check(
    const whiteman_classes& cl, const std::array<gfp::poly, 6>& omegas,
    const code_report& rep, u64 r, unsigned samples, u64 seed);

// Bounds assembly used by the CLI: theorem lower bound only, exhaustive
// upper (which also lifts the lower bound to the exact value), or search
// upper with the seed and iteration count recorded.
distance_bounds bounds_only(const code_report& rep);
distance_bounds bounds_with_exhaustive(const code_report& rep, u64 cap);
distance_bounds bounds_with_search(const code_report& rep, u64 seed,
                                   u64 iterations);

// Default policy after construction: exhaustive when p^k fits the quick
// cap, otherwise a short logged search when the length is moderate.
distance_bounds default_construct_bounds(const code_report& rep,
                                         u64 quick_cap = u64{1} << 22,
                                         u64 seed = 1, u64 iterations = 200);

}  // namespace cyclocode
