#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "cyclocode/numtheory.hpp"

namespace cyclocode {

// Whiteman generalized cyclotomy of order 6 for n = n1 * n2, two distinct
// odd primes with gcd(n1 - 1, n2 - 1) = 6. The classes are
//   W_i = { g^s u^i mod n : 0 <= s < e },   e = (n1 - 1)(n2 - 1) / 6,
// where g is the smallest common primitive root of n1 and n2 and u solves
// u = g (mod n1), u = 1 (mod n2). Together with
//   P = { n1, 2 n1, ..., (n2 - 1) n1 },  Q = { n2, ..., (n1 - 1) n2 }
// and {0} they partition Z_n.
struct whiteman_classes {
    u64 n1, n2, n;
    u64 e;
    u64 g, u;
    u64 eta;      // (n1 - 1)(n2 - 1) / 36
    u64 big_m;    // ((n1 - 2)(n2 - 2) - 1) / 6
    unsigned rho;     // index of 2 w.r.t. g modulo n1
    unsigned varrho;  // index of 2 w.r.t. g modulo n2
    unsigned col;     // (rho - varrho) mod 3, selects the table column

    std::array<std::vector<u32>, 6> W;  // sorted members per class
    std::vector<u32> P, Q;              // sorted
    std::vector<u32> c1;                // P u W3 u W4 u W5
    std::vector<u32> c1_first_family;   // P u W1 u W3 u W5
    std::vector<u32> t_support;         // P u W1 u W2 u W3
    std::vector<u32> u_support;         // P u W2 u W3 u W4

    // per-residue kind: 0..5 class index, 6 = P, 7 = Q, 8 = zero
    std::vector<std::int8_t> kind;

    int class_of(u64 t) const;  // -1 when t mod n is not a unit
    bool in_p(u64 t) const { return kind[t % n] == 6; }
    bool in_q(u64 t) const { return kind[t % n] == 7; }
    int minus_one_class() const { return class_of(n - 1); }
    bool eta_even() const { return eta % 2 == 0; }
};

// Builds the partition; throws invalid_params for bad (n1, n2) and
// verification_error if the structural invariants fail.
whiteman_classes build_classes(u64 n1, u64 n2);

// Brute-force cyclotomic number |(W_i + 1) ∩ W_j|.
unsigned cyclotomic_count(const whiteman_classes& cl, int i, int j);

// Brute-force generalized count |(W_i + t) ∩ W_j|.
unsigned shifted_count(const whiteman_classes& cl, int i, int j, u64 t);

struct quad_partition {
    long long x, y;  // n = x^2 + 3 y^2, the representation matching the tables
    long long a, b;  // 4n = a^2 + 3 b^2
    long long c, d;  // 4n = c^2 + 27 d^2
};

// All (x, y) with x, y > 0 and n = x^2 + 3 y^2, in both sign combinations.
std::vector<std::pair<long long, long long>> two_three_representations(u64 n);

// Closed-form value of 36 * (i, j) for a candidate representation.
long long cyclotomic_formula36(const whiteman_classes& cl, long long x,
                               long long y, int i, int j);

// Selects the representation whose 36 closed-form values all equal the
// brute-force counts and derives (a, b, c, d); throws verification_error
// with a counterexample when nothing matches.
quad_partition solve_quad_partition(const whiteman_classes& cl);

// Closed-form (i, j); throws verification_error when the table value is not
// divisible by 36.
unsigned cyclotomic_number(const whiteman_classes& cl, const quad_partition& qp,
                           int i, int j);

// Closed forms of the shifted counts |(W_i + t) ∩ W_j| for every t != 0:
// eta when i != j and t in P u Q, (n1-1)(n2-7)/36 when i = j and t in P,
// (n1-7)(n2-1)/36 when i = j and t in Q, and the reduction to the plain
// cyclotomic number (i-k, j-k) when t lies in W_k. Checked against brute
// force; throws verification_error with the first counterexample.
void check_shift_counts(const whiteman_classes& cl, const quad_partition& qp);

struct parity_report {
    bool eta_even;
    bool minus_one_in_w3;   // otherwise -1 lies in W0
    bool residues_1_7;      // {n1 mod 12, n2 mod 12} == {1, 7}
    bool n_mod_12_is_7;     // otherwise n = 1 (mod 12)
    bool consistent() const {
        return eta_even == minus_one_in_w3 && eta_even == residues_1_7 &&
               eta_even == n_mod_12_is_7;
    }
};
parity_report parity_conditions(const whiteman_classes& cl);

// Index sets of removed degree-e factors for which the square-root distance
// bounds apply: any single index, pairs other than {0,3}, {1,4}, {2,5}, and
// the eight triples {i, i+1, i+2 mod 6}, {0,2,4}, {1,3,5}.
bool omega_set_admissible(std::vector<int> labels);

// Fault-injection hook for the verification pipeline: when enabled, the
// closed-form tables return perturbed values.
void debug_corrupt_tables(bool enabled);

}  // namespace cyclocode
