// Frozen expected values for the example parameter sets exercised by the
// test suites. Every value here was produced by an independent reference
// implementation and is treated as ground truth by the tests.
#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace fixtures {

struct pair_fixture {
    unsigned n1, n2, n, g, u, e, eta, big_m, rho, varrho, col;
    long long x, y, a, b, c, d;
    unsigned minus_one_class;
    unsigned c1_size;
    std::array<unsigned, 36> counts;  // cyclotomic numbers (i,j), row-major
};

inline const std::vector<pair_fixture> pair_fixtures = {
    {7, 13, 91, 19, 40, 12, 2, 9, 4, 5, 2, -4, 5, 19, 1, 11, -3, 3, 48, {{2, 0, 4, 2, 0, 1, 2, 1, 1, 0, 4, 1, 1, 4, 2, 1, 1, 0, 2, 2, 1, 2, 2, 1, 2, 1, 1, 0, 1, 4, 1, 1, 0, 4, 1, 2}}},
    {7, 19, 133, 3, 115, 18, 3, 14, 2, 7, 1, 11, -2, 5, 13, 17, -3, 0, 72, {{0, 3, 4, 4, 0, 4, 3, 4, 2, 2, 1, 2, 4, 2, 0, 1, 5, 2, 4, 2, 1, 4, 2, 1, 0, 1, 5, 2, 4, 2, 4, 2, 2, 1, 2, 3}}},
    {13, 19, 247, 2, 210, 36, 6, 31, 1, 1, 0, 2, -9, 4, 18, -4, -6, 3, 126, {{5, 2, 2, 6, 8, 8, 4, 7, 5, 8, 2, 5, 7, 5, 4, 8, 5, 2, 5, 4, 7, 5, 4, 7, 4, 8, 5, 2, 7, 5, 7, 5, 8, 2, 5, 4}}},
    {13, 31, 403, 11, 63, 60, 10, 53, 7, 18, 1, 20, 1, -23, -19, 17, -7, 3, 210, {{8, 11, 8, 14, 4, 8, 8, 11, 11, 4, 8, 11, 11, 4, 8, 8, 11, 11, 8, 8, 11, 8, 8, 11, 8, 8, 11, 11, 11, 4, 11, 11, 4, 8, 11, 8}}},
    {31, 7, 217, 3, 127, 30, 5, 24, 24, 2, 1, -13, 4, -1, -17, -25, 3, 0, 96, {{8, 4, 2, 2, 7, 2, 4, 2, 4, 4, 6, 4, 2, 4, 7, 6, 1, 4, 2, 4, 6, 2, 4, 6, 7, 6, 1, 4, 2, 4, 2, 4, 4, 6, 4, 4}}},
};

struct combo_fixture {
    unsigned p, n1, n2, m;
    int q_class;
    std::string_view case_tag;
    unsigned k;
    int exhaustive_distance;       // -1: enumeration exceeds default cap
    int lower_bound;               // -1: zero code, no distance
    std::string_view lower_method;
    std::string_view generator;    // gcd-path coefficients, ascending degree
};

inline const std::vector<combo_fixture> combo_fixtures = {
    {2, 7, 13, 12, 5, "xn1_xn2_removed", 19, 7, 7, "exact_theorem",
     "1100000110000101000010100010010001001001000100100010100001010000110000011"},
    {3, 7, 13, 6, 3, "xn1_removed", 7, 13, 13, "exact_theorem",
     "1000000100000010000001000000100000010000001000000100000010000001000000100000010000001"},
    {5, 7, 13, 12, 4, "zero", 0, -1, -1, "",
     "40000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001"},
    {2, 7, 19, 18, 1, "xn2_removed", 19, 7, 7, "exact_theorem",
     "1000000000000000000100000000000000000010000000000000000001000000000000000000100000000000000000010000000000000000001"},
    {3, 7, 19, 18, 0, "omegas_xn1", 61, -1, 5, "sqrt_bound",
     "1000002122021022211120121222100210012100120012221210211122201202212000001"},
    {5, 7, 19, 18, 1, "zero", 0, -1, -1, "",
     "40000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001"},
    {2, 13, 19, 36, 0, "omegas_x1", 109, -1, 1, "none",
     "1011001011101100100001100111101101111111101101110011110101001111000100100001000000110111100011101010001011110001000000001100100011100010111"},
    {3, 13, 19, 18, 3, "xn1_removed", 13, 19, 19, "exact_theorem",
     "1000000000000100000000000010000000000001000000000000100000000000010000000000001000000000000100000000000010000000000001000000000000100000000000010000000000001000000000000100000000000010000000000001000000000000100000000000010000000000001"},
    {5, 13, 19, 36, 5, "zero", 0, -1, -1, "",
     "40000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001"},
    {2, 13, 31, 60, 1, "x1_removed", 1, 403, 1, "none",
     "1111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111111"},
    {3, 13, 31, 30, 5, "xn1_removed", 13, 31, 31, "exact_theorem",
     "1000000000000100000000000010000000000001000000000000100000000000010000000000001000000000000100000000000010000000000001000000000000100000000000010000000000001000000000000100000000000010000000000001000000000000100000000000010000000000001000000000000100000000000010000000000001000000000000100000000000010000000000001000000000000100000000000010000000000001000000000000100000000000010000000000001"},
    {5, 13, 31, 12, 5, "xn1_removed", 13, -1, 31, "exact_theorem",
     "1000000000000100000000000010000000000001000000000000100000000000010000000000001000000000000100000000000010000000000001000000000000100000000000010000000000001000000000000100000000000010000000000001000000000000100000000000010000000000001000000000000100000000000010000000000001000000000000100000000000010000000000001000000000000100000000000010000000000001000000000000100000000000010000000000001"},
    {2, 31, 7, 15, 4, "xn2_removed", 7, 31, 31, "exact_theorem",
     "1000000100000010000001000000100000010000001000000100000010000001000000100000010000001000000100000010000001000000100000010000001000000100000010000001000000100000010000001000000100000010000001000000100000010000001"},
    {3, 31, 7, 30, 0, "omegas_xn1", 121, -1, 3, "sqrt_bound",
     "1021212012111222202202102012220101002001100111121211110011002001010222102012022022221112102121201"},
    {5, 31, 7, 6, 3, "zero", 0, -1, -1, "",
     "40000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001"},
};

struct tower_fixture {
    unsigned p, m;
    std::string_view modulus;  // ascending coefficients, degree m
    std::string_view gamma;    // ascending coefficients, first primitive element
};

inline const std::vector<tower_fixture> tower_fixtures = {
    {2, 12, "1000000001001", "000000000011"},
    {2, 15, "1000000000000011", "000000000000010"},
    {2, 18, "1000000000000001001", "000000000000000011"},
    {2, 36, "1000000000000000000000000000000110101", "000000000000000000000000000000000011"},
    {2, 60, "1000000000000000000000000000000000000000000000000000000000011", "000000000000000000000000000000000000000000000000000000000001"},
    {3, 6, "1000111", "000011"},
    {3, 18, "1000000000000001021", "000000000000000011"},
    {3, 30, "1000000000000000000000000001021", "000000000000000000000000000011"},
    {5, 6, "1000111", "000011"},
    {5, 12, "1000000001041", "000000000102"},
    {5, 18, "1000000000000000011", "000000000000000102"},
    {5, 36, "1000000000000000000000000000000031421", "000000000000000000000000000000000013"},
};

// n-th root of unity used by the verification layer, ascending digits
inline constexpr std::string_view beta_2_36_n247 = "001101111000000011100101110111000100";
inline constexpr std::string_view beta_3_18_n133 = "222122222101020021";

// character-sum value tags ("0", "-1", "other") and removed factor labels
// under the deterministic tower conventions
inline const std::array<std::string_view, 3> stu_tags_p2_n1_13_n2_19 = {"-1", "0", "-1"};
inline const std::vector<int> removed_omegas_p2_n1_13_n2_19 = {2, 3, 4};
inline const std::array<std::string_view, 3> stu_tags_p3_n1_7_n2_19 = {"0", "0", "0"};
inline const std::vector<int> removed_omegas_p3_n1_7_n2_19 = {0, 4, 5};
inline const std::array<std::string_view, 3> stu_tags_p3_n1_31_n2_7 = {"0", "-1", "-1"};
inline const std::vector<int> removed_omegas_p3_n1_31_n2_7 = {0, 1, 2};

// independently recorded generator coefficients for the example codes,
// ascending degree; used as exact expected values
inline constexpr std::string_view known_generator_p2_13_19 = "1011001011101100100001100111101101111111101101110011110101001111000100100001000000110111100011101010001011110001000000001100100011100010111";
inline constexpr std::string_view known_generator_p3_7_19 = "1000002122021022211120121222100210012100120012221210211122201202212000001";
inline constexpr std::string_view known_generator_91_19 = "1100000110000101000010100010010001001001000100100010100001010000110000011";

}  // namespace fixtures
