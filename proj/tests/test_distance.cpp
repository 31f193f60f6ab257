#include <doctest.h>

#include <string_view>

#include "cyclocode/codegen.hpp"
#include "cyclocode/distance.hpp"
#include "cyclocode/errors.hpp"
#include "fixtures.hpp"

using namespace cyclocode;

namespace {

code_report plain_cyclic(u64 n, u32 p, std::string_view digits) {
    code_report rep;
    rep.n = n;
    rep.p = p;
    rep.generator = gfp::from_digits(digits);
    rep.k = n - gfp::deg(rep.generator);
    REQUIRE(gfp::divides(rep.generator, gfp::xn_minus_1(n, p), p));
    return rep;
}

}  // namespace

TEST_CASE("exhaustive distance on classical binary cyclic codes") {
    CHECK(exact_distance_exhaustive(plain_cyclic(15, 2, "11001")) == 3);
    CHECK(exact_distance_exhaustive(plain_cyclic(15, 2, "100010111")) == 5);
    CHECK(exact_distance_exhaustive(plain_cyclic(15, 2, "11101100101")) == 7);
    CHECK(exact_distance_exhaustive(plain_cyclic(7, 2, "1011")) == 3);
}

TEST_CASE("exhaustive distance over odd characteristics") {
    const code_report rep3 = plain_cyclic(7, 3, "1111111");
    CHECK(rep3.k == 1);
    CHECK(exact_distance_exhaustive(rep3) == 7);

    const code_report parity5 = plain_cyclic(6, 5, "41");
    CHECK(exact_distance_exhaustive(parity5) == 2);
}

TEST_CASE("exhaustive distances match the frozen combinations") {
    for (const auto& fx : fixtures::combo_fixtures) {
        if (fx.exhaustive_distance < 0) continue;
        CAPTURE(fx.p);
        CAPTURE(fx.n1);
        CAPTURE(fx.n2);
        build_options opt;
        opt.skip_verify = true;
        const code_report rep = build_code(fx.n1, fx.n2, fx.p, opt);
        CHECK(exact_distance_exhaustive(rep) == fx.exhaustive_distance);
    }
}

TEST_CASE("theorem bounds per case, against the frozen values") {
    for (const auto& fx : fixtures::combo_fixtures) {
        if (fx.lower_bound < 0) continue;
        CAPTURE(fx.p);
        CAPTURE(fx.n1);
        CAPTURE(fx.n2);
        const code_report rep = build_code(fx.n1, fx.n2, fx.p);
        const lower_bound_result lb = theorem_lower_bound(rep);
        CHECK(lb.value == fx.lower_bound);
        CHECK(lb.method == fx.lower_method);
    }
}

TEST_CASE("search stays above exhaustive, exhaustive above the bound") {
    for (const auto& fx : fixtures::combo_fixtures) {
        if (fx.exhaustive_distance < 0 || fx.k == 0) continue;
        CAPTURE(fx.p);
        CAPTURE(fx.n1);
        CAPTURE(fx.n2);
        build_options opt;
        opt.skip_verify = true;
        const code_report rep = build_code(fx.n1, fx.n2, fx.p, opt);
        const int d = exact_distance_exhaustive(rep);
        const int ub = upper_bound_search(rep, 3, 2000);
        CHECK(ub >= d);
        CHECK(d >= fx.lower_bound);
    }
}

TEST_CASE("search is deterministic and monotone in the iteration budget") {
    build_options opt;
    opt.skip_verify = true;
    const code_report rep = build_code(13, 19, 2, opt);
    const int a = upper_bound_search(rep, 11, 400);
    const int b = upper_bound_search(rep, 11, 400);
    CHECK(a == b);
    const int c = upper_bound_search(rep, 11, 1600);
    CHECK(c <= a);
    CHECK(a >= 1);
    CHECK(a <= static_cast<int>(rep.n));
}

TEST_CASE("search finds the documented weights on the example codes") {
    const code_report ex1 = build_code(13, 19, 2);
    CHECK(upper_bound_search(ex1, 1, 20000) <= 48);
    const code_report ex3 = build_code(7, 19, 3);
    CHECK(upper_bound_search(ex3, 1, 20000) <= 35);
}

TEST_CASE("message-space cap arithmetic") {
    CHECK(message_space_fits(2, 26, u64{1} << 26));
    CHECK_FALSE(message_space_fits(2, 27, u64{1} << 26));
    CHECK(message_space_fits(3, 16, u64{1} << 26));
    CHECK_FALSE(message_space_fits(3, 17, u64{1} << 26));
    CHECK(message_space_fits(5, 1, 5));
    CHECK_FALSE(message_space_fits(5, 2, 24));
}

TEST_CASE("caps and degenerate inputs raise typed errors") {
    build_options opt;
    opt.skip_verify = true;
    const code_report zero = build_code(7, 13, 5, opt);
    CHECK_THROWS_AS((void)exact_distance_exhaustive(zero), invalid_params);
    CHECK_THROWS_AS((void)upper_bound_search(zero, 1, 10), invalid_params);

    const code_report big = build_code(31, 7, 3, opt);
    CHECK_THROWS_AS((void)exact_distance_exhaustive(big), cap_exceeded);

    code_report wide;
    wide.n = 6;
    wide.p = 131;
    wide.generator = gfp::from_digits("1301");
    wide.k = 3;
    CHECK_THROWS_AS((void)exact_distance_exhaustive(wide), cap_exceeded);
    CHECK_THROWS_AS((void)upper_bound_search(wide, 1, 10), cap_exceeded);
}

TEST_CASE("even-eta removals use the quadratic form of the bound") {
    code_report rep;
    rep.n1 = 13;
    rep.n2 = 19;
    rep.n = 247;
    rep.p = 2;
    rep.case_tag = "omegas_xn2";
    rep.removed_omegas = {0, 1};
    rep.classification_checked = true;
    const lower_bound_result lb = theorem_lower_bound(rep);
    CHECK(lb.method == "quadratic_bound");
    CHECK(lb.value == 4);

    rep.removed_omegas = {1, 4};
    const lower_bound_result blocked = theorem_lower_bound(rep);
    CHECK(blocked.value == 1);
    CHECK(blocked.method == "outside_theorem_scope");
}

TEST_CASE("assembled bound reports") {
    const code_report exact = build_code(7, 13, 3);
    const distance_bounds b1 = bounds_only(exact);
    CHECK(b1.lower == 13);
    CHECK(b1.lower_method == "exact_theorem");
    REQUIRE(b1.upper.has_value());
    CHECK(*b1.upper == 13);
    CHECK(b1.upper_method == "exact_theorem");

    const distance_bounds b2 = bounds_with_exhaustive(exact, u64{1} << 26);
    CHECK(b2.lower == 13);
    CHECK(b2.upper == 13);
    CHECK(b2.upper_method == "exhaustive");

    const code_report searchable = build_code(7, 19, 3);
    const distance_bounds b3 = bounds_with_search(searchable, 1, 500);
    CHECK(b3.lower == 5);
    CHECK(b3.lower_method == "sqrt_bound");
    REQUIRE(b3.upper.has_value());
    CHECK(*b3.upper >= 5);
    CHECK(b3.upper_method == "search");
    CHECK(b3.search_seed == 1);
    CHECK(b3.search_iterations == 500);

    const code_report zero = build_code(7, 13, 5);
    const distance_bounds b4 = default_construct_bounds(zero);
    CHECK(b4.lower == 1);
    CHECK(b4.lower_method == "none");
    CHECK_FALSE(b4.upper.has_value());
}

TEST_CASE("lower bound degrades to none without verified labels") {
    build_options opt;
    opt.skip_verify = true;
    const code_report rep = build_code(7, 19, 3, opt);
    CHECK(rep.case_tag == "omegas_xn1");
    CHECK_FALSE(rep.classification_checked);
    const lower_bound_result lb = theorem_lower_bound(rep);
    CHECK(lb.value == 1);
    CHECK(lb.method == "none");
}

TEST_CASE("multiplicative shifts permute the removed factors") {
    const whiteman_classes cl = build_classes(7, 19);
    const tower_context tw = build_tower(cl, 3);
    const auto omegas = omega_factors(cl, tw);
    const code_report rep = build_code(7, 19, 3);

    const auto identity =
        multiplicative_shift_check(cl, omegas, rep, 1, 8, 17);
    CHECK(identity.image_omegas == rep.removed_omegas);
    CHECK(identity.all_members);
    CHECK(identity.all_weights_equal);
    CHECK(identity.samples_checked == 8);

    const u64 r = cl.W[1][0];
    const auto shifted =
        multiplicative_shift_check(cl, omegas, rep, r, 8, 17);
    CHECK(shifted.image_omegas == std::vector<int>{3, 4, 5});
    CHECK(shifted.all_members);
    CHECK(shifted.all_weights_equal);
}
