#include <doctest.h>

#include "cyclocode/errors.hpp"
#include "cyclocode/field.hpp"
#include "cyclocode/rng.hpp"
#include "fixtures.hpp"

using namespace cyclocode;
using elt = extension_field::elt;

namespace {

elt random_elt(const extension_field& f, xoshiro256ss& rng) {
    gfp::poly c(f.m());
    for (auto& v : c) v = static_cast<u32>(rng.below(f.p()));
    gfp::trim(c);
    return f.from_poly(c);
}

}  // namespace

TEST_CASE("deterministic modulus and primitive element per tower") {
    for (const auto& t : fixtures::tower_fixtures) {
        CAPTURE(t.p);
        CAPTURE(t.m);
        const extension_field f(t.p, t.m);
        CHECK(f.modulus() == gfp::from_digits(t.modulus));
        CHECK(f.to_poly(f.primitive_element()) == gfp::from_digits(t.gamma));
    }
}

TEST_CASE("degree-one towers are the prime field itself") {
    const extension_field f2(2, 1);
    CHECK(f2.modulus() == gfp::from_digits("01"));
    CHECK(f2.to_poly(f2.primitive_element()) == gfp::from_digits("1"));
    const extension_field f3(3, 1);
    CHECK(f3.modulus() == gfp::from_digits("01"));
    CHECK(f3.nth_root_of_unity(2) == f3.scalar(2));
    CHECK(f3.mul(f3.scalar(2), f3.scalar(2)) == f3.one());
}

TEST_CASE("frozen roots of unity") {
    const extension_field f2(2, 36);
    CHECK(f2.nth_root_of_unity(247) ==
          f2.from_poly(gfp::from_digits(fixtures::beta_2_36_n247)));
    const extension_field f3(3, 18);
    CHECK(f3.nth_root_of_unity(133) ==
          f3.from_poly(gfp::from_digits(fixtures::beta_3_18_n133)));
}

TEST_CASE("roots of unity have exact order n") {
    const extension_field f(3, 6);
    const elt beta = f.nth_root_of_unity(91);
    CHECK(f.pow(beta, 91) == f.one());
    CHECK(f.pow(beta, 7) != f.one());
    CHECK(f.pow(beta, 13) != f.one());
    CHECK_THROWS_AS((void)f.nth_root_of_unity(11), verification_error);

    const extension_field f4(2, 2);
    const elt w = f4.nth_root_of_unity(3);
    CHECK(w != f4.one());
    CHECK(f4.pow(w, 3) == f4.one());
    CHECK(f4.mul(w, w) == f4.add(w, f4.one()));
}

TEST_CASE("field laws on random elements") {
    xoshiro256ss rng(99);
    struct shape {
        u64 p;
        unsigned m;
    };
    for (auto [p, m] :
         std::initializer_list<shape>{{2, 12}, {3, 6}, {5, 6}}) {
        const extension_field f(p, m);
        for (int round = 0; round < 50; ++round) {
            const elt a = random_elt(f, rng);
            const elt b = random_elt(f, rng);
            const elt c = random_elt(f, rng);
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, f.add(b, c)) ==
                  f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.sub(f.add(a, b), b) == a);
            CHECK(f.mul(a, f.one()) == a);
            CHECK(f.mul(a, f.zero()) == f.zero());
            if (!(a == f.zero()))
                CHECK(f.mul(a, f.pow(a, f.order() - 1)) == f.one());
        }
    }
}

TEST_CASE("scalars embed and extract") {
    const extension_field f(5, 6);
    CHECK(f.is_scalar(f.scalar(3)));
    CHECK(f.scalar_value(f.scalar(3)) == 3);
    CHECK(f.minus_one() == f.scalar(4));
    CHECK(f.add(f.one(), f.minus_one()) == f.zero());
    CHECK_FALSE(f.is_scalar(f.primitive_element()));
}

TEST_CASE("primitive element generates the multiplicative group") {
    const extension_field f(3, 6);
    const elt g = f.primitive_element();
    CHECK(f.pow(g, f.order()) == f.one());
    for (u64 q : {2ull, 7ull, 13ull}) {
        CHECK(f.pow(g, static_cast<u64>(f.order() / q)) != f.one());
    }
}

TEST_CASE("polynomial evaluation in the extension") {
    const extension_field f(2, 12);
    const elt beta = f.nth_root_of_unity(91);
    const gfp::poly xn = gfp::xn_minus_1(91, 2);
    CHECK(f.eval_poly(xn, beta) == f.zero());
    const gfp::poly one{1};
    CHECK(f.eval_poly(one, beta) == f.one());
}

TEST_CASE("degree cap is enforced") {
    CHECK_THROWS_AS(extension_field(2, 65), cap_exceeded);
}
