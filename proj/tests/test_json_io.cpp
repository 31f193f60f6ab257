#include <doctest.h>

#include <json.hpp>

#include "cyclocode/codegen.hpp"
#include "cyclocode/distance.hpp"
#include "cyclocode/json_io.hpp"

using namespace cyclocode;
using nlohmann::json;

TEST_CASE("bound records round-trip, with and without an upper bound") {
    distance_bounds open;
    open.lower = 5;
    open.lower_method = "sqrt_bound";
    CHECK(bounds_from_json(bounds_to_json(open)) == open);
    CHECK(bounds_to_json(open)["upper"].is_null());

    distance_bounds searched;
    searched.lower = 5;
    searched.lower_method = "sqrt_bound";
    searched.upper = 19;
    searched.upper_method = "search";
    searched.search_seed = 1;
    searched.search_iterations = 20000;
    CHECK(bounds_from_json(bounds_to_json(searched)) == searched);

    distance_bounds exact;
    exact.lower = 13;
    exact.lower_method = "exhaustive";
    exact.upper = 13;
    exact.upper_method = "exhaustive";
    const json j = bounds_to_json(exact);
    CHECK_FALSE(j.contains("search_seed"));
    CHECK(bounds_from_json(j) == exact);
}

TEST_CASE("full reports round-trip through the schema") {
    struct param_set {
        u64 n1, n2;
        u32 p;
    };
    for (auto [n1, n2, p] : std::initializer_list<param_set>{
             {13, 19, 2}, {7, 19, 3}, {7, 13, 5}}) {
        CAPTURE(n1);
        CAPTURE(n2);
        CAPTURE(p);
        code_report rep = build_code(n1, n2, p);
        rep.bounds = default_construct_bounds(rep);
        const json j = report_to_json(rep);
        CHECK(report_from_json(j) == rep);

        CHECK(j["params"]["n1"] == n1);
        CHECK(j["params"]["n2"] == n2);
        CHECK(j["params"]["p"] == p);
        CHECK(j["params"]["n"] == n1 * n2);
        CHECK(j["q"] == p);
        CHECK(j["k"] == rep.k);
        CHECK(j["case"] == rep.case_tag);
        CHECK(j["generator"]["p"] == p);
        CHECK(j["generator"]["coeffs"].size() ==
              static_cast<size_t>(gfp::deg(rep.generator)) + 1);
        CHECK(j["classification_checked"] == rep.classification_checked);
    }
}

TEST_CASE("reports with warnings survive the round trip") {
    build_options capped;
    capped.m_cap = 10;
    code_report rep = build_code(13, 19, 2, capped);
    rep.bounds = default_construct_bounds(rep);
    CHECK(!rep.warnings.empty());
    CHECK(report_from_json(report_to_json(rep)) == rep);
}
