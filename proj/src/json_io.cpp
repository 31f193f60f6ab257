#include "cyclocode/json_io.hpp"

namespace cyclocode {

using nlohmann::json;

json bounds_to_json(const distance_bounds& b) {
    json j;
    j["lower"] = b.lower;
    j["lower_method"] = b.lower_method;
    j["upper"] = b.upper.has_value() ? json(*b.upper) : json(nullptr);
    j["upper_method"] = b.upper_method;
    if (b.search_seed.has_value()) j["search_seed"] = *b.search_seed;
    if (b.search_iterations.has_value())
        j["search_iterations"] = *b.search_iterations;
    return j;
}

distance_bounds bounds_from_json(const json& j) {
    distance_bounds b;
    b.lower = j.at("lower").get<int>();
    b.lower_method = j.at("lower_method").get<std::string>();
    if (!j.at("upper").is_null()) b.upper = j.at("upper").get<int>();
    b.upper_method = j.at("upper_method").get<std::string>();
    if (j.contains("search_seed")) b.search_seed = j.at("search_seed").get<u64>();
    if (j.contains("search_iterations"))
        b.search_iterations = j.at("search_iterations").get<u64>();
    return b;
}

json report_to_json(const code_report& rep) {
    json j;
    j["params"] = {{"p", rep.p}, {"n1", rep.n1}, {"n2", rep.n2}, {"n", rep.n}};
    j["q"] = rep.p;
    j["m"] = rep.m;
    j["generator"] = {{"p", rep.p}, {"coeffs", rep.generator}};
    j["k"] = rep.k;
    j["case"] = rep.case_tag;
    j["removed_omegas"] = rep.removed_omegas;
    j["factors_removed"] = rep.factors_removed;
    j["classification_checked"] = rep.classification_checked;
    j["warnings"] = rep.warnings;
    j["bounds"] = bounds_to_json(rep.bounds);
    return j;
}

code_report report_from_json(const json& j) {
    code_report rep;
    const json& params = j.at("params");
    rep.p = params.at("p").get<u32>();
    rep.n1 = params.at("n1").get<u64>();
    rep.n2 = params.at("n2").get<u64>();
    rep.n = params.at("n").get<u64>();
    rep.m = j.at("m").get<u64>();
    rep.generator = j.at("generator").at("coeffs").get<gfp::poly>();
    rep.k = j.at("k").get<u64>();
    rep.case_tag = j.at("case").get<std::string>();
    rep.removed_omegas = j.at("removed_omegas").get<std::vector<int>>();
    rep.factors_removed =
        j.at("factors_removed").get<std::vector<std::string>>();
    rep.classification_checked = j.at("classification_checked").get<bool>();
    rep.warnings = j.at("warnings").get<std::vector<std::string>>();
    rep.bounds = bounds_from_json(j.at("bounds"));
    return rep;
}

}  // namespace cyclocode
