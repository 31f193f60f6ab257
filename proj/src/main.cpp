#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>

#include "cyclocode/codegen.hpp"
#include "cyclocode/cyclotomy.hpp"
#include "cyclocode/distance.hpp"
#include "cyclocode/errors.hpp"
#include "cyclocode/json_io.hpp"
#include "cyclocode/sequence.hpp"
#include "cyclocode/verification.hpp"

namespace {

using namespace cyclocode;
using nlohmann::json;

struct work_caps {
    u64 m = extension_field::max_degree;
    u64 exhaustive = u64{1} << 26;
};

work_caps parse_caps_env() {
    work_caps caps;
    const char* env = std::getenv("CYCLOCODE_CAPS");
    if (env == nullptr || *env == '\0') return caps;
    std::string s(env);
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        const std::string item = s.substr(pos, comma - pos);
        const size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw invalid_params("CYCLOCODE_CAPS entry '" + item +
                                 "' is not key=value");
        const std::string key = item.substr(0, eq);
        u64 value = 0;
        try {
            value = std::stoull(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw invalid_params("CYCLOCODE_CAPS value for '" + key +
                                 "' is not an unsigned integer");
        }
        if (key == "m")
            caps.m = value;
        else if (key == "exhaustive")
            caps.exhaustive = value;
        else
            throw invalid_params("CYCLOCODE_CAPS key '" + key +
                                 "' is not one of m, exhaustive");
        pos = comma + 1;
    }
    return caps;
}

std::string bounds_line(const distance_bounds& b) {
    std::string s = "lower=" + std::to_string(b.lower) + " (" +
                    b.lower_method + ")";
    if (b.upper.has_value()) {
        s += " upper=" + std::to_string(*b.upper) + " (" + b.upper_method;
        if (b.upper_method == "search" && b.search_seed.has_value())
            s += " seed=" + std::to_string(*b.search_seed) +
                 " iterations=" + std::to_string(*b.search_iterations);
        s += ")";
    } else {
        s += " upper=unknown";
    }
    return s;
}

void print_report_text(const code_report& rep) {
    std::cout << "[" << rep.n << "," << rep.k << "] cyclic code over GF("
              << rep.p << ")\n";
    std::cout << "n1=" << rep.n1 << " n2=" << rep.n2 << " m=" << rep.m << "\n";
    std::cout << "case: " << rep.case_tag << "\n";
    std::cout << "factors removed:";
    if (rep.factors_removed.empty()) std::cout << " (none)";
    for (const auto& f : rep.factors_removed) std::cout << " " << f;
    std::cout << "\n";
    std::cout << "generator degree: " << gfp::deg(rep.generator) << "\n";
    std::cout << "generator: " << gfp::to_string(rep.generator) << "\n";
    std::cout << "generator digits: " << gfp::to_digits(rep.generator) << "\n";
    std::cout << "bounds: " << bounds_line(rep.bounds) << "\n";
    std::cout << "classification: "
              << (rep.classification_checked ? "verified" : "not verified")
              << "\n";
    for (const auto& w : rep.warnings) std::cout << "warning: " << w << "\n";
}

json tables_json(const whiteman_classes& cl, const quad_partition& qp) {
    json counts = json::array();
    for (int i = 0; i < 6; ++i) {
        json row = json::array();
        for (int j = 0; j < 6; ++j) row.push_back(cyclotomic_count(cl, i, j));
        counts.push_back(row);
    }
    return json{{"n1", cl.n1},
                {"n2", cl.n2},
                {"n", cl.n},
                {"e", cl.e},
                {"g", cl.g},
                {"u", cl.u},
                {"eta", cl.eta},
                {"M", cl.big_m},
                {"rho", cl.rho},
                {"varrho", cl.varrho},
                {"col", cl.col},
                {"minus_one_class", cl.minus_one_class()},
                {"x", qp.x},
                {"y", qp.y},
                {"a", qp.a},
                {"b", qp.b},
                {"c", qp.c},
                {"d", qp.d},
                {"counts", counts}};
}

void print_tables_text(const whiteman_classes& cl, const quad_partition& qp) {
    std::cout << "n1=" << cl.n1 << " n2=" << cl.n2 << " n=" << cl.n
              << " e=" << cl.e << " eta=" << cl.eta << " M=" << cl.big_m
              << "\n";
    std::cout << "g=" << cl.g << " u=" << cl.u << " rho=" << cl.rho
              << " varrho=" << cl.varrho << " col=" << cl.col
              << " minus_one_class=" << cl.minus_one_class() << "\n";
    std::cout << "x=" << qp.x << " y=" << qp.y << " a=" << qp.a
              << " b=" << qp.b << " c=" << qp.c << " d=" << qp.d << "\n";
    std::cout << "cyclotomic numbers (i,j), rows i=0..5:\n";
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j)
            std::cout << (j == 0 ? "" : " ") << cyclotomic_count(cl, i, j);
        std::cout << "\n";
    }
}

json sequence_json(const whiteman_classes& cl, const binary_sequence& seq,
                   const std::string& kind, u32 p) {
    std::string bits(seq.bits.size(), '0');
    for (size_t i = 0; i < seq.bits.size(); ++i)
        if (seq.bits[i]) bits[i] = '1';
    json runs = json::array();
    size_t i = 0;
    while (i < seq.bits.size()) {
        size_t j = i;
        while (j < seq.bits.size() && seq.bits[j] == seq.bits[i]) ++j;
        runs.push_back(j - i);
        i = j;
    }
    json out{{"n1", cl.n1},       {"n2", cl.n2},
             {"n", cl.n},         {"kind", kind},
             {"weight", seq.weight()},
             {"first_bit", seq.bits.empty() ? 0 : (seq.bits[0] ? 1 : 0)},
             {"bits", bits},      {"runs", runs}};
    if (p != 0) {
        out["p"] = p;
        out["linear_span"] = linear_span(seq, p);
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{
        "cyclic codes over GF(p) from order-6 two-prime Whiteman generalized "
        "cyclotomic sequences"};
    app.require_subcommand(1);
    const work_caps caps = parse_caps_env();

    u64 n1 = 0, n2 = 0;
    u32 p = 0;
    bool as_json = false;
    bool skip_verify = false;
    bool corrupt_tables = false;
    std::string method = "bounds";
    u64 seed = 1;
    u64 iterations = 1000;
    u64 cap_override = 0;
    std::string kind = "wgcs2";
    std::string out_path;

    auto add_pair = [&](CLI::App* sub) {
        sub->add_option("--n1", n1, "first prime")->required();
        sub->add_option("--n2", n2, "second prime")->required();
    };
    auto add_p = [&](CLI::App* sub) {
        sub->add_option("--p", p, "base field characteristic")->required();
    };

    CLI::App* construct =
        app.add_subcommand("construct", "build one code and verify it");
    add_p(construct);
    add_pair(construct);
    construct->add_flag("--skip-verify", skip_verify,
                        "skip the extension-field verification layer");
    construct->add_flag("--json", as_json, "emit the report as JSON");

    CLI::App* verify =
        app.add_subcommand("verify", "run the oracle suite for one parameter set");
    add_p(verify);
    add_pair(verify);
    verify->add_flag("--json", as_json, "emit the check table as JSON");
    verify->add_flag("--debug-corrupt-tables", corrupt_tables, "")->group("");

    CLI::App* tables = app.add_subcommand(
        "tables", "cyclotomic numbers and the quadratic partition");
    add_pair(tables);
    tables->add_flag("--json", as_json, "emit JSON");

    CLI::App* sequence =
        app.add_subcommand("sequence", "one period of the sequence");
    add_pair(sequence);
    sequence->add_option("--p", p, "also report the linear span over GF(p)");
    sequence->add_option("--kind", kind, "wgcs1 or wgcs2")
        ->check(CLI::IsMember({"wgcs1", "wgcs2"}));
    sequence->add_flag("--json", as_json, "emit JSON");

    CLI::App* distance =
        app.add_subcommand("distance", "distance bounds for one code");
    add_p(distance);
    add_pair(distance);
    distance->add_option("--method", method, "bounds, exhaustive, or search")
        ->check(CLI::IsMember({"bounds", "exhaustive", "search"}));
    distance->add_option("--seed", seed, "search seed");
    distance->add_option("--iterations", iterations, "search iterations");
    distance->add_option("--cap", cap_override,
                         "enumeration cap for --method exhaustive");
    distance->add_flag("--json", as_json, "emit JSON");

    CLI::App* exporter =
        app.add_subcommand("export", "bundled JSON report for one parameter set");
    add_p(exporter);
    add_pair(exporter);
    exporter->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (construct->parsed()) {
        build_options opt;
        opt.skip_verify = skip_verify;
        opt.m_cap = caps.m;
        code_report rep = build_code(n1, n2, p, opt);
        rep.bounds = default_construct_bounds(
            rep, std::min<u64>(u64{1} << 22, caps.exhaustive));
        if (as_json)
            std::cout << report_to_json(rep).dump(2) << "\n";
        else
            print_report_text(rep);
        return 0;
    }

    if (verify->parsed()) {
        debug_corrupt_tables(corrupt_tables);
        const std::vector<check_result> results =
            run_verification(n1, n2, p, caps.m);
        if (as_json) {
            json arr = json::array();
            for (const auto& r : results)
                arr.push_back({{"name", r.name},
                               {"status", r.status == check_status::ok ? "ok"
                                          : r.status == check_status::fail
                                              ? "fail"
                                              : "skipped"},
                               {"detail", r.detail}});
            std::cout << arr.dump(2) << "\n";
        } else {
            for (const auto& r : results) {
                std::string pad(r.name.size() < 48 ? 48 - r.name.size() : 1,
                                '.');
                std::cout << r.name << " " << pad << " "
                          << (r.status == check_status::ok       ? "ok"
                              : r.status == check_status::fail ? "FAIL"
                                                               : "skipped")
                          << "\n";
                if (r.status == check_status::skipped && !r.detail.empty())
                    std::cout << "    " << r.detail << "\n";
            }
        }
        if (const check_result* bad = first_failure(results)) {
            std::cerr << "verification failure: " << bad->name << ": "
                      << bad->detail << "\n";
            return 3;
        }
        if (!as_json) std::cout << "all checks passed\n";
        return 0;
    }

    if (tables->parsed()) {
        whiteman_classes cl = build_classes(n1, n2);
        quad_partition qp = solve_quad_partition(cl);
        if (as_json)
            std::cout << tables_json(cl, qp).dump(2) << "\n";
        else
            print_tables_text(cl, qp);
        return 0;
    }

    if (sequence->parsed()) {
        if (p != 0 && !is_prime(p)) throw invalid_params("p must be prime");
        whiteman_classes cl = build_classes(n1, n2);
        binary_sequence seq = kind == "wgcs2" ? wgcs2(cl) : wgcs1(cl);
        if (as_json) {
            std::cout << sequence_json(cl, seq, kind, p).dump(2) << "\n";
        } else {
            std::string bits(seq.bits.size(), '0');
            for (size_t i = 0; i < seq.bits.size(); ++i)
                if (seq.bits[i]) bits[i] = '1';
            std::cout << "n=" << cl.n << " kind=" << kind
                      << " weight=" << seq.weight();
            if (p != 0)
                std::cout << " p=" << p << " linear_span=" << linear_span(seq, p);
            std::cout << "\n" << bits << "\n";
        }
        return 0;
    }

    if (distance->parsed()) {
        build_options opt;
        opt.m_cap = caps.m;
        code_report rep = build_code(n1, n2, p, opt);
        distance_bounds b;
        if (method == "bounds") {
            b = bounds_only(rep);
        } else if (method == "exhaustive") {
            b = bounds_with_exhaustive(
                rep, cap_override != 0 ? cap_override : caps.exhaustive);
        } else {
            b = bounds_with_search(rep, seed, iterations);
        }
        if (as_json)
            std::cout << bounds_to_json(b).dump(2) << "\n";
        else
            std::cout << bounds_line(b) << "\n";
        return 0;
    }

    if (exporter->parsed()) {
        build_options opt;
        opt.m_cap = caps.m;
        code_report rep = build_code(n1, n2, p, opt);
        rep.bounds = default_construct_bounds(
            rep, std::min<u64>(u64{1} << 22, caps.exhaustive));
        whiteman_classes cl = build_classes(n1, n2);
        quad_partition qp = solve_quad_partition(cl);
        binary_sequence seq = wgcs2(cl);
        json bundle{{"construct", report_to_json(rep)},
                    {"tables", tables_json(cl, qp)},
                    {"sequence", sequence_json(cl, seq, "wgcs2", p)}};
        if (out_path.empty()) {
            std::cout << bundle.dump(2) << "\n";
        } else {
            std::ofstream out(out_path);
            if (!out)
                throw invalid_params("cannot open output file " + out_path);
            out << bundle.dump(2) << "\n";
        }
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const invalid_params& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 2;
    } catch (const verification_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 3;
    } catch (const cap_exceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
