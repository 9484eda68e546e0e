#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>

#include "wpl/graded_ring.hpp"
#include "wpl/grading.hpp"
#include "wpl/hom_engine.hpp"
#include "wpl/k0.hpp"
#include "wpl/report_json.hpp"
#include "wpl/stable.hpp"
#include "wpl/tilting.hpp"

namespace {

using nlohmann::json;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json hom_json(const std::string& from, const std::string& to, const wpl::HomResult& r,
              bool with_trace) {
    json j{{"from", from}, {"to", to}};
    if (r.value) j["dim"] = *r.value;
    else j["unknown"] = true;
    if (with_trace) j["trace"] = r.trace;
    return j;
}

void print_text_report(const wpl::TiltingReport& report) {
    std::cout << "object   : " << to_string(report.kind) << "\n";
    std::cout << "summands :";
    for (const auto& s : report.summands) std::cout << " " << to_string(s);
    std::cout << "\n";
    std::cout << "window   : |n| <= " << report.window << "\n";
    std::cout << "verdict  : " << report.verdict << "\n";
    std::cout << "endo table at n = 0 (rows map to columns):\n";
    for (const auto& row : report.endo) {
        std::cout << "   ";
        for (long long v : row) std::cout << " " << v;
        std::cout << "\n";
    }
    std::cout << "endo total: " << report.endo_total() << "\n";
    std::cout << "relations : " << report.relation_note << "\n";
    long long held = 0;
    for (const auto& c : report.certificates)
        if (c.holds) ++held;
    std::cout << "off-window certificates: " << held << "/" << report.certificates.size()
              << " hold\n";
    if (!report.problems.empty()) {
        std::cout << "problems:\n";
        for (const auto& p : report.problems) std::cout << "  - " << p << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "wplcalc: exact slope, lattice, and Hom-dimension computations for vector bundles on "
        "the weighted projective line of weight type (2,2,2,2)"};
    app.require_subcommand(1);
    int exit_code = 0;

    // dim-s
    std::string dims_element;
    auto* dims = app.add_subcommand("dim-s", "dimension of a homogeneous component of the "
                                             "coordinate ring");
    dims->add_option("element", dims_element, "graded element, e.g. 'x1+x2-c'")->required();
    dims->callback([&] {
        wpl::GradedElement x = wpl::parse_element(dims_element);
        emit(json{{"element", to_string(x)}, {"dim", wpl::dim_s(x)}});
    });

    // k0-reduce
    std::string reduce_element;
    auto* reduce = app.add_subcommand("k0-reduce", "reduce a line-bundle class to the lattice "
                                                   "basis");
    reduce->add_option("element", reduce_element, "graded element")->required();
    reduce->callback([&] {
        wpl::GradedElement x = wpl::parse_element(reduce_element);
        wpl::K0Class cls = wpl::line_bundle_class(x);
        emit(json{{"element", to_string(x)},
                  {"class", to_string(cls)},
                  {"coefficients", cls.coeff},
                  {"rank", wpl::rank(cls)},
                  {"degree", wpl::degree(cls)}});
    });

    // euler
    std::string euler_a, euler_b;
    auto* euler = app.add_subcommand("euler", "Euler form of two lattice classes");
    euler->add_option("a", euler_a, "class expression, e.g. '[O(x1)]-[O(0)]'")->required();
    euler->add_option("b", euler_b, "class expression")->required();
    euler->callback([&] {
        wpl::K0Class a = wpl::parse_class_expr(euler_a);
        wpl::K0Class b = wpl::parse_class_expr(euler_b);
        emit(json{{"a", to_string(a)}, {"b", to_string(b)}, {"euler", wpl::euler_form(a, b)}});
    });

    // shift-slope
    std::string shift_value;
    long long shift_n = 0;
    auto* shift = app.add_subcommand("shift-slope", "slope after n applications of the shift");
    shift->add_option("slope", shift_value, "rational slope, e.g. '1/2' or '-3'")->required();
    shift->add_option("n", shift_n, "shift count (negative shifts down)")->required();
    shift->callback([&] {
        wpl::Slope mu = wpl::Slope::finite(wpl::parse_rational(shift_value));
        wpl::Slope out = wpl::shift_slope_iter(mu, shift_n);
        emit(json{{"slope", to_string(mu)}, {"n", shift_n}, {"result", to_string(out)}});
    });

    // slope-normalize
    std::string norm_value;
    auto* norm = app.add_subcommand("slope-normalize",
                                    "shift count landing the slope in [0, 4/3)");
    norm->add_option("slope", norm_value, "rational slope")->required();
    norm->callback([&] {
        wpl::Slope mu = wpl::Slope::finite(wpl::parse_rational(norm_value));
        wpl::SlopeNormalization out = wpl::slope_normalize(mu);
        emit(json{{"slope", to_string(mu)},
                  {"n1", out.n1},
                  {"normalized", to_string(out.normalized)}});
    });

    // hom
    std::string hom_x, hom_y;
    bool hom_trace = false;
    auto* hom = app.add_subcommand("hom", "Hom dimension between catalogued bundles");
    hom->add_option("from", hom_x, "bundle, e.g. 'O(x1)', 'E(0)', 'E<0;2>', 'Q(0)', 'F(1,0)'")
        ->required();
    hom->add_option("to", hom_y, "bundle")->required();
    hom->add_flag("--trace", hom_trace, "include the rule trace");
    hom->callback([&] {
        wpl::BundleExpr x = wpl::parse_bundle(hom_x);
        wpl::BundleExpr y = wpl::parse_bundle(hom_y);
        wpl::HomEngine engine;
        wpl::HomResult r = engine.hom(x, y);
        emit(hom_json(to_string(x), to_string(y), r, hom_trace));
        if (!r.closed()) exit_code = 2;
    });

    // stable-hom
    std::string stable_x, stable_y;
    bool stable_trace = false;
    auto* shom = app.add_subcommand("stable-hom",
                                    "Hom dimension in the stable category, shifts allowed");
    shom->add_option("from", stable_x, "stable object, e.g. 'E(0)' or 'F(1,0)[1]'")->required();
    shom->add_option("to", stable_y, "stable object")->required();
    shom->add_flag("--trace", stable_trace, "include the rule trace");
    shom->callback([&] {
        wpl::StableObject x = wpl::parse_stable_object(stable_x);
        wpl::StableObject y = wpl::parse_stable_object(stable_y);
        wpl::HomEngine engine;
        wpl::HomResult r = engine.stable_hom(x, y);
        emit(hom_json(to_string(x), to_string(y), r, stable_trace));
        if (!r.closed()) exit_code = 2;
    });

    // verify-tilting
    std::string object_name = "T";
    long long window = 5;
    std::string format = "json";
    bool strict = false;
    auto* verify = app.add_subcommand("verify-tilting",
                                      "check the tilting Hom-vanishing pattern over a shift "
                                      "window");
    verify->add_option("--object", object_name, "T or Tprime")
        ->check(CLI::IsMember({"T", "Tprime"}));
    verify->add_option("--window", window, "shift window (default 5, minimum 2)");
    verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    verify->add_flag("--strict", strict, "echo problems to stderr");
    verify->callback([&] {
        wpl::TiltingKind kind =
            (object_name == "T") ? wpl::TiltingKind::T : wpl::TiltingKind::Tprime;
        wpl::TiltingReport report = wpl::verify_tilting(kind, window);
        if (format == "text") print_text_report(report);
        else emit(json(report));
        if (strict)
            for (const auto& p : report.problems) std::cerr << "problem: " << p << "\n";
        if (!report.verified()) exit_code = 1;
    });

    // rank-two-scan
    long long twist_window = 3;
    auto* scan = app.add_subcommand("rank-two-scan",
                                    "check dim uHom <= 1 over the rank-two catalogue");
    scan->add_option("--twist-window", twist_window, "bound on |delta| and the c-coefficient of "
                                                     "base twists (default 3)");
    scan->callback([&] {
        wpl::ScanReport report = wpl::rank_two_scan(twist_window);
        emit(json(report));
        if (!report.violations.empty()) exit_code = 1;
    });

    try {
        CLI11_PARSE(app, argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}
