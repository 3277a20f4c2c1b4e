#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubix/ball.hpp"
#include "cubix/cache.hpp"
#include "cubix/e6_weyl.hpp"
#include "cubix/errors.hpp"
#include "cubix/hermitian.hpp"
#include "cubix/io.hpp"
#include "cubix/milnor.hpp"
#include "cubix/verify.hpp"

using nlohmann::json;

namespace {

struct Options {
    std::string format = "json";
    std::string cache_dir;
    int jobs = 1;
    double tol = cubix::tolerances::kMembership;
    std::int64_t height = 1;

    std::string suite;                     // verify
    std::string kind;                      // enum
    std::string arg1, arg2;                // ball positionals
    std::string zeta = "w";                // ball apply
    std::vector<std::int64_t> exponents;   // milnor
};

json check_to_json(const cubix::Check& c) {
    json j{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

void print_text(const json& report) {
    std::cout << "command: " << report["command"].get<std::string>() << "\n";
    const auto& result = report["result"];
    if (result.contains("formatted")) {
        std::cout << result["formatted"].get<std::string>() << "\n";
    } else if (result.contains("items")) {
        for (const auto& item : result["items"]) std::cout << item << "\n";
    } else if (result.contains("suites")) {
        for (const auto& suite : result["suites"]) {
            std::cout << "suite " << suite["suite"].get<std::string>() << ":\n";
            for (const auto& c : suite["checks"]) {
                std::cout << "  " << (c["passed"].get<bool>() ? "ok   " : "FAIL ")
                          << c["name"].get<std::string>();
                if (c.contains("detail"))
                    std::cout << " (" << c["detail"].get<std::string>() << ")";
                std::cout << "\n";
            }
        }
    } else if (result.contains("error")) {
        std::cout << "error: " << result["message"].get<std::string>() << "\n";
    } else {
        std::cout << result << "\n";
    }
    if (report.contains("counts")) {
        std::cout << "counts:";
        for (const auto& [key, value] : report["counts"].items())
            std::cout << " " << key << "=" << value;
        std::cout << "\n";
    }
    std::cout << "status: " << report["status"].get<std::string>() << "\n";
}

void emit(json report, const Options& opt) {
    if (!report.contains("counts") || report["counts"].empty())
        report.erase("counts");
    if (opt.format == "text")
        print_text(report);
    else
        std::cout << report.dump(2) << "\n";
}

json base_report(const std::string& command, json inputs) {
    return json{{"command", command},
                {"inputs", std::move(inputs)},
                {"result", json::object()},
                {"counts", json::object()},
                {"status", "ok"}};
}

int run_verify(const Options& opt) {
    const auto cache = cubix::resolve_cache(opt.cache_dir);

    std::vector<std::string> suites;
    if (opt.suite == "all")
        suites = cubix::suite_names();
    else
        suites = {opt.suite};

    const bool need_orthogonal =
        std::count(suites.begin(), suites.end(), "finite") ||
        std::count(suites.begin(), suites.end(), "weyl");
    const bool need_weyl = std::count(suites.begin(), suites.end(), "weyl");

    std::optional<cubix::GroupEnumeration> O;
    std::optional<cubix::WeylGroup> W;
    if (need_orthogonal) O = cubix::cached_orthogonal_group(cache);
    if (need_weyl) W = cubix::cached_weyl_group(cache);

    cubix::VerifyContext ctx;
    ctx.orthogonal = O ? &*O : nullptr;
    ctx.weyl = W ? &*W : nullptr;
    ctx.jobs = opt.jobs;

    json report = base_report("verify", {{"suite", opt.suite}});
    json suite_list = json::array();
    bool ok = true;
    for (const auto& name : suites) {
        const cubix::SuiteResult r = cubix::run_suite(name, ctx);
        ok = ok && r.ok();
        json checks = json::array();
        for (const auto& c : r.checks) checks.push_back(check_to_json(c));
        suite_list.push_back({{"suite", r.suite}, {"checks", checks}});
        for (const auto& [key, value] : r.counts) report["counts"][key] = value;
    }
    report["result"]["suites"] = suite_list;
    report["status"] = ok ? "ok" : "fail";
    emit(report, opt);
    return ok ? 0 : 1;
}

json marking_items(const std::vector<cubix::MarkingVector>& list) {
    json items = json::array();
    for (std::size_t i = 0; i < list.size(); ++i) {
        json row{{"index", i}, {"vector", list[i]}};
        items.push_back(row);
    }
    return items;
}

json f3_row(const cubix::F3Vector& v) {
    json row = json::array();
    for (const auto& x : v) row.push_back(static_cast<int>(x.value()));
    return row;
}

int run_enum(const Options& opt) {
    json report = base_report("enum", {{"kind", opt.kind}, {"height", opt.height}});
    json items = json::array();

    if (opt.kind == "roots") {
        items = marking_items(cubix::roots());
    } else if (opt.kind == "lines") {
        items = marking_items(cubix::lines());
    } else if (opt.kind == "tritangents") {
        for (const auto& t : cubix::tritangents()) items.push_back(t);
    } else if (opt.kind == "double-sixes") {
        for (const auto& d : cubix::double_sixes()) items.push_back(d);
    } else if (opt.kind == "cusps") {
        for (const auto& v : cubix::null_points()) items.push_back(f3_row(v));
    } else if (opt.kind == "hyperplanes") {
        if (opt.height < 1)
            throw cubix::ParseError("--height must be at least 1 for hyperplanes");
        for (const auto& v : cubix::enumerate_vectors(1, opt.height, opt.jobs))
            items.push_back(cubix::to_string(v));
    }

    report["result"]["items"] = items;
    report["counts"][opt.kind] = items.size();
    emit(report, opt);
    return 0;
}

int run_ball_dist(const Options& opt) {
    const cubix::BallPoint x = cubix::make_point(cubix::parse_complex_vector(opt.arg1));
    const cubix::BallPoint y = cubix::make_point(cubix::parse_complex_vector(opt.arg2));
    const double d = cubix::dist(x, y);
    json report = base_report("ball dist", {{"x", opt.arg1}, {"y", opt.arg2}});
    report["result"] = {{"dist", d}, {"formatted", cubix::format_fixed12(d)}};
    emit(report, opt);
    return 0;
}

std::string strip_normal_prefix(const std::string& s) {
    constexpr std::string_view prefix = "normal=";
    if (s.rfind(prefix, 0) == 0) return s.substr(prefix.size());
    return s;
}

int run_ball_gap(const Options& opt) {
    const cubix::BallPoint x = cubix::make_point(cubix::parse_complex_vector(opt.arg1));
    const cubix::LatticeVector v =
        cubix::parse_lattice_vector(strip_normal_prefix(opt.arg2));
    const double g = cubix::hyperplane_gap(x, cubix::make_normal(v));
    json report = base_report("ball gap", {{"x", opt.arg1}, {"normal", opt.arg2}});
    report["result"] = {{"gap", g},
                        {"formatted", cubix::format_fixed12(g)},
                        {"on_hyperplane", g < opt.tol}};
    emit(report, opt);
    return 0;
}

int run_ball_apply(const Options& opt) {
    const cubix::BallPoint x = cubix::make_point(cubix::parse_complex_vector(opt.arg1));
    const cubix::LatticeVector mirror = cubix::parse_lattice_vector(opt.arg2);
    const cubix::Eisenstein zeta = cubix::parse_eisenstein(opt.zeta);
    const cubix::BallPoint image = cubix::apply(cubix::reflection(mirror, zeta), x);
    json report = base_report(
        "ball apply", {{"x", opt.arg1}, {"mirror", opt.arg2}, {"zeta", opt.zeta}});
    report["result"] = {{"point", cubix::to_string(image.z)},
                        {"formatted", cubix::to_string(image.z)}};
    emit(report, opt);
    return 0;
}

int run_ball_cusp_class(const Options& opt) {
    const cubix::LatticeVector n = cubix::parse_lattice_vector(opt.arg1);
    const cubix::F3Vector cls = cubix::cusp_class(n);
    std::string formatted = "(";
    for (std::size_t k = 0; k < 5; ++k) {
        if (k) formatted += ",";
        formatted += std::to_string(static_cast<int>(cls[k].value()));
    }
    formatted += ")";
    json report = base_report("ball cusp-class", {{"vector", opt.arg1}});
    report["result"] = {{"class", f3_row(cls)}, {"formatted", formatted}};
    emit(report, opt);
    return 0;
}

int run_milnor(const Options& opt) {
    const std::int64_t mu = cubix::milnor_number(opt.exponents);
    const auto eigenvalues = cubix::monodromy_eigenvalues(opt.exponents);
    const std::int64_t order = cubix::monodromy_order(opt.exponents);

    json eigs = json::array();
    for (const auto& z : eigenvalues) eigs.push_back(cubix::to_string(z));

    json report = base_report("milnor", {{"exponents", opt.exponents}});
    report["result"] = {{"mu", mu},
                        {"order", order},
                        {"eigenvalues", eigs},
                        {"formatted", "mu=" + std::to_string(mu) +
                                          " order=" + std::to_string(order)}};
    report["counts"]["eigenvalues"] = eigenvalues.size();
    emit(report, opt);
    return 0;
}

int fail_report(const std::string& command, const std::string& type,
                const std::string& message, const Options& opt) {
    json report = base_report(command, json::object());
    report["result"] = {{"error", type}, {"message", message}};
    report["status"] = "fail";
    emit(report, opt);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"exact invariants of the Eisenstein ball quotient"};
    app.require_subcommand(1);
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--cache", opt.cache_dir,
                   "Cache directory for group enumerations (CUBIX_CACHE overrides)");
    app.add_option("--jobs", opt.jobs, "Worker threads for enumerations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--tol", opt.tol, "Hyperplane membership tolerance")
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run invariant suites");
    verify->add_option("suite", opt.suite, "all|lattice|finite|weyl|ball|milnor")
        ->required()
        ->check(CLI::IsMember({"all", "lattice", "finite", "weyl", "ball", "milnor"}));

    auto* enumerate = app.add_subcommand("enum", "List canonical objects");
    enumerate
        ->add_option("kind", opt.kind,
                     "roots|lines|tritangents|double-sixes|cusps|hyperplanes")
        ->required()
        ->check(CLI::IsMember(
            {"roots", "lines", "tritangents", "double-sixes", "cusps", "hyperplanes"}));
    enumerate->add_option("--height", opt.height, "Coordinate norm bound")
        ->capture_default_str();

    auto* ball = app.add_subcommand("ball", "Metric queries on the complex ball");
    ball->require_subcommand(1);
    auto* dist = ball->add_subcommand("dist", "Distance between two points");
    dist->add_option("x", opt.arg1, "First point, e.g. [1,0,0,0,0]")->required();
    dist->add_option("y", opt.arg2, "Second point")->required();
    auto* gap = ball->add_subcommand("gap", "Distance to a mirror hyperplane");
    gap->add_option("x", opt.arg1, "Point")->required();
    gap->add_option("normal", opt.arg2, "Norm-1 lattice normal, e.g. [0,1,0,0,0]")
        ->required();
    auto* apply_cmd = ball->add_subcommand("apply", "Apply a lattice reflection");
    apply_cmd->add_option("x", opt.arg1, "Point")->required();
    apply_cmd->add_option("mirror", opt.arg2, "Reflection mirror vector")->required();
    apply_cmd->add_option("--zeta", opt.zeta, "Unit multiplier, e.g. w or -1")
        ->capture_default_str();
    auto* cusp = ball->add_subcommand("cusp-class", "Class of a primitive null vector");
    cusp->add_option("vector", opt.arg1, "Null lattice vector")->required();

    auto* milnor = app.add_subcommand("milnor", "Brieskorn monodromy invariants");
    milnor->add_option("--exponents", opt.exponents, "Comma-separated exponents")
        ->required()
        ->delimiter(',');

    // Global flags are accepted after any subcommand.
    for (CLI::App* sub : {verify, enumerate, ball, dist, gap, apply_cmd, cusp, milnor})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        if (verify->parsed()) return run_verify(opt);
        if (enumerate->parsed()) return run_enum(opt);
        if (milnor->parsed()) return run_milnor(opt);
        if (dist->parsed()) return run_ball_dist(opt);
        if (gap->parsed()) return run_ball_gap(opt);
        if (apply_cmd->parsed()) return run_ball_apply(opt);
        if (cusp->parsed()) return run_ball_cusp_class(opt);
        return 64;
    } catch (const cubix::ResourceCap& e) {
        fail_report(command, "resource_cap", e.what(), opt);
        return 2;
    } catch (const cubix::Error& e) {
        fail_report(command, "bad_input", e.what(), opt);
        return 65;
    } catch (const std::exception& e) {
        fail_report(command, "internal", e.what(), opt);
        return 1;
    }
}
