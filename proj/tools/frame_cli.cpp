#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "framekit/io.hpp"
#include "framekit/suite.hpp"

using namespace framekit;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitClaimFail = 1;
constexpr int kExitParse = 2;

void print_vector(std::ostream& os, const Vec& v, Field field) {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        if (field == Field::Real)
            os << v[i].real();
        else
            os << v[i].real() << (v[i].imag() < 0 ? "" : "+") << v[i].imag() << 'i';
    }
    os << ']';
}

Field parse_field(const std::string& name) {
    if (name == "real") return Field::Real;
    if (name == "complex") return Field::Complex;
    throw CLI::ValidationError("--field", "expected real|complex");
}

int run_construct(const FrameRecipe& recipe, const std::string& out) {
    Frame f = build_frame(recipe);
    write_frame(out, f, recipe);
    std::cout << "wrote " << out << ": " << f.label << " (M=" << f.dim << ", N=" << f.count()
              << ", " << field_name(f.field) << ")\n";
    return kExitPass;
}

int run_analyze(const std::string& path) {
    Frame f = read_frame(path).frame;
    SpectralSummary s = classify(f);
    std::cout << "label: " << (f.label.empty() ? "(none)" : f.label) << '\n'
              << "M=" << f.dim << " N=" << f.count() << " field=" << field_name(f.field) << '\n';
    if (!s.is_frame) {
        std::cout << "A=0 (not a frame)\n";
        return kExitPass;
    }
    std::cout << std::setprecision(12) << "A=" << s.lower_bound << " B=" << s.upper_bound;
    if (s.is_tight) std::cout << " tight";
    if (s.is_parseval) std::cout << " parseval";
    if (s.is_unit_norm) std::cout << " unit-norm";
    if (s.is_equiangular) std::cout << " equiangular";
    if (s.coherence) std::cout << " d=" << *s.coherence;
    std::cout << '\n';
    return kExitPass;
}

int run_check(const std::string& path, SuiteConfig cfg, const std::string& format,
              std::string out) {
    FrameFile ff = read_frame(path);
    auto reports = run_suite(ff.frame, cfg);

    if (out.empty()) out = format == "csv" ? "report.csv" : "report.json";
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot open report path '" + out + "'");
    if (format == "csv")
        os << suite_report_csv(reports);
    else
        os << suite_report_json(ff.frame, cfg, reports).dump(2) << '\n';

    std::cout << std::left << std::setw(28) << "claim" << std::setw(22) << "status"
              << "margin\n";
    for (const TheoremReport& r : reports) {
        std::cout << std::left << std::setw(28) << r.claim_id << std::setw(22) << report_status(r)
                  << std::setprecision(6) << r.margin;
        if (!r.note.empty()) std::cout << "  (" << r.note << ')';
        std::cout << '\n';
    }
    std::size_t failures = 0;
    for (const TheoremReport& r : reports) failures += r.counts_as_failure();
    std::cout << reports.size() << " claims, " << failures << " failed; report: " << out << '\n';
    return failures == 0 ? kExitPass : kExitClaimFail;
}

int run_optimize(const std::string& path, const std::string& objective,
                 const std::string& direction, const SearchConfig& sc,
                 const std::string& witness_out) {
    Frame f = read_frame(path).frame;
    Direction dir = direction == "max" ? Direction::Max : Direction::Min;
    std::cout << std::setprecision(12);

    SearchResult result;
    if (objective == "product-sum") {
        result = extremize_product_sum(f, dir, sc);
        std::cout << "product-sum " << direction << " = " << result.value
                  << (result.certified ? " (certified by annihilating pair)" : "") << '\n';
        BoundLedger led = product_sum_bounds(f);
        std::cout << "bounds:\n  hoelder_upper = " << *led.hoelder_upper
                  << "  margin = " << *led.hoelder_upper - result.value << '\n';
        if (led.count_upper)
            std::cout << "  count_bound = " << *led.count_upper
                      << "  margin = " << *led.count_upper - result.value
                      << "  (constrained-pair bound, reported only)\n";
        if (led.untf_lower_coeff)
            std::cout << "  untf_lower = (" << *led.untf_lower_coeff << ") * |<x,y>|\n";
    } else if (objective == "distance-sum") {
        auto [lo, hi] = search_distance_extrema(f, sc);
        result = dir == Direction::Min ? lo : hi;
        auto [exact_lo, exact_hi] = distance_sum_extrema(f);
        double exact = dir == Direction::Min ? exact_lo : exact_hi;
        std::cout << "distance-sum " << direction << " = " << result.value
                  << "\nclosed form = " << exact << "  gap = " << std::abs(result.value - exact)
                  << '\n';
    } else {
        throw CLI::ValidationError("--objective", "expected product-sum|distance-sum");
    }

    std::cout << "x = ";
    print_vector(std::cout, result.witness_x, f.field);
    std::cout << '\n';
    if (result.witness_y) {
        std::cout << "y = ";
        print_vector(std::cout, *result.witness_y, f.field);
        std::cout << '\n';
    }

    if (!witness_out.empty()) {
        nlohmann::json w{{"objective", objective}, {"direction", direction}, {"value", result.value}};
        auto vec_json = [&](const Vec& v) {
            nlohmann::json row = nlohmann::json::array();
            for (const cd& z : v)
                if (f.field == Field::Real)
                    row.push_back(z.real());
                else
                    row.push_back(nlohmann::json::array({z.real(), z.imag()}));
            return row;
        };
        w["x"] = vec_json(result.witness_x);
        if (result.witness_y) w["y"] = vec_json(*result.witness_y);
        std::ofstream os(witness_out);
        if (!os) throw std::runtime_error("cannot open witness path '" + witness_out + "'");
        os << w.dump(2) << '\n';
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-frame analysis toolkit"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a frame and write it to a file");
    FrameRecipe recipe;
    std::string field_name_arg = "real";
    std::string construct_out = "frame.json";
    construct->add_option("--kind", recipe.kind, "onb-copies|simplex|harmonic|etf-catalog|random")
        ->required();
    construct->add_option("--dim", recipe.dim, "ambient dimension M")->required();
    construct->add_option("--count", recipe.count, "number of vectors N");
    construct->add_option("--seed", recipe.seed, "seed (random kind)");
    construct->add_flag("--drop-dc", recipe.drop_dc, "harmonic: drop the constant character row");
    construct->add_option("--field", field_name_arg, "real|complex");
    construct->add_option("-o,--out", construct_out, "output path");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "print the spectral summary of a frame file");
    std::string analyze_path;
    analyze->add_option("frame", analyze_path, "frame file")->required();

    // check / report
    SuiteConfig suite_cfg;
    std::string check_path, check_format = "json", check_out;
    for (const char* name : {"check", "report"}) {
        auto* cmd = app.add_subcommand(
            name, std::string(name) == "check"
                      ? "run the theorem suite against a frame file"
                      : "emit the theorem-suite report without the summary table");
        cmd->add_option("frame", check_path, "frame file")->required();
        cmd->add_option("--suite", suite_cfg.suite, "all|sec3|sec4|sec5|sec6");
        cmd->add_option("--samples", suite_cfg.samples, "random probes per claim");
        cmd->add_option("--seed", suite_cfg.seed, "master seed");
        cmd->add_option("--starts", suite_cfg.starts, "multistart budget");
        cmd->add_option("--format", check_format, "json|csv");
        cmd->add_option("-o,--out", check_out, "report path");
    }

    // optimize
    auto* optimize = app.add_subcommand("optimize", "extremize an objective over unit vectors");
    SearchConfig search_cfg;
    std::string opt_path, opt_objective = "product-sum", opt_direction = "min", opt_witness;
    optimize->add_option("frame", opt_path, "frame file")->required();
    optimize->add_option("--objective", opt_objective, "product-sum|distance-sum");
    optimize->add_option("--direction", opt_direction, "min|max");
    optimize->add_option("--starts", search_cfg.starts, "multistart budget");
    optimize->add_option("--seed", search_cfg.seed, "master seed");
    optimize->add_option("--witness-out", opt_witness, "write the witness vectors as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitParse;
    }

    try {
        if (construct->parsed()) {
            recipe.field = parse_field(field_name_arg);
            return run_construct(recipe, construct_out);
        }
        if (analyze->parsed()) return run_analyze(analyze_path);
        if (app.get_subcommand("check")->parsed() || app.get_subcommand("report")->parsed()) {
            if (check_format != "json" && check_format != "csv")
                throw CLI::ValidationError("--format", "expected json|csv");
            if (suite_cfg.suite != "all" && !suite_cfg.suite.starts_with("sec"))
                throw CLI::ValidationError("--suite", "expected all|sec3|sec4|sec5|sec6");
            return run_check(check_path, suite_cfg, check_format, check_out);
        }
        if (optimize->parsed()) {
            if (opt_direction != "min" && opt_direction != "max")
                throw CLI::ValidationError("--direction", "expected min|max");
            return run_optimize(opt_path, opt_objective, opt_direction, search_cfg, opt_witness);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitClaimFail;
    }
    return kExitPass;
}
