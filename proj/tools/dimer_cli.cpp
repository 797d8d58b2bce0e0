// Command-line front end: estimate, count, scan, verify.
//
// Exit codes: 0 success, 1 verification failure, 2 argument error,
// 3 parse failure, 4 resource budget exceeded.

#include "dimer/counting.hpp"
#include "dimer/entropy.hpp"
#include "dimer/errors.hpp"
#include "dimer/estimator.hpp"
#include "dimer/report.hpp"
#include "dimer/verify.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace dimer;

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string join_args(int argc, char** argv) {
    std::string echo;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) echo += ' ';
        echo += argv[i];
    }
    return echo;
}

int state_budget_from_env() {
    const char* raw = std::getenv("DIMER_STATE_BUDGET");
    if (!raw) return kDefaultStateBudgetBits;
    try {
        std::size_t used = 0;
        const int bits = std::stoi(raw, &used);
        if (used != std::string(raw).size() || bits < 1 || bits > 30)
            throw std::invalid_argument(raw);
        return bits;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("DIMER_STATE_BUDGET must be an integer in "
                                                "1..30, got '") +
                                    raw + "'");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

SeriesFormat format_for_path(const std::string& path, const std::string& override_name) {
    if (override_name == "json") return SeriesFormat::json;
    if (override_name == "csv") return SeriesFormat::csv;
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return SeriesFormat::csv;
    return SeriesFormat::json;
}

void emit(const Json& report, const std::string& results_csv, const std::string& format) {
    if (format == "csv")
        std::cout << results_csv;
    else
        std::cout << report.dump(2) << '\n';
}

struct EstimateOptions {
    int dimension = 0;
    std::string input_path;
    std::string input_format;  // "", "json", "csv"
    std::string policy = "as-is";
    std::optional<int> display_digits;
    std::string format = "json";
};

int run_estimate(const EstimateOptions& opt, const std::string& echo) {
    const bool has_d = opt.dimension != 0;
    const bool has_input = !opt.input_path.empty();
    if (has_d == has_input)
        throw std::invalid_argument("give exactly one of --d or --input");

    const BSeries series =
        has_d ? builtin_series(opt.dimension)
              : load_series(read_file(opt.input_path),
                            format_for_path(opt.input_path, opt.input_format));
    const ErrorPolicy policy = policy_from_string(opt.policy);

    Stopwatch watch;
    const EstimateReport report = estimate_report(series, policy, opt.display_digits);

    const std::string digest =
        fnv1a_digest(serialize_series(series, SeriesFormat::json) + "|" + opt.policy + "|" +
                     (opt.display_digits ? std::to_string(*opt.display_digits) : "-"));
    emit(run_report(echo, digest, estimate_results_json(series, policy, report),
                    watch.seconds()),
         estimate_results_csv(series, report), opt.format);
    return 0;
}

struct CountOptions {
    std::string dims;
    std::string boundary = "free";
    std::string engine = "auto";
    std::string format = "json";
};

int run_count(const CountOptions& opt, const std::string& echo) {
    LatticeSpec spec;
    spec.sides = parse_dims(opt.dims);
    spec.boundary = boundary_from_string(opt.boundary);
    validate(spec);

    const int budget = state_budget_from_env();
    std::string engine = opt.engine;
    if (engine != "auto" && engine != "brute" && engine != "transfer")
        throw std::invalid_argument("unknown engine '" + engine +
                                    "' (expected auto, brute or transfer)");
    if (engine == "auto") engine = spec.volume() <= 20 ? "brute" : "transfer";

    Stopwatch watch;
    CountResult result;
    result.spec = spec;
    result.engine = engine;
    result.count =
        engine == "brute" ? brute_force_count(spec) : transfer_matrix_count(spec, budget);

    const std::string digest = fnv1a_digest(dims_string(spec) + "|" + opt.boundary + "|" + engine);
    emit(run_report(echo, digest, count_results_json(result), watch.seconds()),
         count_results_csv(result), opt.format);
    return 0;
}

struct ScanOptions {
    int dimension = 2;
    std::string boundary = "free";
    int max_side = 0;
    std::string format = "json";
};

int run_scan(const ScanOptions& opt, const std::string& echo) {
    const Boundary boundary = boundary_from_string(opt.boundary);

    Stopwatch watch;
    const std::vector<ScanEntry> entries =
        lambda_scan(opt.dimension, boundary, opt.max_side, state_budget_from_env());

    const std::string digest = fnv1a_digest(std::to_string(opt.dimension) + "|" + opt.boundary +
                                            "|" + std::to_string(opt.max_side));
    emit(run_report(echo, digest, scan_results_json(opt.dimension, boundary, opt.max_side, entries),
                    watch.seconds()),
         scan_results_csv(entries), opt.format);

    bool any_ok = false;
    bool any_budget = false;
    for (const ScanEntry& entry : entries) {
        any_ok = any_ok || entry.status == ScanStatus::ok;
        any_budget = any_budget || entry.status == ScanStatus::budget_exceeded;
    }
    if (!any_ok && any_budget) return 4;
    return 0;
}

int run_verify(const std::string& format, const std::string& echo) {
    Stopwatch watch;
    const std::vector<VerifyCheck> checks = run_verification(builtin_table());

    const std::string digest =
        fnv1a_digest(serialize_series(builtin_series(2), SeriesFormat::json) +
                     serialize_series(builtin_series(3), SeriesFormat::json) +
                     serialize_series(builtin_series(4), SeriesFormat::json) +
                     serialize_series(builtin_series(5), SeriesFormat::json));
    emit(run_report(echo, digest, verify_results_json(checks), watch.seconds()),
         verify_results_csv(checks), format);
    return all_passed(checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dimer constants toolbox: optimal-truncation series estimates and exact "
                 "perfect-matching counts on finite lattices"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    EstimateOptions est;
    CLI::App* estimate = app.add_subcommand(
        "estimate", "Minimal-gap truncation estimate from a B series");
    estimate->add_option("--d", est.dimension, "Use the built-in series for this dimension (2..5)");
    estimate->add_option("--input", est.input_path, "Load a series from a JSON or CSV file");
    estimate->add_option("--input-format", est.input_format, "Force input format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    estimate->add_option("--policy", est.policy,
                         "as-is, double-if-terminal or always-double (default as-is)");
    estimate->add_option("--display-digits", est.display_digits,
                         "Also report half-to-even roundings at this many decimals");
    estimate->add_option("--format", est.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    CountOptions cnt;
    CLI::App* count = app.add_subcommand("count", "Exact perfect-matching count of one box");
    count->add_option("--dims", cnt.dims, "Box sides, e.g. 8x8 or 2x3x4")->required();
    count->add_option("--boundary", cnt.boundary, "free or periodic (default free)");
    count->add_option("--engine", cnt.engine, "auto, brute or transfer (default auto)");
    count->add_option("--format", cnt.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    ScanOptions scn;
    CLI::App* scan = app.add_subcommand(
        "scan", "Finite-size entropy samples over growing boxes");
    scan->add_option("--d", scn.dimension, "Lattice dimension: 2 or 3")->required();
    scan->add_option("--boundary", scn.boundary, "free or periodic (default free)");
    scan->add_option("--max-side", scn.max_side, "Largest side to scan")->required();
    scan->add_option("--format", scn.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string verify_format = "json";
    CLI::App* verify = app.add_subcommand(
        "verify", "Reproduce the published estimates and spot-check the counters");
    verify->add_option("--format", verify_format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string echo = join_args(argc, argv);
    try {
        if (estimate->parsed()) return run_estimate(est, echo);
        if (count->parsed()) return run_count(cnt, echo);
        if (scan->parsed()) return run_scan(scn, echo);
        return run_verify(verify_format, echo);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 3;
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
