#pragma once

#include "dimer/bseries.hpp"
#include "dimer/entropy.hpp"
#include "dimer/estimator.hpp"
#include "dimer/verify.hpp"

#include "json.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dimer {

// Reports keep their key order, so byte-identical inputs give byte-identical
// output apart from the wall-time value. Exact quantities travel as decimal
// strings; only wall time is a JSON number.
using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "dimer";
inline constexpr std::string_view kToolVersion = "1.0.0";

std::string fnv1a_digest(std::string_view payload);

// 12 fixed decimals, deterministic.
std::string real_string(const Real& value);

Json series_json(const BSeries& series);

Json estimate_results_json(const BSeries& series, ErrorPolicy policy,
                           const EstimateReport& report);
std::string estimate_results_csv(const BSeries& series, const EstimateReport& report);

struct CountResult {
    LatticeSpec spec;
    std::string engine;
    MatchCount count;
};

Json count_results_json(const CountResult& result);
std::string count_results_csv(const CountResult& result);

Json scan_results_json(int dimension, Boundary boundary, int max_side,
                       const std::vector<ScanEntry>& entries);
std::string scan_results_csv(const std::vector<ScanEntry>& entries);

Json verify_results_json(const std::vector<VerifyCheck>& checks);
std::string verify_results_csv(const std::vector<VerifyCheck>& checks);

Json run_report(const std::string& command_echo, const std::string& inputs_digest,
                Json results, double wall_seconds);

}  // namespace dimer
