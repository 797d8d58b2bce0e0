#include "dimer/report.hpp"

#include <iomanip>
#include <sstream>

namespace dimer {

namespace {

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string fnv1a_digest(std::string_view payload) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : payload) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    std::ostringstream out;
    out << std::hex << std::setfill('0') << std::setw(16) << hash;
    return out.str();
}

std::string real_string(const Real& value) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(12) << value;
    return out.str();
}

Json series_json(const BSeries& series) {
    Json doc;
    doc["d"] = series.dimension;
    Json values = Json::array();
    for (const Decimal& v : series.values) values.push_back(v.to_string());
    doc["B"] = std::move(values);
    if (!series.label.empty()) doc["label"] = series.label;
    return doc;
}

Json estimate_results_json(const BSeries& series, ErrorPolicy policy,
                           const EstimateReport& report) {
    const TruncationEstimate& e = report.estimate;
    Json doc;
    doc["series"] = series_json(series);
    doc["policy"] = to_string(policy);
    doc["g"] = e.chosen_index;
    doc["a"] = e.center.to_string();
    doc["b_raw"] = e.half_width_raw.to_string();
    doc["b"] = e.half_width.to_string();
    doc["policy_applied"] = to_string(e.policy_applied);
    doc["terminal_pair"] = e.terminal_pair;
    if (report.display_digits) {
        Json display;
        display["digits"] = *report.display_digits;
        display["a"] = report.display_center;
        display["b"] = report.display_half_width;
        doc["display"] = std::move(display);
    }
    return doc;
}

std::string estimate_results_csv(const BSeries& series, const EstimateReport& report) {
    const TruncationEstimate& e = report.estimate;
    std::ostringstream out;
    out << "d,g,a,b_raw,b,policy_applied,terminal_pair,display_a,display_b\n";
    out << series.dimension << ',' << e.chosen_index << ',' << e.center << ','
        << e.half_width_raw << ',' << e.half_width << ',' << to_string(e.policy_applied) << ','
        << (e.terminal_pair ? "true" : "false") << ',' << report.display_center << ','
        << report.display_half_width << '\n';
    return out.str();
}

Json count_results_json(const CountResult& result) {
    Json doc;
    doc["dims"] = dims_string(result.spec);
    doc["boundary"] = to_string(result.spec.boundary);
    doc["engine"] = result.engine;
    doc["V"] = result.spec.volume();
    doc["count"] = result.count.str();
    if (result.count >= 1)
        doc["lambda"] = real_string(lambda_from_count(result.count, result.spec.volume()));
    if (result.spec.volume() % 2 != 0) doc["note"] = "odd site count";
    return doc;
}

std::string count_results_csv(const CountResult& result) {
    std::ostringstream out;
    out << "dims,boundary,engine,V,count,lambda,note\n";
    out << dims_string(result.spec) << ',' << to_string(result.spec.boundary) << ','
        << result.engine << ',' << result.spec.volume() << ',' << result.count.str() << ',';
    if (result.count >= 1)
        out << real_string(lambda_from_count(result.count, result.spec.volume()));
    out << ',' << (result.spec.volume() % 2 != 0 ? "odd site count" : "") << '\n';
    return out.str();
}

Json scan_results_json(int dimension, Boundary boundary, int max_side,
                       const std::vector<ScanEntry>& entries) {
    Json doc;
    doc["d"] = dimension;
    doc["boundary"] = to_string(boundary);
    doc["max_side"] = max_side;
    Json records = Json::array();
    Json skipped = Json::array();
    Json errors = Json::array();
    for (const ScanEntry& entry : entries) {
        if (entry.status == ScanStatus::ok) {
            Json record;
            record["dims"] = dims_string(entry.spec);
            record["V"] = entry.sample->volume;
            record["count"] = entry.sample->count.str();
            record["lambda"] = real_string(entry.sample->lambda);
            records.push_back(std::move(record));
        } else if (entry.status == ScanStatus::skipped_odd_volume) {
            Json record;
            record["dims"] = dims_string(entry.spec);
            record["note"] = entry.note;
            skipped.push_back(std::move(record));
        } else {
            Json record;
            record["dims"] = dims_string(entry.spec);
            record["status"] = to_string(entry.status);
            record["error"] = entry.note;
            errors.push_back(std::move(record));
        }
    }
    doc["records"] = std::move(records);
    doc["skipped"] = std::move(skipped);
    doc["errors"] = std::move(errors);
    return doc;
}

std::string scan_results_csv(const std::vector<ScanEntry>& entries) {
    std::ostringstream out;
    out << "dims,boundary,status,V,count,lambda,note\n";
    for (const ScanEntry& entry : entries) {
        out << dims_string(entry.spec) << ',' << to_string(entry.spec.boundary) << ','
            << to_string(entry.status) << ',' << entry.spec.volume() << ',';
        if (entry.status == ScanStatus::ok)
            out << entry.sample->count.str() << ',' << real_string(entry.sample->lambda);
        else
            out << ',';
        out << ',' << csv_escape(entry.note) << '\n';
    }
    return out.str();
}

Json verify_results_json(const std::vector<VerifyCheck>& checks) {
    Json doc;
    Json rows = Json::array();
    int passed = 0;
    for (const VerifyCheck& check : checks) {
        Json row;
        row["name"] = check.name;
        row["pass"] = check.pass;
        row["detail"] = check.detail;
        rows.push_back(std::move(row));
        if (check.pass) ++passed;
    }
    doc["checks"] = std::move(rows);
    doc["passed"] = passed;
    doc["failed"] = static_cast<int>(checks.size()) - passed;
    return doc;
}

std::string verify_results_csv(const std::vector<VerifyCheck>& checks) {
    std::ostringstream out;
    out << "check,pass,detail\n";
    for (const VerifyCheck& check : checks)
        out << csv_escape(check.name) << ',' << (check.pass ? "true" : "false") << ','
            << csv_escape(check.detail) << '\n';
    return out.str();
}

Json run_report(const std::string& command_echo, const std::string& inputs_digest,
                Json results, double wall_seconds) {
    Json doc;
    doc["tool"] = std::string(kToolName);
    doc["version"] = std::string(kToolVersion);
    doc["command"] = command_echo;
    doc["inputs_digest"] = inputs_digest;
    doc["results"] = std::move(results);
    doc["wall_time_seconds"] = wall_seconds;
    return doc;
}

}  // namespace dimer
