#include "dimer/estimator.hpp"

#include <stdexcept>

namespace dimer {

std::vector<Decimal> successive_gaps(const BSeries& series) {
    validate(series);
    std::vector<Decimal> gaps;
    gaps.reserve(series.values.size() - 1);
    for (std::size_t i = 0; i + 1 < series.values.size(); ++i)
        gaps.push_back((series.values[i] - series.values[i + 1]).abs());
    return gaps;
}

TruncationEstimate optimal_truncation(const BSeries& series, ErrorPolicy policy) {
    const std::vector<Decimal> gaps = successive_gaps(series);

    std::size_t best = 0;
    for (std::size_t i = 1; i < gaps.size(); ++i)
        if (gaps[i] < gaps[best]) best = i;  // ties keep the smallest index

    TruncationEstimate result;
    result.chosen_index = best;
    result.center = (series.values[best] + series.values[best + 1]).half();
    result.half_width_raw = gaps[best];
    result.terminal_pair = best + 2 == series.values.size();

    const bool doubled = policy == ErrorPolicy::always_double ||
                         (policy == ErrorPolicy::double_if_terminal && result.terminal_pair);
    result.half_width = doubled ? result.half_width_raw.doubled() : result.half_width_raw;
    result.policy_applied = doubled ? PolicyApplied::doubled : PolicyApplied::none;
    return result;
}

EstimateReport estimate_report(const BSeries& series, ErrorPolicy policy,
                               std::optional<int> display_digits) {
    if (display_digits && *display_digits < 0)
        throw std::invalid_argument("display digits must be >= 0");

    EstimateReport report;
    report.estimate = optimal_truncation(series, policy);
    report.display_digits = display_digits;
    if (display_digits) {
        report.display_center = report.estimate.center.round_half_even(*display_digits);
        report.display_half_width = report.estimate.half_width.round_half_even(*display_digits);
    }
    return report;
}

std::string to_string(ErrorPolicy policy) {
    switch (policy) {
        case ErrorPolicy::as_is: return "as-is";
        case ErrorPolicy::double_if_terminal: return "double-if-terminal";
        case ErrorPolicy::always_double: return "always-double";
    }
    throw std::logic_error("unreachable");
}

ErrorPolicy policy_from_string(const std::string& text) {
    if (text == "as-is") return ErrorPolicy::as_is;
    if (text == "double-if-terminal") return ErrorPolicy::double_if_terminal;
    if (text == "always-double") return ErrorPolicy::always_double;
    throw std::invalid_argument("unknown policy '" + text +
                                "' (expected as-is, double-if-terminal or always-double)");
}

std::string to_string(PolicyApplied applied) {
    return applied == PolicyApplied::doubled ? "doubled" : "none";
}

}  // namespace dimer
