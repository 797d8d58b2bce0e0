#pragma once

#include "dimer/bseries.hpp"
#include "dimer/decimal.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dimer {

enum class ErrorPolicy {
    as_is,               // report the raw half-width
    double_if_terminal,  // double it when the chosen pair ends the series
    always_double,
};

enum class PolicyApplied { none, doubled };

// Output of the minimal-gap truncation rule. The center is the exact midpoint
// of the chosen pair; the half-width is the exact gap, possibly doubled by the
// error policy.
struct TruncationEstimate {
    std::size_t chosen_index = 0;  // g: left index of the minimal-gap pair
    Decimal center;                // (B_g + B_{g+1}) / 2
    Decimal half_width_raw;        // |B_g - B_{g+1}|
    Decimal half_width;            // after the error policy
    PolicyApplied policy_applied = PolicyApplied::none;
    bool terminal_pair = false;    // true iff g+1 is the last index
};

// [|B_0-B_1|, |B_1-B_2|, ...], length n for a series of n+1 values.
std::vector<Decimal> successive_gaps(const BSeries& series);

// Picks the successive pair with the smallest gap (ties: smallest index) and
// forms the midpoint +- half-gap estimate.
TruncationEstimate optimal_truncation(const BSeries& series, ErrorPolicy policy);

struct EstimateReport {
    TruncationEstimate estimate;
    std::optional<int> display_digits;
    // Half-to-even roundings of center/half_width; empty when no display
    // digits were requested. The exact fields above remain the contract.
    std::string display_center;
    std::string display_half_width;
};

EstimateReport estimate_report(const BSeries& series, ErrorPolicy policy,
                               std::optional<int> display_digits);

std::string to_string(ErrorPolicy policy);
ErrorPolicy policy_from_string(const std::string& text);
std::string to_string(PolicyApplied applied);

}  // namespace dimer
