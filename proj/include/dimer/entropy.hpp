#pragma once

#include "dimer/counting.hpp"
#include "dimer/lattice.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dimer {

// Working precision of 50 decimal digits; comparisons at 1e-9 and 12-digit
// constants sit far inside that.
using Real = boost::multiprecision::cpp_bin_float_50;

// Product formula for the free m x n grid:
//   prod_j prod_k (4cos^2(pi j/(m+1)) + 4cos^2(pi k/(n+1)))^(1/4).
// Equals the exact matching count up to the arithmetic's relative error.
Real kasteleyn_count_2d(int rows, int cols);

// The exactly known two-dimensional entropy constant, Catalan's constant
// over pi = 0.2915609040...; good to well over 12 digits.
Real lambda2_exact();

// ln(count)/volume.
Real lambda_from_count(const MatchCount& count, std::int64_t volume);

// Entropy per site of one finite lattice.
struct LambdaSample {
    LatticeSpec spec;
    MatchCount count;
    std::int64_t volume = 0;
    Real lambda;
};

// Counts with the transfer matrix and attaches ln(count)/V. Throws
// std::domain_error when no perfect matching exists.
LambdaSample lambda_finite(const LatticeSpec& spec,
                           int state_budget_bits = kDefaultStateBudgetBits);

enum class ScanStatus { ok, skipped_odd_volume, budget_exceeded, no_matching };

struct ScanEntry {
    LatticeSpec spec;
    ScanStatus status = ScanStatus::ok;
    std::optional<LambdaSample> sample;
    std::string note;
};

// Finite-size entropy samples over hypercubic boxes, ordered by volume:
// n x n for d=2, n x n x m (n <= m) for d=3, sides up to max_side. Odd-volume
// and over-budget specs come back as annotated entries instead of aborting
// the scan.
std::vector<ScanEntry> lambda_scan(int dimension, Boundary boundary, int max_side,
                                   int state_budget_bits = kDefaultStateBudgetBits);

std::string to_string(ScanStatus status);

}  // namespace dimer
