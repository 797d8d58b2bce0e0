#pragma once

#include "dimer/bseries.hpp"

#include <string>
#include <vector>

namespace dimer {

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// One-shot reproduction suite: the estimator on every table column must hit
// the published (g, a, b), the chosen indices must follow the (2,2,4,4)
// pattern, the exact two-dimensional constant must land inside the published
// interval, and the counting engines must reproduce the spot-check counts.
// Takes the table as a parameter so tests can feed it corrupted data.
std::vector<VerifyCheck> run_verification(const SeriesTable& table);

bool all_passed(const std::vector<VerifyCheck>& checks);

}  // namespace dimer
