#pragma once

#include "dimer/decimal.hpp"  // BigInt
#include "dimer/lattice.hpp"

namespace dimer {

// Exact number of perfect matchings (dimer coverings).
using MatchCount = BigInt;

// Frontier states are bitmasks over the cross-section, so the cross-section
// may hold at most this many sites unless the budget is raised.
inline constexpr int kDefaultStateBudgetBits = 24;
inline constexpr std::int64_t kBruteForceMaxSites = 36;

// Exhaustive recursion over matchings. Verification oracle; refuses more
// than kBruteForceMaxSites sites.
MatchCount brute_force_count(const LatticeSpec& spec);

// Layer-by-layer dynamic programming along the last axis; the frontier state
// records which sites of the current layer are already covered by a dimer
// protruding from the previous layer. Periodic sweeps condition on the seam
// pattern crossing from the last layer back to the first. Throws BudgetError
// when the cross-section exceeds state_budget_bits.
MatchCount transfer_matrix_count(const LatticeSpec& spec,
                                 int state_budget_bits = kDefaultStateBudgetBits);

}  // namespace dimer
