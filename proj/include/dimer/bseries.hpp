#pragma once

#include "dimer/decimal.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace dimer {

// Partial sums B_0..B_n of the 1/d expansion for one lattice dimension.
struct BSeries {
    int dimension = 0;
    std::vector<Decimal> values;
    std::string label;
};

// Throws std::invalid_argument unless dimension >= 1 and values.size() >= 2.
void validate(const BSeries& series);

struct SeriesTable {
    std::map<int, BSeries> entries;
};

// The built-in table: d = 2..5, six partial sums each, digit-exact.
const SeriesTable& builtin_table();
BSeries builtin_series(int dimension);

enum class SeriesFormat { json, csv };

// JSON schema: {"d": int >= 1, "B": ["0.1931", ...], "label": optional string}.
// CSV schema: header "d,B0,B1,...," followed by one data row. Values travel as
// decimal strings in both formats; exponent notation is rejected.
BSeries load_series(std::string_view text, SeriesFormat format);
std::string serialize_series(const BSeries& series, SeriesFormat format);

}  // namespace dimer
