#include "dimer/bseries.hpp"

#include "dimer/errors.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>

namespace dimer {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kMinBuiltinDim = 2;
constexpr int kMaxBuiltinDim = 5;

// Published partial sums, one column per dimension.
constexpr const char* kBuiltin[4][6] = {
    {"0.1931", "0.2556", "0.2921", "0.2993", "0.2906", "0.2814"},
    {"0.3959", "0.4375", "0.4538", "0.4524", "0.4468", "0.4445"},
    {"0.5397", "0.5710", "0.5801", "0.5781", "0.5751", "0.5745"},
    {"0.6513", "0.6763", "0.6821", "0.6803", "0.6786", "0.6785"},
};

SeriesTable make_builtin_table() {
    SeriesTable table;
    for (int d = kMinBuiltinDim; d <= kMaxBuiltinDim; ++d) {
        BSeries series;
        series.dimension = d;
        series.label = "built-in B series, d=" + std::to_string(d);
        for (const char* value : kBuiltin[d - kMinBuiltinDim])
            series.values.push_back(Decimal::parse(value));
        table.entries.emplace(d, std::move(series));
    }
    return table;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

BSeries load_series_json(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("JSON syntax error: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("JSON root must be an object");
    if (!doc.contains("d")) throw ParseError("missing field 'd'");
    if (!doc["d"].is_number_integer() || doc["d"].get<long long>() < 1)
        throw ParseError("field 'd' must be a positive integer");
    if (!doc.contains("B")) throw ParseError("missing field 'B'");
    if (!doc["B"].is_array()) throw ParseError("field 'B' must be an array");

    BSeries series;
    series.dimension = doc["d"].get<int>();
    std::size_t index = 0;
    for (const auto& entry : doc["B"]) {
        if (!entry.is_string())
            throw ParseError("B[" + std::to_string(index) +
                             "] must be a decimal string (numbers would lose digits)");
        try {
            series.values.push_back(Decimal::parse(entry.get<std::string>()));
        } catch (const ParseError& e) {
            throw ParseError("B[" + std::to_string(index) + "]: " + e.what());
        }
        ++index;
    }
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) throw ParseError("field 'label' must be a string");
        series.label = doc["label"].get<std::string>();
    }
    if (series.values.size() < 2) throw ParseError("need at least 2 values in 'B'");
    return series;
}

BSeries load_series_csv(std::string_view text) {
    std::vector<std::string> lines;
    {
        std::string line;
        std::istringstream in{std::string(text)};
        while (std::getline(in, line)) {
            if (!trim(line).empty()) lines.push_back(line);
        }
    }
    if (lines.empty()) throw ParseError("CSV: empty input");
    if (lines.size() < 2) throw ParseError("CSV: missing data row (line 2)");
    if (lines.size() > 2) throw ParseError("CSV: expected exactly one data row, got more (line 3)");

    auto split = [](const std::string& line) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream in(line);
        while (std::getline(in, cell, ',')) cells.push_back(trim(cell));
        if (!line.empty() && line.back() == ',') cells.push_back("");
        return cells;
    };
    const auto header = split(lines[0]);
    const auto row = split(lines[1]);

    if (header.empty() || header[0] != "d")
        throw ParseError("CSV: header column 1 must be 'd' (line 1)");
    for (std::size_t i = 1; i < header.size(); ++i) {
        const std::string expected = "B" + std::to_string(i - 1);
        if (header[i] != expected)
            throw ParseError("CSV: header column " + std::to_string(i + 1) + " must be '" +
                             expected + "', got '" + header[i] + "' (line 1)");
    }
    if (row.size() != header.size())
        throw ParseError("CSV: data row has " + std::to_string(row.size()) +
                         " cells, header has " + std::to_string(header.size()) + " (line 2)");
    if (header.size() < 3) throw ParseError("CSV: need at least 2 values (line 1)");

    BSeries series;
    try {
        std::size_t used = 0;
        series.dimension = std::stoi(row[0], &used);
        if (used != row[0].size() || series.dimension < 1)
            throw std::invalid_argument(row[0]);
    } catch (const std::exception&) {
        throw ParseError("CSV: 'd' must be a positive integer, got '" + row[0] +
                         "' (line 2, column 1)");
    }
    for (std::size_t i = 1; i < row.size(); ++i) {
        try {
            series.values.push_back(Decimal::parse(row[i]));
        } catch (const ParseError& e) {
            throw ParseError("CSV: line 2, column " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return series;
}

}  // namespace

void validate(const BSeries& series) {
    if (series.dimension < 1)
        throw std::invalid_argument("series dimension must be a positive integer");
    if (series.values.size() < 2)
        throw std::invalid_argument("series needs at least 2 values");
}

const SeriesTable& builtin_table() {
    static const SeriesTable table = make_builtin_table();
    return table;
}

BSeries builtin_series(int dimension) {
    const auto& table = builtin_table();
    const auto it = table.entries.find(dimension);
    if (it == table.entries.end())
        throw std::invalid_argument("unsupported dimension d=" + std::to_string(dimension) +
                                    "; the built-in table covers d=2..5");
    return it->second;
}

BSeries load_series(std::string_view text, SeriesFormat format) {
    BSeries series =
        format == SeriesFormat::json ? load_series_json(text) : load_series_csv(text);
    validate(series);
    return series;
}

std::string serialize_series(const BSeries& series, SeriesFormat format) {
    if (format == SeriesFormat::json) {
        Json doc;
        doc["d"] = series.dimension;
        Json values = Json::array();
        for (const Decimal& v : series.values) values.push_back(v.to_string());
        doc["B"] = std::move(values);
        if (!series.label.empty()) doc["label"] = series.label;
        return doc.dump();
    }
    std::string header = "d";
    std::string row = std::to_string(series.dimension);
    for (std::size_t i = 0; i < series.values.size(); ++i) {
        header += ",B" + std::to_string(i);
        row += "," + series.values[i].to_string();
    }
    return header + "\n" + row + "\n";
}

}  // namespace dimer
