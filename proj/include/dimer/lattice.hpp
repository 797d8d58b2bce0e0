#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dimer {

enum class Boundary { free, periodic };

// Axis-aligned box of lattice sites. With periodic boundaries every axis
// wraps, which requires all sides >= 3 (shorter sides would create self or
// duplicate edges).
struct LatticeSpec {
    std::vector<int> sides;
    Boundary boundary = Boundary::free;

    int dimension() const { return static_cast<int>(sides.size()); }
    std::int64_t volume() const;
};

void validate(const LatticeSpec& spec);

std::string dims_string(const LatticeSpec& spec);  // "4x4x4"
std::string to_string(Boundary boundary);
Boundary boundary_from_string(const std::string& text);

// "2x3x4" -> sides {2,3,4}; throws std::invalid_argument on anything else.
std::vector<int> parse_dims(const std::string& text);

}  // namespace dimer
