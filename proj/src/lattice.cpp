#include "dimer/lattice.hpp"

#include <stdexcept>

namespace dimer {

std::int64_t LatticeSpec::volume() const {
    std::int64_t v = 1;
    for (int side : sides) v *= side;
    return v;
}

void validate(const LatticeSpec& spec) {
    if (spec.sides.empty()) throw std::invalid_argument("lattice needs at least one axis");
    for (int side : spec.sides) {
        if (side < 1) throw std::invalid_argument("lattice sides must be >= 1");
        if (spec.boundary == Boundary::periodic && side < 3)
            throw std::invalid_argument(
                "periodic boundaries need all sides >= 3 (shorter sides would wrap onto "
                "existing edges)");
    }
}

std::string dims_string(const LatticeSpec& spec) {
    std::string out;
    for (std::size_t i = 0; i < spec.sides.size(); ++i) {
        if (i) out += 'x';
        out += std::to_string(spec.sides[i]);
    }
    return out;
}

std::string to_string(Boundary boundary) {
    return boundary == Boundary::free ? "free" : "periodic";
}

Boundary boundary_from_string(const std::string& text) {
    if (text == "free") return Boundary::free;
    if (text == "periodic") return Boundary::periodic;
    throw std::invalid_argument("unknown boundary '" + text + "' (expected free or periodic)");
}

std::vector<int> parse_dims(const std::string& text) {
    std::vector<int> sides;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t next = text.find('x', pos);
        const std::string cell = text.substr(pos, next == std::string::npos ? next : next - pos);
        std::size_t used = 0;
        int side = 0;
        try {
            side = std::stoi(cell, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad dims '" + text + "': expected e.g. 8x8 or 2x2x2");
        }
        if (used != cell.size() || side < 1)
            throw std::invalid_argument("bad dims '" + text + "': sides must be positive integers");
        sides.push_back(side);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (sides.empty()) throw std::invalid_argument("bad dims: empty");
    return sides;
}

}  // namespace dimer
