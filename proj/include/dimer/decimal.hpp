#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dimer {

using BigInt = boost::multiprecision::cpp_int;

// Exact decimal number: sign * digits * 10^-scale.
//
// Parsing keeps the fractional digit count, so "0.2500" stays at scale 4 and
// serializes back unchanged. Sums and differences carry the wider of the two
// input scales; products, halving and doubling strip trailing zeros. Halving
// is exact (multiply the digits by 5, move the point). There is no general
// division and no binary floating point anywhere in here.
class Decimal {
  public:
    Decimal() = default;

    // Accepts [+-]?digits[.digits] and [+-]?.digits; rejects exponent
    // notation, empty digit runs and stray characters.
    static Decimal parse(std::string_view text);

    std::string to_string() const;

    // Value rounded half-to-even to `digits` fractional digits, rendered with
    // exactly that many fractional digits. Display only; never feeds back
    // into computation.
    std::string round_half_even(int digits) const;

    Decimal abs() const;
    Decimal half() const;     // exact division by 2
    Decimal doubled() const;  // exact multiplication by 2

    bool is_zero() const { return digits_ == 0; }
    bool is_negative() const { return negative_; }
    int scale() const { return scale_; }

    friend Decimal operator+(const Decimal& a, const Decimal& b);
    friend Decimal operator-(const Decimal& a, const Decimal& b);
    friend Decimal operator*(const Decimal& a, const Decimal& b);
    Decimal operator-() const;

    // Comparisons are numeric: 0.25 == 0.2500.
    friend bool operator==(const Decimal& a, const Decimal& b);
    friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b);

  private:
    Decimal(bool negative, BigInt digits, int scale);
    static Decimal stripped(bool negative, BigInt digits, int scale);
    static Decimal from_signed(BigInt value, int scale);
    BigInt signed_at_scale(int scale) const;

    bool negative_ = false;
    BigInt digits_;  // magnitude
    int scale_ = 0;  // fractional digit count
};

std::ostream& operator<<(std::ostream& os, const Decimal& d);

}  // namespace dimer
