#include "dimer/decimal.hpp"

#include "dimer/errors.hpp"

#include <ostream>
#include <utility>

namespace dimer {

namespace {

BigInt pow10(int n) {
    BigInt p = 1;
    for (int i = 0; i < n; ++i) p *= 10;
    return p;
}

}  // namespace

Decimal::Decimal(bool negative, BigInt digits, int scale)
    : negative_(negative && digits != 0), digits_(std::move(digits)), scale_(scale) {}

Decimal Decimal::stripped(bool negative, BigInt digits, int scale) {
    while (scale > 0 && digits % 10 == 0) {
        digits /= 10;
        --scale;
    }
    return Decimal(negative, std::move(digits), scale);
}

Decimal Decimal::from_signed(BigInt value, int scale) {
    const bool negative = value < 0;
    if (negative) value = -value;
    return Decimal(negative, std::move(value), scale);
}

Decimal Decimal::parse(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }

    BigInt digits = 0;
    int scale = 0;
    int digit_count = 0;
    bool seen_point = false;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c >= '0' && c <= '9') {
            digits = digits * 10 + (c - '0');
            ++digit_count;
            if (seen_point) ++scale;
        } else if (c == '.') {
            if (seen_point)
                throw ParseError("not a decimal (second '.'): '" + std::string(text) + "'");
            seen_point = true;
        } else if (c == 'e' || c == 'E') {
            throw ParseError("exponent notation is not supported: '" + std::string(text) + "'");
        } else {
            throw ParseError("not a decimal: '" + std::string(text) + "'");
        }
    }
    if (digit_count == 0)
        throw ParseError("not a decimal (no digits): '" + std::string(text) + "'");
    if (seen_point && scale == 0)
        throw ParseError("not a decimal (trailing '.'): '" + std::string(text) + "'");
    return Decimal(negative, std::move(digits), scale);
}

std::string Decimal::to_string() const {
    const BigInt p = pow10(scale_);
    const BigInt whole = digits_ / p;
    std::string out;
    if (negative_) out += '-';
    out += whole.str();
    if (scale_ > 0) {
        std::string frac = BigInt(digits_ % p).str();
        out += '.';
        out.append(static_cast<std::size_t>(scale_) - frac.size(), '0');
        out += frac;
    }
    return out;
}

std::string Decimal::round_half_even(int digits) const {
    if (digits < 0) throw std::invalid_argument("display digits must be >= 0");
    BigInt q = digits_;
    int scale = scale_;
    if (scale > digits) {
        const int drop = scale - digits;
        const BigInt p = pow10(drop);
        const BigInt rem = q % p;
        q /= p;
        const BigInt half = pow10(drop - 1) * 5;
        if (rem > half || (rem == half && q % 2 != 0)) ++q;
        scale = digits;
    }
    // Render at exactly `digits` fractional digits.
    const Decimal rounded(negative_, q * pow10(digits - scale), digits);
    return rounded.to_string();
}

Decimal Decimal::abs() const { return Decimal(false, digits_, scale_); }

Decimal Decimal::half() const { return stripped(negative_, digits_ * 5, scale_ + 1); }

Decimal Decimal::doubled() const { return stripped(negative_, digits_ * 2, scale_); }

BigInt Decimal::signed_at_scale(int scale) const {
    BigInt v = digits_ * pow10(scale - scale_);
    return negative_ ? BigInt(-v) : v;
}

Decimal operator+(const Decimal& a, const Decimal& b) {
    const int scale = std::max(a.scale_, b.scale_);
    return Decimal::from_signed(a.signed_at_scale(scale) + b.signed_at_scale(scale), scale);
}

Decimal operator-(const Decimal& a, const Decimal& b) {
    const int scale = std::max(a.scale_, b.scale_);
    return Decimal::from_signed(a.signed_at_scale(scale) - b.signed_at_scale(scale), scale);
}

Decimal operator*(const Decimal& a, const Decimal& b) {
    return Decimal::stripped(a.negative_ != b.negative_, a.digits_ * b.digits_,
                             a.scale_ + b.scale_);
}

Decimal Decimal::operator-() const { return Decimal(!negative_, digits_, scale_); }

bool operator==(const Decimal& a, const Decimal& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) {
    const int scale = std::max(a.scale_, b.scale_);
    const BigInt lhs = a.signed_at_scale(scale);
    const BigInt rhs = b.signed_at_scale(scale);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Decimal& d) { return os << d.to_string(); }

}  // namespace dimer
