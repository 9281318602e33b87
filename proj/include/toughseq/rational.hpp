#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace toughseq {

/// Exact nonnegative rational p/q, always stored reduced with q >= 1.
///
/// Toughness values and thresholds are compared through this type only;
/// cross-multiplication runs in 128-bit arithmetic so comparisons never
/// round.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t numerator, std::int64_t denominator = 1);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    std::int64_t floor() const noexcept { return num_ / den_; }
    std::int64_t ceil() const noexcept { return (num_ + den_ - 1) / den_; }

    /// floor(value / *this) for a nonnegative integer value; *this must be > 0.
    std::int64_t floor_divide(std::int64_t value) const;

    Rational reciprocal() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "p/q" always, e.g. "3/1".
    std::string str() const;

    /// Accepts "P/Q" or "P" with nonnegative integers; floats and signs are rejected.
    static Rational parse(std::string_view text);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace toughseq
