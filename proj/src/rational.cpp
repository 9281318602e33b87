#include "toughseq/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace toughseq {

namespace {

Rational from_wide(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("rational: division by zero");
    __int128 a = num, b = den;
    while (b != 0) {
        const __int128 r = a % b;
        a = b;
        b = r;
    }
    num /= a;
    den /= a;
    constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
    if (num > kMax || den > kMax) throw std::overflow_error("rational: 64-bit overflow");
    return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

std::int64_t parse_nonnegative(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("rational: empty component");
    std::int64_t value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || value < 0) {
        throw std::invalid_argument("rational: malformed value '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator <= 0) throw std::invalid_argument("rational: denominator must be positive");
    if (numerator < 0) throw std::invalid_argument("rational: value must be nonnegative");
    const std::int64_t g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

std::int64_t Rational::floor_divide(std::int64_t value) const {
    if (num_ == 0) throw std::domain_error("rational: division by zero");
    if (value < 0) throw std::invalid_argument("rational: floor_divide expects a nonnegative value");
    return static_cast<std::int64_t>(static_cast<__int128>(value) * den_ / num_);
}

Rational Rational::reciprocal() const {
    if (num_ == 0) throw std::domain_error("rational: reciprocal of zero");
    return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_nonnegative(text));
    const auto num = parse_nonnegative(text.substr(0, slash));
    const auto den = parse_nonnegative(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational: zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace toughseq
