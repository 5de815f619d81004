#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fltl {

/// Exact rational number, always kept in lowest terms with a positive denominator.
class Rational {
public:
    constexpr Rational() = default;

    Rational(std::int64_t numerator, std::int64_t denominator = 1)
    {
        if (denominator == 0) {
            throw std::invalid_argument("rational with zero denominator");
        }
        if (denominator < 0) {
            numerator = -numerator;
            denominator = -denominator;
        }
        const std::int64_t g = std::gcd(numerator, denominator);
        num_ = numerator / g;
        den_ = denominator / g;
    }

    [[nodiscard]] constexpr std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] constexpr std::int64_t den() const noexcept { return den_; }

    [[nodiscard]] bool in_unit_interval() const noexcept { return num_ >= 0 && num_ <= den_; }

    [[nodiscard]] std::string to_string() const
    {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend bool operator==(const Rational&, const Rational&) = default;

    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs)
    {
        // Denominators are positive, so cross-multiplication preserves order.
        const __int128 l = static_cast<__int128>(lhs.num_) * rhs.den_;
        const __int128 r = static_cast<__int128>(rhs.num_) * lhs.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// True iff count >= r * length, evaluated without rounding.
[[nodiscard]] inline bool meets_frequency(std::int64_t count, std::int64_t length, const Rational& r)
{
    return static_cast<__int128>(count) * r.den() >= static_cast<__int128>(r.num()) * length;
}

} // namespace fltl

template <>
struct std::hash<fltl::Rational> {
    std::size_t operator()(const fltl::Rational& r) const noexcept
    {
        return std::hash<std::int64_t>{}(r.num()) * 31u + std::hash<std::int64_t>{}(r.den());
    }
};
