#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace phicert {

/// Exact rational with gcd(|num|, den) == 1 and den >= 1. Used for edge
/// slopes, whose numerators and denominators are valuation differences and
/// index spans; comparisons are done in 128-bit so they never overflow.
class Rat {
public:
    constexpr Rat() = default;
    Rat(std::int64_t num, std::int64_t den = 1);  // NOLINT: integers convert

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    friend bool operator==(const Rat&, const Rat&) = default;
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b)
    {
        const __int128 l = static_cast<__int128>(a.num_) * b.den_;
        const __int128 r = static_cast<__int128>(b.num_) * a.den_;
        return l <=> r;
    }

    /// "num/den", always with an explicit denominator.
    std::string to_string() const;
    /// Inverse of to_string; also accepts a bare integer.
    static Rat parse(const std::string& s);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace phicert
