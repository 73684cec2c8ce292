#pragma once

#include "phicert/intpoly.hpp"
#include "phicert/prime.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace phicert {

/// A p-adic valuation: a nonnegative integer, or infinity (the valuation
/// of 0). Infinity is absorbing under addition and exceeds every finite value.
class Valuation {
public:
    constexpr Valuation(std::int64_t v) : v_(v) {}  // NOLINT: implicit from finite values
    static constexpr Valuation infinity() { return Valuation(); }

    constexpr bool is_infinite() const noexcept { return !v_.has_value(); }
    constexpr bool is_finite() const noexcept { return v_.has_value(); }
    /// Finite value; throws std::bad_optional_access on infinity.
    constexpr std::int64_t value() const { return v_.value(); }

    friend constexpr Valuation operator+(Valuation a, Valuation b)
    {
        if (a.is_infinite() || b.is_infinite())
            return infinity();
        return Valuation(*a.v_ + *b.v_);
    }
    friend constexpr bool operator==(Valuation a, Valuation b) = default;
    friend constexpr std::strong_ordering operator<=>(Valuation a, Valuation b)
    {
        if (a.is_infinite())
            return b.is_infinite() ? std::strong_ordering::equal : std::strong_ordering::greater;
        if (b.is_infinite())
            return std::strong_ordering::less;
        return *a.v_ <=> *b.v_;
    }

    std::string to_string() const { return v_ ? std::to_string(*v_) : std::string("inf"); }

private:
    constexpr Valuation() = default;
    std::optional<std::int64_t> v_;
};

/// Exponent of p in c; infinity for c == 0.
Valuation vp(const Integer& c, Prime p);

/// v_p(m!) by Legendre's digit formula (m - s_p(m)) / (p - 1).
std::uint64_t vp_factorial(std::uint64_t m, Prime p);

/// Base-p digit sum of m.
std::uint64_t digit_sum(std::uint64_t m, Prime p);

/// Gaussian valuation: min over coefficients of vp; infinity for f == 0.
Valuation vpx(const IntPoly& f, Prime p);

}  // namespace phicert
