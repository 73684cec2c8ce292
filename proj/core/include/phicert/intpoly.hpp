#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace phicert {

using Integer = mpz_class;

/// Degree of a polynomial. An empty optional stands for the degree of the
/// zero polynomial (negative infinity); it never compares or adds as -1.
using Degree = std::optional<std::size_t>;

/// True iff deg(f) < bound, treating the zero polynomial as -infinity.
inline bool degree_below(const Degree& d, std::size_t bound) { return !d || *d < bound; }

/// Dense univariate polynomial over Z. coeffs()[i] is the coefficient of x^i;
/// trailing zeros are always trimmed, so the zero polynomial is empty.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const Integer& c);
    static IntPoly x();
    static IntPoly monomial(const Integer& c, std::size_t k);

    const std::vector<Integer>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    Degree degree() const noexcept;
    /// Coefficient of x^i; zero beyond the degree.
    Integer coeff(std::size_t i) const;
    /// Leading coefficient; zero for the zero polynomial.
    Integer leading() const;
    bool is_monic() const;
    bool is_constant() const noexcept { return c_.size() <= 1; }

    Integer evaluate(const Integer& at) const;
    IntPoly derivative() const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    IntPoly& operator*=(const Integer& s);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const Integer& s) { return a *= s; }
    friend IntPoly operator*(const Integer& s, IntPoly a) { return a *= s; }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Integer> c_;
};

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly pow(const IntPoly& base, std::size_t e);

struct DivRem {
    IntPoly quotient;
    IntPoly remainder;
};

/// Division by a monic divisor, exact over Z. Throws StructuralError if
/// `divisor` is not monic of degree >= 1.
DivRem divrem_monic(const IntPoly& f, const IntPoly& divisor);

/// Exact division over Z by an arbitrary nonzero divisor; empty if the
/// quotient is not in Z[x] or the remainder is nonzero.
std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& divisor);

/// Divides every coefficient by s; s must divide each coefficient.
IntPoly divide_exact(const IntPoly& f, const Integer& s);

/// gcd of the coefficients, nonnegative; content(0) == 0.
Integer content(const IntPoly& f);

/// f / content(f), sign chosen so the leading coefficient is positive.
IntPoly primitive_part(const IntPoly& f);

/// Primitive gcd over Z (hence gcd over Q up to a unit), positive leading
/// coefficient. gcd(0, 0) is 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// f = sum parts[i] * phi^i with deg parts[i] < deg phi.
struct PhiExpansion {
    IntPoly phi;
    std::vector<IntPoly> parts;

    /// Top index n of the expansion; parts.size() - 1. Zero for f = 0.
    std::size_t top() const noexcept { return parts.empty() ? 0 : parts.size() - 1; }
};

PhiExpansion phi_expand(const IntPoly& f, const IntPoly& phi);
IntPoly phi_assemble(const PhiExpansion& e);

/// Human-readable form accepted back by the expression parser,
/// e.g. "x^4 + 2*x^3 - x - 5".
std::string to_string(const IntPoly& f);

/// n! computed exactly.
Integer factorial(std::uint64_t n);

}  // namespace phicert
