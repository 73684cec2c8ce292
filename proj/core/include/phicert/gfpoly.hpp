#pragma once

#include "phicert/intpoly.hpp"
#include "phicert/prime.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace phicert {

/// Polynomial over Z/pZ. Residues are kept in [0, p) and trailing zeros are
/// trimmed, so equality is structural.
class GfPoly {
public:
    explicit GfPoly(Prime p) : p_(p) {}
    GfPoly(Prime p, std::vector<std::uint64_t> coeffs);

    static GfPoly x(Prime p);
    static GfPoly constant(Prime p, std::uint64_t c);

    Prime modulus() const noexcept { return p_; }
    const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    Degree degree() const noexcept;
    std::uint64_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    std::uint64_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

    friend bool operator==(const GfPoly& a, const GfPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

private:
    void trim();
    Prime p_;
    std::vector<std::uint64_t> c_;
};

/// Coefficient-wise reduction into [0, p).
GfPoly reduce(const IntPoly& f, Prime p);

GfPoly operator+(const GfPoly& a, const GfPoly& b);
GfPoly operator-(const GfPoly& a, const GfPoly& b);
GfPoly operator*(const GfPoly& a, const GfPoly& b);
GfPoly scale(const GfPoly& a, std::uint64_t s);

struct GfDivRem {
    GfPoly quotient;
    GfPoly remainder;
};

GfDivRem gf_divrem(const GfPoly& a, const GfPoly& b);
GfPoly gf_mod(const GfPoly& a, const GfPoly& b);
GfPoly gf_monic(const GfPoly& a);
GfPoly gf_derivative(const GfPoly& a);

/// Monic gcd by Euclid; gcd(a, 0) = monic(a). Throws StructuralError on a
/// modulus mismatch.
GfPoly gf_gcd(const GfPoly& a, const GfPoly& b);

/// base^e mod m.
GfPoly gf_powmod(const GfPoly& base, const Integer& e, const GfPoly& m);

/// x^(p^k) reduced modulo f, by k successive p-th powers.
GfPoly gf_powmod_frobenius(const GfPoly& f, std::uint64_t k);

/// Rabin's test. f is normalized to monic first; deg f must be >= 1.
bool is_irreducible_mod_p(const GfPoly& f);

/// Convenience: reduce then run Rabin's test. Requires the reduction to keep
/// degree >= 1.
bool is_irreducible_mod_p(const IntPoly& f, Prime p);

bool gf_is_squarefree(const GfPoly& f);

/// Distinct-degree factorization: degree -> number of irreducible factors of
/// that degree. Throws NotSquarefree when gcd(f, f') != 1.
std::map<std::size_t, std::size_t> ddf_degrees(const GfPoly& f);

}  // namespace phicert
