#pragma once

#include "phicert/intpoly.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace phicert {

struct FactorPower {
    IntPoly factor;
    std::size_t multiplicity = 1;

    friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// content * prod factor^multiplicity == the input. Factors are primitive,
/// irreducible over Q, have positive leading coefficient, and are sorted by
/// canonical_less.
struct Factorization {
    Integer content;
    std::vector<FactorPower> factors;

    IntPoly expand() const;
    /// True when the input was a unit multiple of one irreducible.
    bool is_irreducible() const { return factors.size() == 1 && factors.front().multiplicity == 1; }
};

/// Degree first, then coefficients compared from the leading term down.
bool canonical_less(const IntPoly& a, const IntPoly& b);

/// All rational roots, ascending, each verified by exact evaluation.
std::vector<mpq_class> rational_roots(const IntPoly& f);

inline constexpr std::size_t kKroneckerDegreeCap = 8;

/// Complete factorization over Z by Kronecker's method. Throws
/// DegreeCapExceeded if deg f > cap and StructuralError for constants.
Factorization kronecker_factor(const IntPoly& f, std::size_t cap = kKroneckerDegreeCap);

enum class SieveVerdict { ProvenIrreducible, Inconclusive };

struct SieveOutcome {
    SieveVerdict verdict = SieveVerdict::Inconclusive;
    /// Per prime: feasible[d] is true iff d is a subset sum of the mod-p
    /// irreducible factor degrees.
    std::map<std::uint64_t, std::vector<bool>> degree_sets;
    /// Intersection over all primes used.
    std::vector<bool> feasible;
};

inline constexpr std::size_t kDefaultSievePrimes = 10;

/// One-sided irreducibility test: intersects feasible factor degrees over the
/// first `prime_budget` primes not dividing lc(f) where f is squarefree.
/// Throws NotSquarefreeOverQ when gcd(f, f') is nonconstant.
SieveOutcome degree_set_sieve(const IntPoly& f, std::size_t prime_budget = kDefaultSievePrimes);

}  // namespace phicert
