#pragma once

#include <stdexcept>
#include <string>

namespace phicert {

/// Malformed input to an operation (non-monic φ, zero polynomial where
/// forbidden, out-of-range parameters). Distinct from a criterion whose
/// hypotheses merely fail to hold.
class StructuralError : public std::invalid_argument {
public:
    explicit StructuralError(const std::string& what) : std::invalid_argument(what) {}
};

class NotPrimeError : public StructuralError {
public:
    explicit NotPrimeError(const std::string& what) : StructuralError(what) {}
};

/// Raised by distinct-degree factorization when gcd(f, f') != 1 mod p.
class NotSquarefree : public std::domain_error {
public:
    explicit NotSquarefree(const std::string& what) : std::domain_error(what) {}
};

/// Raised by the degree-set sieve when gcd(f, f') over Q is nonconstant.
class NotSquarefreeOverQ : public std::domain_error {
public:
    explicit NotSquarefreeOverQ(const std::string& what) : std::domain_error(what) {}
};

class DegreeCapExceeded : public std::length_error {
public:
    explicit DegreeCapExceeded(const std::string& what) : std::length_error(what) {}
};

}  // namespace phicert
