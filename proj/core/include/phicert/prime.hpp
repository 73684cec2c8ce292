#pragma once

#include <cstdint>
#include <vector>

namespace phicert {

bool is_prime(std::uint64_t n);

/// A validated prime. Construction performs trial division and throws
/// NotPrimeError otherwise, so everything downstream may assume primality.
class Prime {
public:
    explicit Prime(std::uint64_t p);

    std::uint64_t value() const noexcept { return p_; }
    operator std::uint64_t() const noexcept { return p_; }

    friend bool operator==(Prime a, Prime b) noexcept { return a.p_ == b.p_; }
    friend auto operator<=>(Prime a, Prime b) noexcept { return a.p_ <=> b.p_; }

private:
    std::uint64_t p_;
};

/// All primes p <= bound, ascending.
std::vector<Prime> primes_up_to(std::uint64_t bound);

/// Distinct prime divisors of n (n >= 1), ascending.
std::vector<Prime> prime_divisors(std::uint64_t n);

/// Largest prime factor of n >= 2.
std::uint64_t largest_prime_factor(std::uint64_t n);

}  // namespace phicert
