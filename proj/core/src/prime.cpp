#include "phicert/prime.hpp"

#include "phicert/error.hpp"

#include <string>

namespace phicert {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

Prime::Prime(std::uint64_t p) : p_(p)
{
    if (!is_prime(p))
        throw NotPrimeError(std::to_string(p) + " is not prime");
}

std::vector<Prime> primes_up_to(std::uint64_t bound)
{
    std::vector<Prime> out;
    if (bound < 2)
        return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i])
            continue;
        out.emplace_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i)
            composite[j] = true;
    }
    return out;
}

std::vector<Prime> prime_divisors(std::uint64_t n)
{
    if (n == 0)
        throw StructuralError("prime_divisors: n must be positive");
    std::vector<Prime> out;
    for (std::uint64_t d = 2; d <= n / d; ++d) {
        if (n % d != 0)
            continue;
        out.emplace_back(d);
        while (n % d == 0)
            n /= d;
    }
    if (n > 1)
        out.emplace_back(n);
    return out;
}

std::uint64_t largest_prime_factor(std::uint64_t n)
{
    if (n < 2)
        throw StructuralError("largest_prime_factor: n must be at least 2");
    return prime_divisors(n).back().value();
}

}  // namespace phicert
