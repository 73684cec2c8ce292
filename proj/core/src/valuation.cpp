#include "phicert/valuation.hpp"

#include <algorithm>

namespace phicert {

Valuation vp(const Integer& c, Prime p)
{
    if (c == 0)
        return Valuation::infinity();
    Integer rest;
    const Integer base(static_cast<unsigned long>(p.value()));
    const auto e = mpz_remove(rest.get_mpz_t(), c.get_mpz_t(), base.get_mpz_t());
    return Valuation(static_cast<std::int64_t>(e));
}

std::uint64_t digit_sum(std::uint64_t m, Prime p)
{
    std::uint64_t s = 0;
    for (; m > 0; m /= p.value())
        s += m % p.value();
    return s;
}

std::uint64_t vp_factorial(std::uint64_t m, Prime p)
{
    return (m - digit_sum(m, p)) / (p.value() - 1);
}

Valuation vpx(const IntPoly& f, Prime p)
{
    Valuation best = Valuation::infinity();
    for (const auto& c : f.coeffs()) {
        best = std::min(best, vp(c, p));
        if (best == Valuation(0))
            break;
    }
    return best;
}

}  // namespace phicert
