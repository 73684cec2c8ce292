#include "phicert/oracle.hpp"

#include "phicert/error.hpp"
#include "phicert/gfpoly.hpp"
#include "phicert/prime.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

namespace phicert {

namespace {

// Positive divisors of n > 0, ascending.
std::vector<Integer> positive_divisors(Integer n)
{
    std::vector<std::pair<Integer, unsigned>> primes;
    auto is_probable_prime = [](const Integer& v) { return v > 1 && mpz_probab_prime_p(v.get_mpz_t(), 30) != 0; };
    bool rest_prime = is_probable_prime(n);
    for (unsigned long d = 2; !rest_prime && Integer(d) * d <= n; ++d) {
        if (!mpz_divisible_ui_p(n.get_mpz_t(), d))
            continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
            ++e;
        }
        primes.emplace_back(Integer(d), e);
        rest_prime = is_probable_prime(n);
    }
    if (n > 1)
        primes.emplace_back(n, 1);

    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : primes) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

struct Node {
    Integer at;
    Integer value;
    std::vector<Integer> divisors;
};

// Searches for a factor of g of exact degree d using Kronecker's method with
// Newton interpolation; divided differences of an integer polynomial over
// integer nodes are integers, which prunes the divisor enumeration.
std::optional<IntPoly> find_factor_of_degree(const IntPoly& g, std::size_t d)
{
    std::vector<Node> pool;
    for (long a = 0; pool.size() < 2 * d + 6; a = a > 0 ? -a : -a + 1) {
        Integer v = g.evaluate(Integer(a));
        if (v == 0)
            continue;  // only possible if g has a linear factor, handled earlier
        pool.push_back({Integer(a), v, positive_divisors(abs(v))});
    }
    std::stable_sort(pool.begin(), pool.end(),
                     [](const Node& l, const Node& r) { return l.divisors.size() < r.divisors.size(); });
    const std::vector<Node> nodes(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(d + 1));
    const std::vector<Node> checks(pool.begin() + static_cast<std::ptrdiff_t>(d + 1), pool.end());
    const Integer lead = g.leading();

    std::vector<Integer> newton(d + 1);
    std::optional<IntPoly> found;

    auto newton_eval = [&](std::size_t upto, const Integer& at) {
        // value at `at` of the Newton form using coefficients [0, upto)
        Integer acc = 0;
        for (std::size_t j = upto; j-- > 0;)
            acc = acc * (at - nodes[j].at) + newton[j];
        return acc;
    };

    std::function<bool(std::size_t)> dfs = [&](std::size_t j) -> bool {
        Integer span = 1;
        for (std::size_t i = 0; i < j; ++i)
            span *= nodes[j].at - nodes[i].at;
        const Integer base = newton_eval(j, nodes[j].at);
        for (const auto& dv : nodes[j].divisors) {
            for (int sign : {1, -1}) {
                if (j == 0 && sign < 0)
                    continue;  // fix the overall sign of the candidate
                const Integer target = sign > 0 ? dv : Integer(-dv);
                const Integer diff = target - base;
                if (!mpz_divisible_p(diff.get_mpz_t(), span.get_mpz_t()))
                    continue;
                newton[j] = diff / span;
                if (j < d) {
                    if (dfs(j + 1))
                        return true;
                    continue;
                }
                if (newton[d] == 0 || !mpz_divisible_p(lead.get_mpz_t(), newton[d].get_mpz_t()))
                    continue;
                IntPoly h = IntPoly::constant(newton[d]);
                for (std::size_t i = d; i-- > 0;)
                    h = h * IntPoly{0, 1} - h * IntPoly::constant(nodes[i].at) + IntPoly::constant(newton[i]);
                h = primitive_part(h);
                bool plausible = true;
                for (const auto& c : checks) {
                    const Integer hv = h.evaluate(c.at);
                    if (hv == 0 || !mpz_divisible_p(c.value.get_mpz_t(), hv.get_mpz_t())) {
                        plausible = false;
                        break;
                    }
                }
                if (plausible && divide_exact(g, h)) {
                    found = std::move(h);
                    return true;
                }
            }
        }
        return false;
    };
    dfs(0);
    return found;
}

// Appends irreducible factors of primitive g (no rational roots), each found
// at the smallest degree first, so every factor found is irreducible.
void split(IntPoly g, std::size_t dmin, std::vector<IntPoly>& out)
{
    while (*g.degree() > 0) {
        const std::size_t deg = *g.degree();
        std::optional<IntPoly> h;
        for (std::size_t d = dmin; 2 * d <= deg && !h; ++d) {
            h = find_factor_of_degree(g, d);
            if (h)
                dmin = d;
        }
        if (!h) {
            out.push_back(g);
            return;
        }
        g = *divide_exact(g, *h);
        out.push_back(std::move(*h));
    }
}

}  // namespace

bool canonical_less(const IntPoly& a, const IntPoly& b)
{
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    if (ac.size() != bc.size())
        return ac.size() < bc.size();
    for (std::size_t k = ac.size(); k-- > 0;)
        if (ac[k] != bc[k])
            return ac[k] < bc[k];
    return false;
}

IntPoly Factorization::expand() const
{
    IntPoly r = IntPoly::constant(content);
    for (const auto& fp : factors)
        r *= pow(fp.factor, fp.multiplicity);
    return r;
}

std::vector<mpq_class> rational_roots(const IntPoly& f)
{
    if (f.is_zero())
        throw StructuralError("rational_roots: zero polynomial");
    std::vector<mpq_class> roots;
    std::size_t low = 0;
    while (f.coeff(low) == 0)
        ++low;
    if (low > 0)
        roots.emplace_back(0);
    if (low == f.coeffs().size() - 1)
        return roots;

    const auto& c = f.coeffs();
    const std::size_t deg = c.size() - 1;
    const auto nums = positive_divisors(abs(c[low]));
    const auto dens = positive_divisors(abs(c.back()));
    for (const auto& q : dens) {
        std::vector<Integer> qpow(deg + 1, Integer(1));
        for (std::size_t i = 1; i <= deg; ++i)
            qpow[i] = qpow[i - 1] * q;
        for (const auto& pnum : nums) {
            Integer g;
            mpz_gcd(g.get_mpz_t(), pnum.get_mpz_t(), q.get_mpz_t());
            if (g != 1)
                continue;
            for (int sign : {1, -1}) {
                const Integer num = sign > 0 ? pnum : Integer(-pnum);
                // q^deg f(num/q) == sum c_i num^i q^(deg - i)
                Integer check = 0;
                Integer np = 1;
                for (std::size_t i = 0; i <= deg; ++i) {
                    check += c[i] * np * qpow[deg - i];
                    np *= num;
                }
                if (check == 0)
                    roots.emplace_back(num, q);
            }
        }
    }
    for (auto& r : roots)
        r.canonicalize();
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

Factorization kronecker_factor(const IntPoly& f, std::size_t cap)
{
    if (f.is_zero() || f.is_constant())
        throw StructuralError("kronecker_factor: need a polynomial of degree >= 1");
    if (*f.degree() > cap)
        throw DegreeCapExceeded("kronecker_factor: degree " + std::to_string(*f.degree()) + " exceeds cap " +
                                std::to_string(cap));

    Factorization out;
    out.content = content(f);
    if (f.leading() < 0)
        out.content = -out.content;
    IntPoly g = divide_exact(f, out.content);

    std::vector<IntPoly> irreducibles;
    for (const auto& r : rational_roots(g)) {
        const IntPoly linear(std::vector<Integer>{Integer(-r.get_num()), Integer(r.get_den())});
        while (auto q = divide_exact(g, linear)) {
            irreducibles.push_back(linear);
            g = std::move(*q);
        }
    }
    split(g, 2, irreducibles);

    std::sort(irreducibles.begin(), irreducibles.end(), canonical_less);
    for (auto& h : irreducibles) {
        if (!out.factors.empty() && out.factors.back().factor == h)
            ++out.factors.back().multiplicity;
        else
            out.factors.push_back({std::move(h), 1});
    }
    return out;
}

SieveOutcome degree_set_sieve(const IntPoly& f, std::size_t prime_budget)
{
    if (f.is_zero() || f.is_constant())
        throw StructuralError("degree_set_sieve: need a polynomial of degree >= 1");
    if (!gcd(f, f.derivative()).is_constant())
        throw NotSquarefreeOverQ("degree_set_sieve: " + to_string(f) + " is not squarefree");

    const std::size_t deg = *f.degree();
    SieveOutcome out;
    out.feasible.assign(deg + 1, true);
    auto only_trivial = [&] {
        for (std::size_t d = 1; d < deg; ++d)
            if (out.feasible[d])
                return false;
        return true;
    };
    if (only_trivial()) {
        out.verdict = SieveVerdict::ProvenIrreducible;
        return out;
    }

    std::size_t used = 0;
    for (std::uint64_t p = 2; used < prime_budget && p < 1'000'000; ++p) {
        if (!is_prime(p))
            continue;
        const Prime prime(p);
        if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p))
            continue;
        const GfPoly fbar = reduce(f, prime);
        if (!gf_is_squarefree(fbar))
            continue;
        std::vector<bool> sums(deg + 1, false);
        sums[0] = true;
        for (const auto& [d, count] : ddf_degrees(fbar)) {
            for (std::size_t c = 0; c < count; ++c)
                for (std::size_t s = deg + 1; s-- > d;)
                    if (sums[s - d])
                        sums[s] = true;
        }
        for (std::size_t s = 0; s <= deg; ++s)
            out.feasible[s] = out.feasible[s] && sums[s];
        out.degree_sets.emplace(p, std::move(sums));
        ++used;
        if (only_trivial()) {
            out.verdict = SieveVerdict::ProvenIrreducible;
            break;
        }
    }
    return out;
}

}  // namespace phicert
