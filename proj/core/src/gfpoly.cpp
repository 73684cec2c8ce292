#include "phicert/gfpoly.hpp"

#include "phicert/error.hpp"

#include <string>
#include <utility>

namespace phicert {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1)
            r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

void require_same_modulus(const GfPoly& a, const GfPoly& b)
{
    if (!(a.modulus() == b.modulus()))
        throw StructuralError("GfPoly modulus mismatch: " + std::to_string(a.modulus().value()) + " vs " +
                              std::to_string(b.modulus().value()));
}

}  // namespace

GfPoly::GfPoly(Prime p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs))
{
    for (auto& c : c_)
        c %= p_.value();
    trim();
}

GfPoly GfPoly::x(Prime p) { return GfPoly(p, {0, 1}); }

GfPoly GfPoly::constant(Prime p, std::uint64_t c) { return GfPoly(p, {c}); }

void GfPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Degree GfPoly::degree() const noexcept
{
    if (c_.empty())
        return std::nullopt;
    return c_.size() - 1;
}

GfPoly reduce(const IntPoly& f, Prime p)
{
    std::vector<std::uint64_t> c;
    c.reserve(f.coeffs().size());
    const Integer mod(static_cast<unsigned long>(p.value()));
    for (const auto& v : f.coeffs()) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
        c.push_back(r.get_ui());
    }
    return GfPoly(p, std::move(c));
}

GfPoly operator+(const GfPoly& a, const GfPoly& b)
{
    require_same_modulus(a, b);
    const std::uint64_t p = a.modulus();
    std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = (a.coeff(i) + b.coeff(i)) % p;
    return GfPoly(a.modulus(), std::move(c));
}

GfPoly operator-(const GfPoly& a, const GfPoly& b)
{
    require_same_modulus(a, b);
    const std::uint64_t p = a.modulus();
    std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = (a.coeff(i) + p - b.coeff(i)) % p;
    return GfPoly(a.modulus(), std::move(c));
}

GfPoly operator*(const GfPoly& a, const GfPoly& b)
{
    require_same_modulus(a, b);
    if (a.is_zero() || b.is_zero())
        return GfPoly(a.modulus());
    const std::uint64_t p = a.modulus();
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<std::uint64_t> c(ac.size() + bc.size() - 1, 0);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0)
            continue;
        for (std::size_t j = 0; j < bc.size(); ++j)
            c[i + j] = (c[i + j] + mulmod(ac[i], bc[j], p)) % p;
    }
    return GfPoly(a.modulus(), std::move(c));
}

GfPoly scale(const GfPoly& a, std::uint64_t s)
{
    std::vector<std::uint64_t> c = a.coeffs();
    for (auto& v : c)
        v = mulmod(v, s, a.modulus());
    return GfPoly(a.modulus(), std::move(c));
}

GfDivRem gf_divrem(const GfPoly& a, const GfPoly& b)
{
    require_same_modulus(a, b);
    if (b.is_zero())
        throw StructuralError("gf_divrem: division by zero polynomial");
    const std::uint64_t p = a.modulus();
    const std::size_t db = *b.degree();
    std::vector<std::uint64_t> r = a.coeffs();
    if (r.size() <= db)
        return {GfPoly(a.modulus()), a};
    const std::uint64_t inv = invmod(b.leading(), p);
    const auto& bc = b.coeffs();
    std::vector<std::uint64_t> q(r.size() - db, 0);
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k] == 0)
            continue;
        const std::uint64_t t = mulmod(r[k], inv, p);
        q[k - db] = t;
        for (std::size_t j = 0; j <= db; ++j)
            r[k - db + j] = (r[k - db + j] + p - mulmod(t, bc[j], p)) % p;
    }
    r.resize(db);
    return {GfPoly(a.modulus(), std::move(q)), GfPoly(a.modulus(), std::move(r))};
}

GfPoly gf_mod(const GfPoly& a, const GfPoly& b) { return gf_divrem(a, b).remainder; }

GfPoly gf_monic(const GfPoly& a)
{
    if (a.is_zero())
        return a;
    return scale(a, invmod(a.leading(), a.modulus()));
}

GfPoly gf_derivative(const GfPoly& a)
{
    const std::uint64_t p = a.modulus();
    if (a.coeffs().size() <= 1)
        return GfPoly(a.modulus());
    std::vector<std::uint64_t> d(a.coeffs().size() - 1);
    for (std::size_t i = 1; i < a.coeffs().size(); ++i)
        d[i - 1] = mulmod(a.coeffs()[i], i % p, p);
    return GfPoly(a.modulus(), std::move(d));
}

GfPoly gf_gcd(const GfPoly& a, const GfPoly& b)
{
    require_same_modulus(a, b);
    GfPoly u = a;
    GfPoly v = b;
    while (!v.is_zero()) {
        GfPoly r = gf_mod(u, v);
        u = std::move(v);
        v = std::move(r);
    }
    return gf_monic(u);
}

GfPoly gf_powmod(const GfPoly& base, const Integer& e, const GfPoly& m)
{
    if (e < 0)
        throw StructuralError("gf_powmod: negative exponent");
    GfPoly result = gf_mod(GfPoly::constant(m.modulus(), 1), m);
    GfPoly b = gf_mod(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = gf_mod(result * result, m);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = gf_mod(result * b, m);
    }
    return result;
}

GfPoly gf_powmod_frobenius(const GfPoly& f, std::uint64_t k)
{
    if (f.is_zero() || *f.degree() < 1)
        throw StructuralError("gf_powmod_frobenius: modulus must have degree >= 1");
    const Integer p(static_cast<unsigned long>(f.modulus().value()));
    GfPoly h = gf_mod(GfPoly::x(f.modulus()), f);
    for (std::uint64_t i = 0; i < k; ++i)
        h = gf_powmod(h, p, f);
    return h;
}

bool is_irreducible_mod_p(const GfPoly& f)
{
    if (f.is_zero() || *f.degree() < 1)
        throw StructuralError("is_irreducible_mod_p: degree must be >= 1");
    const GfPoly g = gf_monic(f);
    const std::size_t d = *g.degree();
    const GfPoly x = GfPoly::x(g.modulus());
    if (!(gf_powmod_frobenius(g, d) == gf_mod(x, g)))
        return false;
    for (Prime q : prime_divisors(d)) {
        const GfPoly h = gf_powmod_frobenius(g, d / q.value()) - x;
        const GfPoly c = gf_gcd(g, h);
        if (!(c == GfPoly::constant(g.modulus(), 1)))
            return false;
    }
    return true;
}

bool is_irreducible_mod_p(const IntPoly& f, Prime p) { return is_irreducible_mod_p(reduce(f, p)); }

bool gf_is_squarefree(const GfPoly& f)
{
    if (f.is_zero())
        return false;
    const GfPoly g = gf_gcd(f, gf_derivative(f));
    return g.degree() == Degree(0);
}

std::map<std::size_t, std::size_t> ddf_degrees(const GfPoly& f)
{
    if (f.is_zero())
        throw StructuralError("ddf_degrees: zero polynomial");
    if (!gf_is_squarefree(f))
        throw NotSquarefree("ddf_degrees: polynomial is not squarefree mod " + std::to_string(f.modulus().value()));
    std::map<std::size_t, std::size_t> out;
    GfPoly rest = gf_monic(f);
    const Prime p = f.modulus();
    const Integer pz(static_cast<unsigned long>(p.value()));
    const GfPoly x = GfPoly::x(p);
    GfPoly h = x;
    for (std::size_t d = 1; 2 * d <= *rest.degree(); ++d) {
        h = gf_powmod(h, pz, rest);
        const GfPoly g = gf_gcd(rest, h - x);
        if (*g.degree() > 0) {
            out[d] += *g.degree() / d;
            rest = gf_divrem(rest, g).quotient;
            h = gf_mod(h, rest);
        }
    }
    if (*rest.degree() > 0)
        out[*rest.degree()] += 1;
    return out;
}

}  // namespace phicert
