#include "phicert/intpoly.hpp"

#include "phicert/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace phicert {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    c_.reserve(coeffs.size());
    for (long c : coeffs)
        c_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::x() { return IntPoly{0, 1}; }

IntPoly IntPoly::monomial(const Integer& c, std::size_t k)
{
    std::vector<Integer> v(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Degree IntPoly::degree() const noexcept
{
    if (c_.empty())
        return std::nullopt;
    return c_.size() - 1;
}

Integer IntPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }

Integer IntPoly::leading() const { return c_.empty() ? Integer(0) : c_.back(); }

bool IntPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

Integer IntPoly::evaluate(const Integer& at) const
{
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

IntPoly IntPoly::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<Integer> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

IntPoly IntPoly::operator-() const
{
    IntPoly r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const Integer& s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_)
        c *= s;
    return *this;
}

IntPoly add(const IntPoly& a, const IntPoly& b) { return a + b; }

IntPoly mul(const IntPoly& a, const IntPoly& b) { return a * b; }

IntPoly pow(const IntPoly& base, std::size_t e)
{
    IntPoly result = IntPoly::constant(1);
    IntPoly sq = base;
    while (e > 0) {
        if (e & 1)
            result *= sq;
        e >>= 1;
        if (e > 0)
            sq *= sq;
    }
    return result;
}

DivRem divrem_monic(const IntPoly& f, const IntPoly& divisor)
{
    if (!divisor.is_monic() || divisor.is_constant())
        throw StructuralError("divrem_monic: divisor must be monic of degree >= 1, got " + to_string(divisor));
    const std::size_t m = *divisor.degree();
    const auto& dc = divisor.coeffs();
    std::vector<Integer> r = f.coeffs();
    if (r.size() <= m)
        return {IntPoly{}, f};
    std::vector<Integer> q(r.size() - m);
    for (std::size_t k = r.size(); k-- > m;) {
        const Integer lead = r[k];
        if (lead == 0)
            continue;
        q[k - m] = lead;
        for (std::size_t j = 0; j <= m; ++j)
            r[k - m + j] -= lead * dc[j];
    }
    r.resize(m);
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& divisor)
{
    if (divisor.is_zero())
        throw StructuralError("divide_exact: division by the zero polynomial");
    if (f.is_zero())
        return IntPoly{};
    const std::size_t m = *divisor.degree();
    if (*f.degree() < m)
        return std::nullopt;
    const auto& dc = divisor.coeffs();
    const Integer& lead_d = dc.back();
    std::vector<Integer> r = f.coeffs();
    std::vector<Integer> q(r.size() - m);
    for (std::size_t k = r.size(); k-- > m;) {
        if (r[k] == 0)
            continue;
        if (!mpz_divisible_p(r[k].get_mpz_t(), lead_d.get_mpz_t()))
            return std::nullopt;
        Integer t = r[k] / lead_d;
        for (std::size_t j = 0; j <= m; ++j)
            r[k - m + j] -= t * dc[j];
        q[k - m] = std::move(t);
    }
    for (std::size_t i = 0; i < m; ++i)
        if (r[i] != 0)
            return std::nullopt;
    return IntPoly(std::move(q));
}

IntPoly divide_exact(const IntPoly& f, const Integer& s)
{
    if (s == 0)
        throw StructuralError("divide_exact: division by zero");
    std::vector<Integer> c = f.coeffs();
    for (auto& v : c)
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
    return IntPoly(std::move(c));
}

Integer content(const IntPoly& f)
{
    Integer g = 0;
    for (const auto& c : f.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& f)
{
    if (f.is_zero())
        return {};
    Integer c = content(f);
    if (f.leading() < 0)
        c = -c;
    return divide_exact(f, c);
}

namespace {

// One step of pseudo-division: a is reduced modulo b until deg a < deg b,
// keeping a primitive so coefficients stay small.
IntPoly primitive_prem(IntPoly a, const IntPoly& b)
{
    const std::size_t db = *b.degree();
    const Integer lb = b.leading();
    while (!a.is_zero() && *a.degree() >= db) {
        const std::size_t shift = *a.degree() - db;
        const Integer la = a.leading();
        a = a * lb - IntPoly::monomial(la, shift) * b;
        a = primitive_part(a);
    }
    return a;
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b)
{
    IntPoly u = primitive_part(a);
    IntPoly v = primitive_part(b);
    if (u.is_zero())
        return v;
    if (v.is_zero())
        return u;
    if (*u.degree() < *v.degree())
        std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = primitive_prem(u, v);
        u = std::move(v);
        v = std::move(r);
    }
    return primitive_part(u);
}

PhiExpansion phi_expand(const IntPoly& f, const IntPoly& phi)
{
    if (!phi.is_monic() || phi.is_constant())
        throw StructuralError("phi_expand: phi must be monic of degree >= 1, got " + to_string(phi));
    PhiExpansion e{phi, {}};
    IntPoly rest = f;
    while (!rest.is_zero()) {
        auto [q, r] = divrem_monic(rest, phi);
        e.parts.push_back(std::move(r));
        rest = std::move(q);
    }
    return e;
}

IntPoly phi_assemble(const PhiExpansion& e)
{
    // Horner in phi.
    IntPoly acc;
    for (auto it = e.parts.rbegin(); it != e.parts.rend(); ++it)
        acc = acc * e.phi + *it;
    return acc;
}

std::string to_string(const IntPoly& f)
{
    if (f.is_zero())
        return "0";
    std::ostringstream out;
    const auto& c = f.coeffs();
    bool first = true;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0)
            continue;
        Integer mag = abs(c[k]);
        if (first)
            out << (c[k] < 0 ? "-" : "");
        else
            out << (c[k] < 0 ? " - " : " + ");
        first = false;
        if (k == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1)
            out << mag.get_str() << "*";
        out << "x";
        if (k > 1)
            out << "^" << k;
    }
    return out.str();
}

Integer factorial(std::uint64_t n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace phicert
