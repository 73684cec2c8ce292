#include "phicert/criteria.hpp"

#include "phicert/error.hpp"
#include "phicert/gfpoly.hpp"
#include "phicert/valuation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace phicert {

std::string_view to_string(Criterion c)
{
    switch (c) {
    case Criterion::Schur: return "Schur";
    case Criterion::Coleman: return "Coleman";
    case Criterion::FilasetaWindow: return "FilasetaWindow";
    case Criterion::Schonemann: return "Schonemann";
    case Criterion::GenSchonemann: return "GenSchonemann";
    }
    return "?";
}

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Irreducible: return "Irreducible";
    case Verdict::ExclusionWindow: return "ExclusionWindow";
    case Verdict::HypothesisFailed: return "HypothesisFailed";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

bool Certificate::all_hold() const
{
    for (const auto& h : hypotheses)
        if (!h.holds)
            return false;
    return true;
}

std::vector<std::string> Certificate::failed() const
{
    std::vector<std::string> out;
    for (const auto& h : hypotheses)
        if (!h.holds)
            out.push_back(h.name);
    return out;
}

namespace {

void require_phi(const IntPoly& phi)
{
    if (!phi.is_monic() || phi.is_constant())
        throw StructuralError("phi must be monic of degree >= 1, got " + to_string(phi));
}

std::string deg_str(const IntPoly& f)
{
    return f.is_zero() ? std::string("-inf") : std::to_string(*f.degree());
}

std::string join(const std::vector<std::string>& items, const char* sep = ", ")
{
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i)
            s += sep;
        s += items[i];
    }
    return s;
}

std::string prime_list(const std::vector<std::uint64_t>& ps)
{
    std::vector<std::string> s;
    for (auto p : ps)
        s.push_back(std::to_string(p));
    return join(s);
}

bool divisible_by(const Integer& v, std::uint64_t p) { return mpz_divisible_ui_p(v.get_mpz_t(), p) != 0; }

HypothesisRecord phi_irreducible_record(const IntPoly& phi, Prime p)
{
    const bool ok = is_irreducible_mod_p(phi, p);
    return {"phi-irreducible-mod-p", ok,
            "phi = " + to_string(phi) + (ok ? " is irreducible mod " : " is reducible mod ") + std::to_string(p.value())};
}

// Records that every a_i has degree below deg(phi).
HypothesisRecord degree_bound_record(const IntPoly& phi, const std::vector<IntPoly>& parts)
{
    const std::size_t m = *phi.degree();
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (!degree_below(parts[i].degree(), m))
            bad.push_back("a_" + std::to_string(i) + " has degree " + deg_str(parts[i]));
    return {"a-degree-bound", bad.empty(),
            bad.empty() ? "deg a_i < " + std::to_string(m) + " for all i" : join(bad, "; ")};
}

void finish(Certificate& c, Verdict on_success)
{
    c.verdict = c.all_hold() ? on_success : Verdict::HypothesisFailed;
    if (c.verdict != Verdict::ExclusionWindow)
        c.window.reset();
}

}  // namespace

SylvesterPrime sylvester_prime(std::int64_t n, std::int64_t k)
{
    if (k < 1 || 2 * k > n)
        throw StructuralError("sylvester_prime: need 1 <= k <= n/2, got n = " + std::to_string(n) +
                              ", k = " + std::to_string(k));
    for (std::int64_t w = n; w > n - k; --w) {
        const auto lpf = largest_prime_factor(static_cast<std::uint64_t>(w));
        if (lpf >= static_cast<std::uint64_t>(k + 1))
            return {Prime(lpf), w, n - w};
    }
    throw std::logic_error("sylvester_prime: no prime found for n = " + std::to_string(n) + ", k = " +
                           std::to_string(k));
}

IntPoly factorial_polynomial(const IntPoly& phi, std::int64_t n)
{
    if (n < 0)
        throw StructuralError("factorial_polynomial: n must be nonnegative");
    IntPoly acc;
    Integer c = 1;  // n!/i! for the current i, built from i = n downward
    for (std::int64_t i = n; i >= 0; --i) {
        acc = acc * phi + IntPoly::constant(c);
        c *= static_cast<unsigned long>(i);
    }
    return acc;
}

IntPoly schur_polynomial(const SchurInput& in)
{
    if (in.n < 1 || static_cast<std::int64_t>(in.a_parts.size()) != in.n)
        throw StructuralError("schur_polynomial: expected n >= 1 and exactly n parts a_0..a_{n-1}");
    IntPoly acc = IntPoly::constant(in.a_n);
    Integer c = in.n;  // n!/(n-1)!
    for (std::int64_t i = in.n - 1; i >= 0; --i) {
        acc = acc * in.phi + in.a_parts[static_cast<std::size_t>(i)] * c;
        c *= static_cast<unsigned long>(i);
    }
    return acc;
}

IntPoly coleman_polynomial(const IntPoly& phi, std::int64_t n, const std::vector<IntPoly>& a_parts)
{
    return schur_polynomial(SchurInput{phi, n, a_parts, Integer(1)});
}

std::vector<Edge> factorial_polygon_closed_form(std::int64_t n, Prime p)
{
    const auto pv = static_cast<std::int64_t>(p.value());
    if (n < 1 || n % pv != 0)
        throw StructuralError("factorial_polygon_closed_form: p must divide n >= 1");
    std::vector<Edge> out;
    std::int64_t pm = 1;
    for (std::int64_t rest = n; rest > 0; rest /= pv, pm *= pv) {
        const std::int64_t c = rest % pv;
        if (c == 0)
            continue;
        out.push_back(make_edge(c * pm, c * (pm - 1) / (pv - 1)));
    }
    return out;
}

Certificate check_filaseta_window(const IntPoly& f, const IntPoly& phi, Prime p, std::int64_t k, std::int64_t ell,
                                  const std::vector<IntPoly>& a_parts)
{
    if (f.is_zero())
        throw StructuralError("check_filaseta_window: f is zero");
    require_phi(phi);
    const PhiExpansion e = phi_expand(f, phi);
    const auto n = static_cast<std::int64_t>(e.top());
    const std::size_t m = *phi.degree();

    std::vector<IntPoly> a = a_parts;
    if (a.empty())
        a.assign(e.parts.size(), IntPoly::constant(1));
    if (a.size() != e.parts.size())
        throw StructuralError("check_filaseta_window: expected " + std::to_string(e.parts.size()) +
                              " multipliers a_0..a_n, got " + std::to_string(a.size()));

    Certificate c;
    c.criterion = Criterion::FilasetaWindow;
    c.phi = phi;
    {
        PhiExpansion weighted{phi, {}};
        for (std::size_t i = 0; i < e.parts.size(); ++i)
            weighted.parts.push_back(a[i] * e.parts[i]);
        c.polynomial = phi_assemble(weighted);
    }

    const bool params_ok = 0 <= ell && ell < k && 2 * k <= n;
    c.hypotheses.push_back({"window-params", params_ok,
                            "ell = " + std::to_string(ell) + ", k = " + std::to_string(k) +
                                ", n = " + std::to_string(n) + " (need 0 <= ell < k <= n/2)"});
    const auto phi_irr = phi_irreducible_record(phi, p);
    c.hypotheses.push_back(phi_irr);
    c.hypotheses.push_back({"f-monic", f.is_monic(), "leading coefficient " + f.leading().get_str()});
    const bool f0_nonzero = !e.parts.front().is_zero();
    c.hypotheses.push_back({"phi-not-dividing-f", f0_nonzero, f0_nonzero ? "f_0 != 0" : "f_0 = 0"});

    {
        std::vector<std::string> bad;
        for (std::int64_t i = 0; i <= n - ell - 1 && i <= n; ++i) {
            const Valuation v = vpx(e.parts[static_cast<std::size_t>(i)], p);
            if (!(v > Valuation(0)))
                bad.push_back("v(f_" + std::to_string(i) + ") = 0");
        }
        c.hypotheses.push_back({"low-parts-divisible", bad.empty(),
                                bad.empty() ? "v(f_i) > 0 for 0 <= i <= " + std::to_string(n - ell - 1) : join(bad)});
    }

    TraceStep step;
    step.step = "filaseta-window";
    step.k = k;
    step.ell = ell;
    step.prime = p;
    step.subject = f;
    if (phi_irr.holds && f0_nonzero && k >= 1) {
        const NewtonPolygon np = build_polygon(polygon_points(e, p));
        const Rat bound(1, k);
        const bool has_edge = !np.empty();
        const Rat slope = has_edge ? rightmost_slope(np) : Rat(0);
        const bool ok = has_edge && slope < bound;
        c.hypotheses.push_back({"rightmost-slope-bound", ok,
                                has_edge ? "rightmost slope " + slope.to_string() + (ok ? " < " : " >= ") +
                                               bound.to_string()
                                         : "polygon has no edges"});
        step.polygon = np;
        step.rightmost_slope = slope;
        step.slope_bound = bound;
    } else {
        c.hypotheses.push_back({"rightmost-slope-bound", false, "polygon undefined for these inputs"});
    }

    {
        std::vector<std::string> bad;
        std::vector<std::string> vacuous;
        for (std::size_t i = 0; i < e.parts.size(); ++i) {
            if (e.parts[i].is_zero()) {
                vacuous.push_back(std::to_string(i));
                continue;
            }
            const std::size_t limit = m - *e.parts[i].degree();
            if (!degree_below(a[i].degree(), limit))
                bad.push_back("deg a_" + std::to_string(i) + " = " + deg_str(a[i]) + " >= " + std::to_string(limit));
        }
        std::string detail = bad.empty() ? "deg a_i < deg phi - deg f_i" : join(bad, "; ");
        if (!vacuous.empty())
            detail += "; vacuous for f_i = 0 at i in {" + join(vacuous) + "}";
        c.hypotheses.push_back({"a-degree-bound", bad.empty(), detail});
    }
    {
        const Valuation v = vpx(a.front(), p);
        c.hypotheses.push_back({"a0-content", v == Valuation(0), "v_p(content(a_0)) = " + v.to_string()});
    }
    {
        const Integer lc = a.back().leading();
        const bool ok = lc != 0 && !divisible_by(lc, p);
        c.hypotheses.push_back({"an-leading-coprime", ok, "leading coefficient of a_n is " + lc.get_str()});
    }

    const Window w{(ell + 1) * static_cast<std::int64_t>(m), (k + 1) * static_cast<std::int64_t>(m)};
    c.window = w;
    step.window = w;
    c.trace.push_back(std::move(step));
    finish(c, Verdict::ExclusionWindow);
    if (c.verdict != Verdict::ExclusionWindow)
        c.trace.back().window.reset();
    return c;
}

Certificate check_schur(const SchurInput& in)
{
    require_phi(in.phi);
    if (in.n < 1)
        throw StructuralError("check_schur: n must be positive");
    if (static_cast<std::int64_t>(in.a_parts.size()) != in.n)
        throw StructuralError("check_schur: expected " + std::to_string(in.n) + " parts a_0..a_{n-1}, got " +
                              std::to_string(in.a_parts.size()));

    Certificate c;
    c.criterion = Criterion::Schur;
    c.phi = in.phi;
    c.polynomial = schur_polynomial(in);
    const auto n = in.n;

    c.hypotheses.push_back({"n-at-least-2", n >= 2, "n = " + std::to_string(n)});
    c.hypotheses.push_back(degree_bound_record(in.phi, in.a_parts));
    c.hypotheses.push_back({"a0-nonzero", !in.a_parts.front().is_zero(), "a_0 = " + to_string(in.a_parts.front())});
    c.hypotheses.push_back({"an-nonzero", in.a_n != 0, "a_n = " + in.a_n.get_str()});

    const auto small_primes = primes_up_to(static_cast<std::uint64_t>(n));
    for (Prime p : small_primes)
        c.hypotheses.push_back(phi_irreducible_record(in.phi, p));
    {
        std::vector<std::uint64_t> bad_an;
        std::vector<std::uint64_t> bad_a0;
        const Integer a0_content = content(in.a_parts.front());
        for (Prime p : small_primes) {
            if (divisible_by(in.a_n, p))
                bad_an.push_back(p);
            if (divisible_by(a0_content, p))
                bad_a0.push_back(p);
        }
        c.hypotheses.push_back({"an-coprime-to-n!", bad_an.empty(),
                                bad_an.empty() ? "a_n = " + in.a_n.get_str() + " has no prime factor <= n"
                                               : "shares prime(s) " + prime_list(bad_an) + " with n!"});
        c.hypotheses.push_back({"a0-content-coprime-to-n!", bad_a0.empty(),
                                bad_a0.empty() ? "content(a_0) = " + a0_content.get_str() + " has no prime factor <= n"
                                               : "content(a_0) = " + a0_content.get_str() + " shares prime(s) " +
                                                     prime_list(bad_a0) + " with n!"});
    }
    if (!c.all_hold()) {
        c.verdict = Verdict::HypothesisFailed;
        return c;
    }

    // Step I: no factor of degree < deg phi, because F is a unit times
    // phi^n modulo any prime q | n. We use the smallest q.
    {
        const Prime q = prime_divisors(static_cast<std::uint64_t>(n)).front();
        GfPoly phibar_n = GfPoly::constant(q, 1);
        const GfPoly phibar = reduce(in.phi, q);
        for (std::int64_t i = 0; i < n; ++i)
            phibar_n = phibar_n * phibar;
        const GfPoly expected = scale(phibar_n, reduce(IntPoly::constant(in.a_n), q).coeff(0));
        const bool ok = reduce(c.polynomial, q) == expected;
        c.hypotheses.push_back({"step1-reduction", ok,
                                "F mod " + std::to_string(q.value()) + (ok ? " = " : " != ") + "a_n * phi^" +
                                    std::to_string(n) + " mod " + std::to_string(q.value())});
        TraceStep s;
        s.step = "step1";
        s.prime = q;
        s.note = "F is a unit times phi^n mod q and phi is irreducible mod q: no factor of degree < " +
                 std::to_string(*in.phi.degree());
        c.trace.push_back(std::move(s));
        if (!ok) {
            c.verdict = Verdict::Inconclusive;
            return c;
        }
    }

    // Step II: exclude [k deg phi, (k+1) deg phi) for every 1 <= k <= n/2.
    const IntPoly f = factorial_polynomial(in.phi, n);
    std::vector<IntPoly> multipliers = in.a_parts;
    multipliers.push_back(IntPoly::constant(in.a_n));
    for (std::int64_t k = 1; 2 * k <= n; ++k) {
        const SylvesterPrime sp = sylvester_prime(n, k);
        Certificate sub = check_filaseta_window(f, in.phi, sp.p, k, sp.ell, multipliers);
        TraceStep s = sub.trace.front();
        s.step = "step2";
        s.witness = sp.witness;
        if (sub.verdict != Verdict::ExclusionWindow) {
            s.note = "window check failed: " + join(sub.failed());
            c.trace.push_back(std::move(s));
            c.verdict = Verdict::Inconclusive;
            return c;
        }
        s.note = "p = " + std::to_string(sp.p.value()) + " divides " + std::to_string(sp.witness) +
                 "; no factor of degree in [" + std::to_string(sub.window->lo) + ", " +
                 std::to_string(sub.window->hi) + ")";
        c.trace.push_back(std::move(s));
    }
    c.verdict = Verdict::Irreducible;
    return c;
}

Certificate check_coleman(const IntPoly& phi, std::int64_t n, const std::vector<IntPoly>& a_parts)
{
    require_phi(phi);
    if (n < 1)
        throw StructuralError("check_coleman: n must be positive");
    if (static_cast<std::int64_t>(a_parts.size()) != n)
        throw StructuralError("check_coleman: expected " + std::to_string(n) + " parts a_0..a_{n-1}, got " +
                              std::to_string(a_parts.size()));

    Certificate c;
    c.criterion = Criterion::Coleman;
    c.phi = phi;
    c.polynomial = coleman_polynomial(phi, n, a_parts);

    c.hypotheses.push_back({"n-at-least-2", n >= 2, "n = " + std::to_string(n)});
    c.hypotheses.push_back(degree_bound_record(phi, a_parts));
    const auto divisors = prime_divisors(static_cast<std::uint64_t>(n));
    for (Prime p : divisors)
        c.hypotheses.push_back(phi_irreducible_record(phi, p));
    {
        IntPoly prod = IntPoly::constant(1);
        for (const auto& a : a_parts)
            prod *= a;
        const Integer cont = content(prod);
        Integer g;
        mpz_gcd_ui(g.get_mpz_t(), cont.get_mpz_t(), static_cast<unsigned long>(n));
        c.hypotheses.push_back({"content-product-coprime-to-n", g == 1,
                                "content(prod a_i) = " + cont.get_str() + ", gcd with n = " + g.get_str()});
    }
    if (!c.all_hold()) {
        c.verdict = Verdict::HypothesisFailed;
        return c;
    }

    const PhiExpansion e = phi_expand(c.polynomial, phi);
    std::int64_t divisor_product = 1;
    for (Prime p : divisors) {
        const auto pv = static_cast<std::int64_t>(p.value());
        std::int64_t pm1 = 1;
        for (std::int64_t r = n; r % pv == 0; r /= pv)
            pm1 *= pv;
        const NewtonPolygon np = build_polygon(polygon_points(e, p));
        const auto expected = factorial_polygon_closed_form(n, p);
        bool ok = np.edges() == expected;
        for (const auto& edge : np.edges())
            ok = ok && edge.slope.den() % pm1 == 0;

        TraceStep s;
        s.step = "ore";
        s.prime = p;
        s.subject = c.polynomial;
        s.polygon = np;
        s.rightmost_slope = np.empty() ? Rat(0) : rightmost_slope(np);
        s.ore_divisor = pm1;
        s.note = ok ? std::to_string(pm1) + " divides every slope denominator, so " + std::to_string(pm1) +
                          "*deg(phi) divides the degree of every factor over Q_" + std::to_string(pv)
                    : "polygon does not match the closed form";
        c.trace.push_back(std::move(s));
        if (!ok) {
            c.verdict = Verdict::Inconclusive;
            return c;
        }
        divisor_product *= pm1;
    }
    TraceStep s;
    s.step = "conclusion";
    s.note = "product of local divisors = " + std::to_string(divisor_product) + " = n, so n*deg(phi) = deg F divides "
             "the degree of every factor over Q";
    c.trace.push_back(std::move(s));
    c.verdict = divisor_product == n ? Verdict::Irreducible : Verdict::Inconclusive;
    return c;
}

Certificate check_schonemann(const IntPoly& f, const IntPoly& phi, Prime p)
{
    if (f.is_zero())
        throw StructuralError("check_schonemann: f is zero");
    require_phi(phi);
    const PhiExpansion e = phi_expand(f, phi);
    const auto n = static_cast<std::int64_t>(e.top());

    Certificate c;
    c.criterion = Criterion::Schonemann;
    c.phi = phi;
    c.polynomial = f;
    const auto phi_irr = phi_irreducible_record(phi, p);
    c.hypotheses.push_back(phi_irr);
    c.hypotheses.push_back({"expansion-length", n >= 1, "n = " + std::to_string(n)});
    const bool top_one = e.parts.back() == IntPoly::constant(1);
    c.hypotheses.push_back({"top-part-one", top_one, "f_n = " + to_string(e.parts.back())});
    {
        std::vector<std::string> bad;
        for (std::int64_t i = 0; i < n; ++i)
            if (!(vpx(e.parts[static_cast<std::size_t>(i)], p) >= Valuation(1)))
                bad.push_back("v(f_" + std::to_string(i) + ") = 0");
        c.hypotheses.push_back({"low-parts-divisible", bad.empty(),
                                bad.empty() ? "p divides f_i for all i < n" : join(bad)});
    }
    const Valuation v0 = vpx(e.parts.front(), p);
    c.hypotheses.push_back({"f0-valuation-one", v0 == Valuation(1) && n >= 1,
                            "v(f_0) = " + v0.to_string() + " (equivalently phi does not divide M mod p)"});
    if (!c.all_hold()) {
        c.verdict = Verdict::HypothesisFailed;
        return c;
    }

    TraceStep s;
    s.step = "polygon";
    s.prime = p;
    s.subject = f;
    s.polygon = build_polygon(polygon_points(e, p));
    s.rightmost_slope = rightmost_slope(*s.polygon);
    s.note = "single edge (0,0)-(n,1)";
    c.trace.push_back(std::move(s));
    if (n >= 2) {
        Certificate sub = check_filaseta_window(f, phi, p, n / 2, 0);
        TraceStep w = sub.trace.front();
        w.step = "window";
        if (sub.verdict != Verdict::ExclusionWindow) {
            w.note = "window check failed: " + join(sub.failed());
            c.trace.push_back(std::move(w));
            c.verdict = Verdict::Inconclusive;
            return c;
        }
        w.note = "factors mod p are powers of phi, so every factor has degree >= deg phi; window leaves no room";
        c.trace.push_back(std::move(w));
    }
    c.verdict = Verdict::Irreducible;
    return c;
}

Certificate check_gen_schonemann(const IntPoly& f, const IntPoly& phi, Prime p)
{
    if (f.is_zero())
        throw StructuralError("check_gen_schonemann: f is zero");
    require_phi(phi);
    const PhiExpansion e = phi_expand(f, phi);
    const auto n = static_cast<std::int64_t>(e.top());

    Certificate c;
    c.criterion = Criterion::GenSchonemann;
    c.phi = phi;
    c.polynomial = f;
    c.hypotheses.push_back(phi_irreducible_record(phi, p));
    const bool f0_nonzero = !e.parts.front().is_zero();
    c.hypotheses.push_back({"f0-nonzero", f0_nonzero, f0_nonzero ? "f_0 != 0" : "f_0 = 0"});
    c.hypotheses.push_back({"top-part-one", e.parts.back() == IntPoly::constant(1), "f_n = " + to_string(e.parts.back())});
    c.hypotheses.push_back({"expansion-length", n >= 1, "n = " + std::to_string(n)});

    const Valuation v0 = vpx(e.parts.front(), p);
    const bool v0_ok = n >= 1 && v0.is_finite() && v0 > Valuation(0);
    c.hypotheses.push_back({"f0-positive-valuation", v0_ok, "v(f_0) = " + v0.to_string()});
    if (v0_ok) {
        const Rat base(v0.value(), n);
        std::vector<std::string> bad;
        for (std::int64_t i = 1; i < n; ++i) {
            const Valuation vi = vpx(e.parts[static_cast<std::size_t>(i)], p);
            if (vi.is_infinite())
                continue;
            if (Rat(vi.value(), n - i) < base)
                bad.push_back("v(f_" + std::to_string(i) + ")/(n-" + std::to_string(i) + ") = " +
                              Rat(vi.value(), n - i).to_string());
        }
        c.hypotheses.push_back({"slope-condition", bad.empty(),
                                bad.empty() ? "v(f_i)/(n-i) >= " + base.to_string() + " for all i < n"
                                            : join(bad) + " < " + base.to_string()});
        const auto g = std::gcd(v0.value(), n);
        c.hypotheses.push_back({"valuation-coprime-to-n", g == 1,
                                "gcd(v(f_0), n) = gcd(" + v0.to_string() + ", " + std::to_string(n) +
                                    ") = " + std::to_string(g)});
    } else {
        c.hypotheses.push_back({"slope-condition", false, "undefined without 0 < v(f_0) < inf"});
        c.hypotheses.push_back({"valuation-coprime-to-n", false, "undefined without 0 < v(f_0) < inf"});
    }
    if (!c.all_hold()) {
        c.verdict = Verdict::HypothesisFailed;
        return c;
    }
    TraceStep s;
    s.step = "polygon";
    s.prime = p;
    s.subject = f;
    s.polygon = build_polygon(polygon_points(e, p));
    s.rightmost_slope = rightmost_slope(*s.polygon);
    s.note = "single edge of slope v(f_0)/n in lowest terms with denominator n";
    c.trace.push_back(std::move(s));
    c.verdict = Verdict::Irreducible;
    return c;
}

std::vector<std::string> replay(const Certificate& cert)
{
    std::vector<std::string> issues;
    for (std::size_t i = 0; i < cert.trace.size(); ++i) {
        const TraceStep& s = cert.trace[i];
        const std::string tag = "step " + std::to_string(i) + " (" + s.step + "): ";
        if (s.polygon) {
            if (!s.subject || !s.prime) {
                issues.push_back(tag + "polygon recorded without subject or prime");
                continue;
            }
            const NewtonPolygon np = newton_polygon(*s.subject, cert.phi, *s.prime);
            if (!(np == *s.polygon))
                issues.push_back(tag + "polygon differs on recomputation");
            if (s.rightmost_slope && !np.empty() && !(rightmost_slope(np) == *s.rightmost_slope))
                issues.push_back(tag + "rightmost slope differs");
        }
        if (s.k) {
            if (!s.slope_bound || !(*s.slope_bound == Rat(1, *s.k)))
                issues.push_back(tag + "slope bound is not 1/k");
            if (s.rightmost_slope && s.slope_bound && !(*s.rightmost_slope < *s.slope_bound))
                issues.push_back(tag + "rightmost slope does not beat the bound");
        }
        if (cert.criterion == Criterion::Schur && s.step == "step2" && s.k && s.subject) {
            const auto n = static_cast<std::int64_t>(phi_expand(*s.subject, cert.phi).top());
            const SylvesterPrime sp = sylvester_prime(n, *s.k);
            if (!s.prime || !(sp.p == *s.prime) || s.witness != sp.witness || s.ell != sp.ell)
                issues.push_back(tag + "prime choice differs from the deterministic scan");
        }
        if (cert.criterion == Criterion::Coleman && s.step == "ore" && s.prime && s.polygon) {
            const auto n = static_cast<std::int64_t>(phi_expand(cert.polynomial, cert.phi).top());
            if (!(s.polygon->edges() == factorial_polygon_closed_form(n, *s.prime)))
                issues.push_back(tag + "polygon does not match the closed form");
        }
    }
    return issues;
}

}  // namespace phicert
