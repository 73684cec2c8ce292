#include "phicert/criteria.hpp"
#include "phicert/error.hpp"
#include "phicert/gfpoly.hpp"
#include "phicert/oracle.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace phicert;
using phicert::testing::Rng;
using phicert::testing::uniform;

namespace {

const IntPoly kPhi{1, 1, 1};
const IntPoly kQuartic{-1, -1, 0, 0, 1};

IntPoly random_irreducible_mod2(Rng& rng, std::size_t deg)
{
    for (;;) {
        std::vector<Integer> c(deg + 1);
        for (auto& v : c)
            v = uniform(rng, -9, 9);
        while (c.back() % 2 == 0)
            c.back() = uniform(rng, -9, 9);
        IntPoly f(std::move(c));
        if (is_irreducible_mod_p(f, Prime(2)))
            return f;
    }
}

std::vector<IntPoly> primitive_factors_sorted(std::vector<IntPoly> fs)
{
    for (auto& f : fs)
        f = primitive_part(f);
    std::sort(fs.begin(), fs.end(), canonical_less);
    return fs;
}

std::vector<IntPoly> flatten(const Factorization& fz)
{
    std::vector<IntPoly> out;
    for (const auto& fp : fz.factors)
        for (std::size_t i = 0; i < fp.multiplicity; ++i)
            out.push_back(fp.factor);
    return out;
}

}  // namespace

TEST(RationalRoots, Examples)
{
    // 2(4x + 3) + 2(x + 2) phi + (x + 1) phi^2
    const IntPoly f = IntPoly{6, 8} + IntPoly{4, 2} * kPhi + IntPoly{1, 1} * kPhi * kPhi;
    const auto r = rational_roots(f);
    EXPECT_NE(std::find(r.begin(), r.end(), mpq_class(-1)), r.end());
    EXPECT_EQ(f.evaluate(-1), 0);

    EXPECT_TRUE(rational_roots(IntPoly{1, 0, 1}).empty());
    EXPECT_EQ(rational_roots(IntPoly{-3, 2}), (std::vector<mpq_class>{mpq_class(3, 2)}));
    EXPECT_EQ(rational_roots(IntPoly{0, 0, -1, 1}), (std::vector<mpq_class>{mpq_class(0), mpq_class(1)}));
    EXPECT_THROW(rational_roots(IntPoly{}), StructuralError);
}

TEST(RationalRoots, EveryRootEvaluatesToZero)
{
    Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const IntPoly f = phicert::testing::random_poly(rng, static_cast<std::size_t>(uniform(rng, 1, 3)), 6) *
                          IntPoly{-uniform(rng, -5, 5), uniform(rng, 1, 4)};
        for (const auto& r : rational_roots(f)) {
            // den^deg f(num/den)
            mpq_class acc = 0;
            for (std::size_t i = f.coeffs().size(); i-- > 0;)
                acc = acc * r + mpq_class(f.coeffs()[i]);
            ASSERT_EQ(acc, 0);
        }
    }
}

TEST(Kronecker, SchurCounterexamples)
{
    const auto f2 = kronecker_factor(IntPoly{-5, 4, 5, 2, 1});
    EXPECT_EQ(f2.content, 1);
    EXPECT_EQ(flatten(f2), (std::vector<IntPoly>{IntPoly{-1, 1, 1}, IntPoly{5, 1, 1}}));

    const auto g = kronecker_factor(IntPoly{4, 11, 17, 12, 6});
    EXPECT_EQ(flatten(g), (std::vector<IntPoly>{IntPoly{1, 2, 2}, IntPoly{4, 3, 3}}));
    EXPECT_EQ(g.expand(), (IntPoly{4, 11, 17, 12, 6}));

    // The coefficient 10x version is irreducible.
    EXPECT_TRUE(kronecker_factor(IntPoly{4, 10, 17, 12, 6}).is_irreducible());
    EXPECT_TRUE(kronecker_factor(kQuartic).is_irreducible());
}

TEST(Kronecker, ContentSignAndMultiplicity)
{
    const IntPoly base = IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{-2, 3} * kPhi;
    const auto fz = kronecker_factor(base * Integer(-6));
    EXPECT_EQ(fz.content, -6);
    EXPECT_EQ(fz.expand(), base * Integer(-6));
    ASSERT_EQ(fz.factors.size(), 3u);
    EXPECT_EQ(fz.factors[0], (FactorPower{IntPoly{1, 1}, 2}));
    EXPECT_EQ(fz.factors[1], (FactorPower{IntPoly{-2, 3}, 1}));
    EXPECT_EQ(fz.factors[2], (FactorPower{kPhi, 1}));
}

TEST(Kronecker, Limits)
{
    EXPECT_THROW(kronecker_factor(IntPoly::monomial(1, 9) + IntPoly{2}), DegreeCapExceeded);
    EXPECT_THROW(kronecker_factor(IntPoly{5}), StructuralError);
}

TEST(Kronecker, CompletenessOnRandomProducts)
{
    Rng rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        const IntPoly a = random_irreducible_mod2(rng, static_cast<std::size_t>(uniform(rng, 2, 3)));
        const IntPoly b = random_irreducible_mod2(rng, static_cast<std::size_t>(uniform(rng, 2, 3)));
        const IntPoly f = a * b;
        const auto fz = kronecker_factor(f);
        ASSERT_EQ(fz.expand(), f);
        ASSERT_EQ(flatten(fz), primitive_factors_sorted({a, b})) << to_string(f);
    }
}

TEST(Kronecker, FactorsAreIrreducible)
{
    Rng rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        IntPoly f = phicert::testing::random_poly(rng, static_cast<std::size_t>(uniform(rng, 1, 3)), 5);
        while (*f.degree() < 6)
            f *= phicert::testing::random_poly(rng, static_cast<std::size_t>(uniform(rng, 1, 3)), 5);
        if (*f.degree() > 8)
            continue;
        const auto fz = kronecker_factor(f);
        ASSERT_EQ(fz.expand(), f);
        for (const auto& fp : fz.factors) {
            ASSERT_EQ(content(fp.factor), 1);
            ASSERT_GT(fp.factor.leading(), 0);
            if (*fp.factor.degree() >= 2) {
                ASSERT_TRUE(kronecker_factor(fp.factor).is_irreducible()) << to_string(fp.factor);
            }
        }
    }
}

TEST(Sieve, Examples)
{
    const auto q = degree_set_sieve(kQuartic, 3);
    EXPECT_EQ(q.verdict, SieveVerdict::ProvenIrreducible);
    ASSERT_TRUE(q.degree_sets.contains(2));
    EXPECT_EQ(q.degree_sets.at(2), (std::vector<bool>{true, false, false, false, true}));

    const auto r = degree_set_sieve(IntPoly{-5, 4, 5, 2, 1});
    EXPECT_EQ(r.verdict, SieveVerdict::Inconclusive);
    EXPECT_TRUE(r.feasible[2]);

    EXPECT_THROW(degree_set_sieve(kPhi * kPhi), NotSquarefreeOverQ);
}

TEST(Sieve, FactorialInstances)
{
    auto instance = [](std::int64_t n) { return coleman_polynomial(kQuartic, n, std::vector<IntPoly>(n, IntPoly{1})); };
    EXPECT_EQ(degree_set_sieve(instance(3), 30).verdict, SieveVerdict::ProvenIrreducible);
    EXPECT_EQ(degree_set_sieve(instance(4), 30).verdict, SieveVerdict::ProvenIrreducible);
}

TEST(Sieve, NeverProvesAReducibleInput)
{
    Rng rng(44);
    for (int trial = 0; trial < 150; ++trial) {
        const IntPoly a = phicert::testing::random_poly(rng, static_cast<std::size_t>(uniform(rng, 1, 4)), 9);
        const IntPoly b = phicert::testing::random_poly(rng, static_cast<std::size_t>(uniform(rng, 1, 4)), 9);
        const IntPoly f = a * b;
        if (!gcd(f, f.derivative()).is_constant())
            continue;
        ASSERT_FALSE(kronecker_factor(f).is_irreducible());
        ASSERT_EQ(degree_set_sieve(f).verdict, SieveVerdict::Inconclusive) << to_string(f);
    }
}

TEST(Consistency, CriteriaAgreeWithOracle)
{
    std::vector<Certificate> certs;
    for (std::size_t n = 2; n <= 8; ++n)
        certs.push_back(check_schonemann(IntPoly::monomial(1, n) + IntPoly{2}, IntPoly::x(), Prime(2)));
    certs.push_back(check_schonemann(kPhi * kPhi + IntPoly{2, 2}, kPhi, Prime(2)));
    certs.push_back(check_gen_schonemann(IntPoly{2, 4, 0, 1}, IntPoly::x(), Prime(2)));
    certs.push_back(check_gen_schonemann(IntPoly{6, 0, 0, 0, 4, 0, 0, 1}, IntPoly::x(), Prime(2)));
    certs.push_back(check_coleman(IntPoly::x(), 6, std::vector<IntPoly>(6, IntPoly{1})));
    certs.push_back(check_schur({kPhi, 2, {IntPoly{1}, IntPoly{1}}, 1}));
    certs.push_back(check_schur({IntPoly::x(), 4, {IntPoly{1}, IntPoly{3}, IntPoly{1}, IntPoly{1}}, 5}));
    for (const auto& c : certs) {
        ASSERT_EQ(c.verdict, Verdict::Irreducible) << to_string(c.polynomial) << " " << ::testing::PrintToString(c.failed());
        ASSERT_TRUE(kronecker_factor(c.polynomial).is_irreducible()) << to_string(c.polynomial);
    }
}
