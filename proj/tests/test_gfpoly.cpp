#include "phicert/error.hpp"
#include "phicert/gfpoly.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace phicert;

namespace {

const Prime P2(2);
const Prime P3(3);
const Prime P5(5);

}  // namespace

TEST(GfPoly, Reduce)
{
    EXPECT_EQ(reduce(IntPoly{1, 1, 1}, P2), GfPoly(P2, {1, 1, 1}));
    EXPECT_EQ(reduce(IntPoly{-1, -1, 6}, P2), GfPoly(P2, {1, 1}));
    EXPECT_TRUE(reduce(IntPoly{}, P3).is_zero());
    EXPECT_TRUE(reduce(IntPoly{9, 3}, P3).is_zero());
}

TEST(GfPoly, Gcd)
{
    EXPECT_EQ(gf_gcd(reduce(IntPoly{-1, 0, 1}, P5), reduce(IntPoly{-1, 1}, P5)), GfPoly(P5, {4, 1}));
    const GfPoly f(P5, {3, 0, 2, 4});
    EXPECT_EQ(gf_gcd(f, f), gf_monic(f));
    EXPECT_EQ(gf_gcd(f, GfPoly(P5)), gf_monic(f));
    EXPECT_THROW(gf_gcd(f, GfPoly(P3, {1, 1})), StructuralError);
}

TEST(GfPoly, DivRem)
{
    const GfPoly a(P3, {2, 0, 1, 1, 2});
    const GfPoly b(P3, {1, 2, 1});
    const auto [q, r] = gf_divrem(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_TRUE(degree_below(r.degree(), 2));
}

TEST(GfPoly, Frobenius)
{
    EXPECT_EQ(gf_powmod_frobenius(GfPoly(P2, {1, 1, 1}), 2), GfPoly::x(P2));
    EXPECT_EQ(gf_powmod_frobenius(GfPoly(P2, {1, 1, 0, 1}), 1), GfPoly(P2, {0, 0, 1}));
    EXPECT_TRUE(gf_powmod_frobenius(GfPoly::x(P3), 1).is_zero());
}

TEST(GfPoly, RabinExamples)
{
    EXPECT_TRUE(is_irreducible_mod_p(IntPoly{1, 1, 1}, P2));
    EXPECT_TRUE(is_irreducible_mod_p(IntPoly{-1, -1, 0, 0, 1}, P5));
    EXPECT_TRUE(is_irreducible_mod_p(IntPoly{-1, -1, 0, 0, 1}, P2));
    EXPECT_TRUE(is_irreducible_mod_p(IntPoly{-1, -1, 0, 0, 1}, P3));
    EXPECT_FALSE(is_irreducible_mod_p(IntPoly{1, 0, 1}, P2));
    EXPECT_FALSE(is_irreducible_mod_p(IntPoly{1, 1, 1}, P3));  // (x + 2)^2
    EXPECT_THROW(is_irreducible_mod_p(IntPoly{4, 2}, P2), StructuralError);
}

TEST(GfPoly, DdfExamples)
{
    EXPECT_EQ(ddf_degrees(GfPoly(P2, {0, 1, 1})), (std::map<std::size_t, std::size_t>{{1, 2}}));
    EXPECT_EQ(ddf_degrees(reduce(IntPoly{-1, -1, 0, 0, 1}, P2)), (std::map<std::size_t, std::size_t>{{4, 1}}));
    // Both factors of 2F reduce to x^2 + x + 2 mod 3, so the reduction is a square.
    EXPECT_THROW(ddf_degrees(reduce(IntPoly{-5, 4, 5, 2, 1}, P3)), NotSquarefree);
    // mod 7 the two quadratics stay distinct.
    std::size_t total = 0;
    for (const auto& [d, c] : ddf_degrees(reduce(IntPoly{-5, 4, 5, 2, 1}, Prime(7))))
        total += d * c;
    EXPECT_EQ(total, 4u);
}

TEST(GfPolyProperty, RabinMatchesBruteForce)
{
    for (const std::uint64_t p : {2u, 3u}) {
        const auto reducible = phicert::testing::reducible_monic(4, p);
        for (std::size_t d = 1; d <= 4; ++d) {
            for (const auto& c : phicert::testing::all_monic(d, p)) {
                const bool brute = !reducible.contains(c);
                ASSERT_EQ(is_irreducible_mod_p(GfPoly(Prime(p), c)), brute) << "p=" << p << " deg=" << d;
            }
        }
    }
}

TEST(GfPolyProperty, DdfDegreesSumToDegree)
{
    for (const std::uint64_t p : {2u, 3u, 5u}) {
        for (std::size_t d = 1; d <= (p == 5 ? 4u : 6u); ++d) {
            for (const auto& c : phicert::testing::all_monic(d, p)) {
                const GfPoly f(Prime(p), c);
                if (!gf_is_squarefree(f))
                    continue;
                std::size_t total = 0;
                for (const auto& [deg, count] : ddf_degrees(f))
                    total += deg * count;
                ASSERT_EQ(total, d);
                const auto dd = ddf_degrees(f);
                ASSERT_EQ(is_irreducible_mod_p(f), dd.size() == 1 && dd.begin()->first == d && dd.begin()->second == 1);
            }
        }
    }
}

TEST(GfPolyProperty, FrobeniusFixesIrreducibles)
{
    for (const std::uint64_t p : {2u, 3u, 5u}) {
        for (std::size_t d = 1; d <= 4; ++d) {
            for (const auto& c : phicert::testing::all_monic(d, p)) {
                const GfPoly f(Prime(p), c);
                if (is_irreducible_mod_p(f)) {
                    ASSERT_EQ(gf_powmod_frobenius(f, d), gf_mod(GfPoly::x(Prime(p)), f));
                }
            }
        }
    }
}
