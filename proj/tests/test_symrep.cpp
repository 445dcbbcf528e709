#include <gtest/gtest.h>

#include "hilbtaut/symrep.hpp"

using namespace hilbtaut;

TEST(CycleClasses, SizesSumToFactorial)
{
    const std::vector<int> partitionCounts{1, 1, 2, 3, 5, 7, 11, 15};
    for (int k = 1; k <= 7; ++k) {
        const auto cls = cycle_classes(k);
        EXPECT_EQ(static_cast<int>(cls.size()), partitionCounts[k]);
        Z total = 0, signedTotal = 0;
        for (const auto& c : cls) {
            total += c.size;
            signedTotal += c.sign * c.size;
        }
        EXPECT_EQ(total, factorial(k));
        EXPECT_EQ(signedTotal, k == 1 ? 1 : 0);
    }
}

TEST(AntiInvariants, RhoSeries)
{
    EXPECT_EQ(antiinv_dims_rho(3).str(), "3 t^2");
    for (int k = 2; k <= 7; ++k) {
        const GradedDimSeries s = antiinv_dims_rho(k);
        EXPECT_TRUE(s.integral);
        for (int q = 0; q <= 2 * k; ++q)
            EXPECT_EQ(s.at(q), q == k - 1 ? k : 0) << k << "," << q;
    }
}

TEST(AntiInvariants, RSeries)
{
    for (int k = 2; k <= 7; ++k) {
        const GradedDimSeries s = antiinv_dims_R(k);
        EXPECT_TRUE(s.integral);
        for (int q = 0; q <= 2 * k; ++q) {
            const int want = q == k - 1 ? k : q == k ? 2 * k : q == k + 1 ? k : 0;
            EXPECT_EQ(s.at(q), want) << k << "," << q;
        }
    }
}

TEST(AntiInvariants, ExplicitMatricesAgree)
{
    for (int k = 2; k <= 5; ++k) {
        EXPECT_EQ(antiinv_dims_R(k).coeffs, antiinv_dims_R_brute(k).coeffs) << k;
        EXPECT_EQ(antiinv_dims_rho(k).coeffs, antiinv_dims_rho_brute(k).coeffs) << k;
    }
}

TEST(Exterior, WedgeIsAlternating)
{
    const ExtElem e1{{{1}, 1}}, e2{{{2}, 1}};
    const ExtElem a = ext_wedge(e1, e2), b = ext_wedge(e2, e1);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a.begin()->first, (std::vector<int>{1, 2}));
    EXPECT_EQ(a.begin()->second, -b.begin()->second);
    EXPECT_TRUE(ext_wedge(e1, e1).empty());
}

TEST(AppendixMap, SymMap)
{
    for (int k = 2; k <= 4; ++k) {
        const SymMapResult r = verify_sym_map(k);
        EXPECT_TRUE(r.pass) << k;
        EXPECT_TRUE(r.antiInvariant) << k;
        EXPECT_GT(r.ratio, 0);
        EXPECT_EQ(static_cast<int>(r.matrix.size()), k);
    }
    EXPECT_THROW(verify_sym_map(5), std::invalid_argument);
}

TEST(AppendixMap, Omega)
{
    for (int k = 1; k <= 6; ++k) {
        const OmegaResult r = verify_omega(k);
        EXPECT_TRUE(r.alternatingSum) << k;
        EXPECT_TRUE(r.inducedFromBelow) << k;
        EXPECT_TRUE(r.cosetIndependent) << k;
        EXPECT_TRUE(r.pass) << k;
    }
}
