#include <gtest/gtest.h>

#include "hilbtaut/toeplitz.hpp"

using namespace hilbtaut;

namespace {

// Laplace expansion along the first row; fine for m <= 7
Z det_laplace(const IntMatrix& a)
{
    const std::size_t m = a.size();
    if (m == 0)
        return 1;
    if (m == 1)
        return a[0][0];
    Z s = 0;
    for (std::size_t c = 0; c < m; ++c) {
        if (a[0][c] == 0)
            continue;
        IntMatrix minor;
        for (std::size_t r = 1; r < m; ++r) {
            std::vector<Z> row;
            for (std::size_t cc = 0; cc < m; ++cc)
                if (cc != c)
                    row.push_back(a[r][cc]);
            minor.push_back(row);
        }
        const Z t = a[0][c] * det_laplace(minor);
        s += c % 2 ? Z(-t) : t;
    }
    return s;
}

} // namespace

TEST(Toeplitz, Shapes)
{
    EXPECT_EQ(build_T_even(1, 3), (IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));
    EXPECT_EQ(build_T_odd(0, 2), (IntMatrix{{1, -1}, {0, 1}}));
    const IntMatrix r = build_R(2, 4, 1);
    EXPECT_EQ(r.size(), 3u);
    EXPECT_EQ(r[0].size(), 3u);
    EXPECT_THROW(build_R(5, 4, 1), std::invalid_argument);
    EXPECT_THROW(build_T_even(-1, 2), std::invalid_argument);
}

TEST(Toeplitz, TridiagonalDeterminant)
{
    // det tridiag(-1, 2, -1) of size m is m + 1
    for (int m = 1; m <= 12; ++m)
        EXPECT_EQ(det_exact(build_T_even(1, m)), m + 1);
    EXPECT_EQ(det_exact(build_T_even(1, 3)), 4);
}

TEST(Toeplitz, BareissMatchesLaplace)
{
    for (int n = 0; n <= 4; ++n)
        for (int m = 1; m <= 6; ++m) {
            EXPECT_EQ(det_exact(build_T_even(n, m)), det_laplace(build_T_even(n, m)));
            EXPECT_EQ(det_exact(build_T_odd(n, m)), det_laplace(build_T_odd(n, m)));
        }
    // a permutation is needed for the first pivot
    const IntMatrix p{{0, 1, 2}, {3, 0, 1}, {1, 1, 0}};
    EXPECT_EQ(det_exact(p), det_laplace(p));
    EXPECT_EQ(det_exact(IntMatrix{{1, 2}, {2, 4}}), 0);
}

TEST(Toeplitz, LeadingMinorsPositive)
{
    for (int n = 0; n <= 6; ++n)
        for (const Z& d : leading_minors(build_T_even(n, 12)))
            EXPECT_GT(d, 0) << "n=" << n;
}

TEST(Toeplitz, OddNonsingular)
{
    for (int n = 0; n <= 6; ++n)
        for (int m = 1; m <= 12; ++m)
            EXPECT_NE(det_exact(build_T_odd(n, m)), 0);
}

TEST(Toeplitz, RFullColumnRank)
{
    for (int k = 0; k <= 12; ++k)
        for (int j = 0; 2 * j <= k; ++j)
            for (int l = 0; l <= 2 * j; ++l)
                EXPECT_EQ(column_rank(build_R(l, k, j)), k - 2 * j + 1) << l << "," << k << "," << j;
}

TEST(Toeplitz, RContainsTBlocks)
{
    for (int k = 0; k <= 12; ++k)
        for (int j = 0; 2 * j <= k; ++j) {
            EXPECT_EQ(build_R(2 * j, k, j), build_T_even(j, k + 1 - 2 * j));
            for (int l = 0; l <= 2 * j; ++l)
                EXPECT_TRUE(R_trimmed_matches(l, k, j)) << l << "," << k << "," << j;
        }
}

TEST(Toeplitz, TrimmedRowCount)
{
    for (int k = 1; k <= 8; ++k)
        for (int j = 1; 2 * j <= k; ++j)
            for (int l = 0; l <= 2 * j; ++l)
                EXPECT_EQ(static_cast<int>(R_trimmed(l, k, j).size()), k + 1 - 2 * j);
}
