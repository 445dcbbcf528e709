#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "hilbtaut/combinat.hpp"

using namespace hilbtaut;

namespace {

long long binom_ll(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// partitions of k with parts <= maxPart and at most len parts
long long count_partitions(int k, int maxPart, int len)
{
    if (k == 0)
        return 1;
    if (len == 0 || maxPart == 0)
        return 0;
    long long c = 0;
    for (int p = std::min(k, maxPart); p >= 1; --p)
        c += count_partitions(k - p, p, len - 1);
    return c;
}

MultiIndexMap make_map(int n, std::vector<std::vector<int>> imgs)
{
    MultiIndexMap a;
    a.k = static_cast<int>(imgs.size());
    a.n = n;
    for (auto& s : imgs) {
        for (auto& x : s)
            --x; // 1-based in the test text
        a.images.push_back(subset_of(s));
    }
    return a;
}

} // namespace

TEST(Compositions, CountsAndOrder)
{
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= 6; ++k) {
            const auto cs = enumerate_compositions(n, k);
            EXPECT_EQ(static_cast<long long>(cs.size()), binom_ll(n + k - 1, n - 1));
            for (const auto& c : cs) {
                EXPECT_EQ(static_cast<int>(c.size()), n);
                EXPECT_EQ(weight(c), k);
            }
            EXPECT_TRUE(std::is_sorted(cs.begin(), cs.end(), std::greater<>()));
            EXPECT_EQ(std::set<Composition>(cs.begin(), cs.end()).size(), cs.size());
        }
    EXPECT_EQ(enumerate_compositions(2, 2), (std::vector<Composition>{{2, 0}, {1, 1}, {0, 2}}));
    EXPECT_EQ(enumerate_compositions(3, 3).size(), 10u);
    EXPECT_EQ(enumerate_compositions(4, 4).size(), 35u);
}

TEST(Partitions, Enumeration)
{
    EXPECT_EQ(enumerate_partitions(4, 4), (std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
    EXPECT_EQ(enumerate_partitions(3, 2), (std::vector<Partition>{{3}, {2, 1}}));
    EXPECT_EQ(enumerate_partitions(0, 3), (std::vector<Partition>{{}}));
    for (int k = 0; k <= 8; ++k)
        for (int n = 1; n <= 8; ++n)
            EXPECT_EQ(static_cast<long long>(enumerate_partitions(k, n).size()), count_partitions(k, k, n));
}

TEST(Partitions, RefinedOrderOfSix)
{
    const std::vector<Partition> want{{6},       {5, 1},       {4, 2},          {3, 3},          {4, 1, 1}, {3, 2, 1},
                                      {2, 2, 2}, {3, 1, 1, 1}, {2, 2, 1, 1},    {2, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}};
    EXPECT_EQ(enumerate_partitions(6, 6), want);
    EXPECT_EQ(compare_refined({3, 3}, {4, 1, 1}), std::strong_ordering::less);
    EXPECT_EQ(compare_refined({2, 1}, {2, 1}), std::strong_ordering::equal);
}

TEST(Partitions, RefinedAgreesWithRlexUpToFive)
{
    for (int k = 1; k <= 5; ++k) {
        const auto ps = enumerate_partitions(k, k);
        for (const auto& a : ps)
            for (const auto& b : ps)
                EXPECT_EQ(compare_refined(a, b), compare_rlex(a, b));
    }
    EXPECT_NE(compare_refined({3, 3}, {4, 1, 1}), compare_rlex({3, 3}, {4, 1, 1}));
}

TEST(Partitions, MMuAndExponentialNotation)
{
    EXPECT_EQ(m_mu({4}), 0);
    EXPECT_EQ(m_mu({2, 2}), 2);
    EXPECT_EQ(m_mu({2, 1, 1}), 1);
    for (int k = 1; k <= 7; ++k)
        for (const auto& p : enumerate_partitions(k, k))
            EXPECT_EQ(from_exponential(exponential_notation(p)), p);
    EXPECT_EQ(partition_of({0, 2, 1, 2}), (Partition{2, 2, 1}));
}

TEST(Permutations, SignIsMultiplicative)
{
    const auto ps = all_permutations(4);
    EXPECT_EQ(ps.size(), 24u);
    for (const auto& a : ps)
        for (const auto& b : ps) {
            EXPECT_EQ(perm_sign(perm_compose(a, b)), perm_sign(a) * perm_sign(b));
            EXPECT_EQ(act_on_composition(perm_compose(a, b), {3, 1, 0, 2}),
                      act_on_composition(a, act_on_composition(b, {3, 1, 0, 2})));
        }
    EXPECT_EQ(act_on_composition({1, 0}, {2, 0}), (Composition{0, 2}));
}

TEST(MultiIndex, Invariants)
{
    {
        const auto inv = multiindex_invariants(make_map(2, {{1, 2}, {1}, {1}}));
        EXPECT_EQ(inv.A, subset_of({0, 1}));
        EXPECT_EQ(inv.S0, subset_of({0}));
        EXPECT_EQ(inv.J, subset_of({0}));
        EXPECT_EQ(inv.lambda, (std::vector<int>{2, 0}));
        EXPECT_EQ(inv.l, 1);
        EXPECT_EQ(inv.t, 1);
    }
    {
        const auto inv = multiindex_invariants(make_map(2, {{1}, {1}, {2}}));
        EXPECT_EQ(inv.A, 0u);
        EXPECT_EQ(inv.J, subset_of({0, 1}));
        EXPECT_EQ(inv.lambda, (std::vector<int>{2, 1}));
        EXPECT_EQ(inv.l, 0);
        EXPECT_EQ(inv.t, 0);
    }
    {
        const auto inv = multiindex_invariants(make_map(3, {{1, 2}, {1, 2}}));
        EXPECT_EQ(inv.A, subset_of({0, 1}));
        EXPECT_EQ(inv.J, 0u);
        EXPECT_EQ(inv.S0, subset_of({0, 1}));
        EXPECT_EQ(inv.l, 2);
        EXPECT_EQ(inv.t, 0);
    }
}

TEST(Quotients, BSmallCases)
{
    // B(k,0) is c_n(k)
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k)
            EXPECT_EQ(quotient_B(k, 0, n).size(), enumerate_compositions(n, k).size());
    // n = 2: A = {1,2} and lambda runs over c_2(2), three labels
    EXPECT_EQ(quotient_B(3, 1, 2).size(), 3u);
    EXPECT_EQ(quotient_B(4, 1, 3).size(), 30u);
}

TEST(Quotients, LabelsHaveTheRightShape)
{
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 5; ++k)
            for (int l = 0; l <= k; ++l) {
                for (const auto& b : quotient_B(k, l, n))
                    EXPECT_EQ(popcount(b.A), std::min(2, 2 * l));
                for (const auto& a : quotient_A(k, l, n)) {
                    EXPECT_EQ(weight(a.lambda) + weight(a.mu), k - l);
                    EXPECT_LE(static_cast<int>(a.lambda.size()), std::min(2, 2 * l));
                }
            }
}

TEST(Quotients, ASetsFromTheDecompositions)
{
    EXPECT_EQ(quotient_A0(3, 1, 4), (std::vector<ALabel>{{{2}, {}}, {{1}, {1}}}));
    EXPECT_EQ(quotient_A0(4, 1, 4),
              (std::vector<ALabel>{{{3}, {}}, {{2, 1}, {}}, {{2}, {1}}, {{1}, {2}}, {{1}, {1, 1}}}));
    EXPECT_EQ(quotient_A0(4, 3, 4), (std::vector<ALabel>{{{1}, {}}}));
}

TEST(Quotients, MatchBruteForceOrbits)
{
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 4; ++k)
            for (int l = 0; l <= k; ++l) {
                EXPECT_EQ(static_cast<long long>(quotient_B(k, l, n).size()),
                          brute_force_orbits(k, n, l, StabGroup::H).orbits);
                EXPECT_EQ(static_cast<long long>(quotient_A(k, l, n).size()),
                          brute_force_orbits(k, n, l, StabGroup::GxH).orbits);
            }
}

TEST(Quotients, PsiIsConstantOnHOrbits)
{
    for (const auto& rep : brute_force_orbits(3, 3, 1, StabGroup::H).representatives)
        for (const auto& tau : all_permutations(3))
            EXPECT_EQ(psi(act({0, 1, 2}, tau, rep)), psi(rep));
    for (const auto& b : quotient_B(4, 1, 3))
        EXPECT_EQ(psi(canonical_section(b, 4)), b);
}

TEST(Stabilizers, ProductFormulaMatchesBruteForce)
{
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 4; ++k)
            for (int l = 0; l <= k; ++l)
                for (auto g : {StabGroup::H, StabGroup::GxH})
                    for (const auto& rep : brute_force_orbits(k, n, l, g).representatives)
                        EXPECT_EQ(stabilizer_order(rep, g), stabilizer_order_brute(rep, g));
}

TEST(Stabilizers, OrbitStabilizer)
{
    const OrbitCount oc = brute_force_orbits(4, 3, 1, StabGroup::GxH);
    long long total = 0;
    for (std::size_t i = 0; i < oc.representatives.size(); ++i) {
        EXPECT_EQ(oc.orbit_sizes[i] * stabilizer_order_brute(oc.representatives[i], StabGroup::GxH), 24 * 6);
        total += oc.orbit_sizes[i];
    }
    EXPECT_EQ(static_cast<std::size_t>(total), enumerate_I(4, 3, 1).size());
}

TEST(MultiIndex, MembershipRule)
{
    // I^p: l(a) = p and |A(a)| <= 2
    for (const auto& a : enumerate_I(3, 3, 1)) {
        const auto inv = multiindex_invariants(a);
        EXPECT_EQ(inv.l, 1);
        EXPECT_LE(inv.kk, 2);
    }
    EXPECT_FALSE(in_I(make_map(3, {{1, 2}, {2, 3}}), 2));
    EXPECT_TRUE(in_I(make_map(3, {{1, 2}, {1, 2}}), 2));
}
