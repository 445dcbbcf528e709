#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hilbtaut {

// Dense length-n vector of nonnegative entries (positions 0..n-1).
using Composition = std::vector<int>;
// Weakly decreasing positive parts, no trailing zeros.
using Partition = std::vector<int>;
// Permutation of {0..n-1}: p[i] is the image of i.
using Perm = std::vector<int>;
// Subset of {0..31} as a bitmask.
using Subset = std::uint32_t;

int weight(const std::vector<int>& v);
int popcount(Subset s);
std::vector<int> elements(Subset s);
Subset subset_of(const std::vector<int>& elems);

// All compositions of k of range n, lexicographically decreasing.
std::vector<Composition> enumerate_compositions(int n, int k);
// All partitions of k with at most n parts, in the refined order.
std::vector<Partition> enumerate_partitions(int k, int n);

// Partition attached to a composition (sorted, zeros dropped).
Partition partition_of(const Composition& c);
// Partition padded with zeros to length n.
Composition as_composition(const Partition& p, int n);
bool is_partition(const std::vector<int>& p);

// Reverse lexicographic order: (k) first.
std::strong_ordering compare_rlex(const Partition& a, const Partition& b);
// Length first, ties by reverse lexicographic order. Weights must agree.
std::strong_ordering compare_refined(const Partition& a, const Partition& b);

int m_mu(const Partition& mu);

// alpha[i] = number of parts equal to i (alpha[0] unused).
std::vector<int> exponential_notation(const Partition& mu);
Partition from_exponential(const std::vector<int>& alpha);

std::string format_vector(const std::vector<int>& v);

// Permutations of {0..n-1} in lexicographic order.
std::vector<Perm> all_permutations(int n);
int perm_sign(const Perm& p);
Perm perm_inverse(const Perm& p);
Perm perm_compose(const Perm& a, const Perm& b); // (a*b)(i) = a(b(i))
Subset apply_perm(const Perm& p, Subset s);
// (sigma . c)_{sigma(i)} = c_i
Composition act_on_composition(const Perm& sigma, const Composition& c);

// a: {0..k-1} -> nonempty subsets of {0..n-1}.
struct MultiIndexMap {
    int k = 0;
    int n = 0;
    std::vector<Subset> images;

    bool operator==(const MultiIndexMap&) const = default;
    auto operator<=>(const MultiIndexMap&) const = default;
};

struct MultiIndexInvariants {
    Subset A = 0;          // union of images of size >= 2
    Subset J = 0;          // union of singleton images
    Subset S0 = 0;         // a^{-1}(A), subset of {0..k-1}
    std::vector<int> lambda; // lambda_j = |a^{-1}({j})|
    int l = 0;             // sum |a(i)| - k
    int kk = 0;            // max(0, 2(|A| - 1))
    int t = 0;             // |A cap J|
};

MultiIndexInvariants multiindex_invariants(const MultiIndexMap& a);
bool in_I(const MultiIndexMap& a, int p);
// Elements of I^p for given (k, n), deterministic order.
std::vector<MultiIndexMap> enumerate_I(int k, int n, int p);

// (sigma, tau) . a = sigma a tau^{-1}
MultiIndexMap act(const Perm& sigma, const Perm& tau, const MultiIndexMap& a);

// Element (lambda, A) of B(k,l); A empty when l = 0.
struct BLabel {
    Composition lambda;
    Subset A = 0;

    bool operator==(const BLabel&) const = default;
    auto operator<=>(const BLabel&) const = default;
};

// Element (lambda, mu) of A(k,l): lambda lives on A, mu on the complement.
struct ALabel {
    Partition lambda;
    Partition mu;

    bool operator==(const ALabel&) const = default;
    auto operator<=>(const ALabel&) const = default;
};

BLabel psi(const MultiIndexMap& a);
ALabel eta(const BLabel& b);
BLabel act_on_label(const Perm& sigma, const BLabel& b);
// Fixed section of psi: first l indices go to A, then singletons in increasing order.
MultiIndexMap canonical_section(const BLabel& b, int k);

std::vector<BLabel> quotient_B(int k, int l, int n);
std::vector<ALabel> quotient_A(int k, int l, int n);
std::vector<ALabel> quotient_A0(int k, int l, int n);

enum class StabGroup { H, GxH };

// Order of the stabilizer from the product formula. a must lie in some I^p.
long long stabilizer_order(const MultiIndexMap& a, StabGroup g);
// Brute-force count of (sigma, tau) fixing a; requires n!k! <= 1e5.
long long stabilizer_order_brute(const MultiIndexMap& a, StabGroup g);

struct OrbitCount {
    long long orbits = 0;
    std::vector<long long> orbit_sizes;
    std::vector<MultiIndexMap> representatives;
};

// Orbits of I^p under H or G x H by explicit enumeration; requires n!k! <= 1e5.
OrbitCount brute_force_orbits(int k, int n, int p, StabGroup g);

int sign_epsilon(int i, Subset J);

inline constexpr long long kBruteForceCap = 100000;

} // namespace hilbtaut
