#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilbtaut/combinat.hpp"
#include "hilbtaut/polyjet.hpp"

namespace hilbtaut {

class ResourceCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Tuple (x_lambda) indexed by c_n(k), entries in Q[x_1, y_1, ..., x_n, y_n].
struct SectionTuple {
    int n = 1;
    int k = 0;
    int maxDeg = -1;
    std::map<Composition, TruncPoly> entries;

    static SectionTuple zero(int n, int k, int maxDeg = -1);
    const TruncPoly& at(const Composition& lambda) const;
    TruncPoly& at(const Composition& lambda);
    // (sigma . x)_{sigma lambda} = sigma_* x_lambda
    SectionTuple act(const Perm& sigma) const;
    bool is_invariant() const;
};

// Formal linear combination of the symbols x_lambda.
using FormalCombination = std::map<Composition, Q>;

// sum over beta supported on A, |beta| = l, of (-1)^{beta(a0)} C(l, beta(a0)) x_{beta + mu}.
FormalCombination higher_difference_formal(int l, const Composition& mu, const DiagonalIdeal& A);
TruncPoly higher_difference(const SectionTuple& x, int l, const Composition& mu, const DiagonalIdeal& A);

// Part of P of degree exactly l in (u, v) = (x_{a1} - x_{a0}, y_{a1} - y_{a0}), written in
// diagonal coordinates: slot a0 holds the base point, slot a1 the displacement.
TruncPoly jet_part(const TruncPoly& p, int n, const DiagonalIdeal& A, int l);

struct KernelOptions {
    bool invariant = false;
    // Number of operator levels imposed: E^levels. Negative means all (k - 1).
    int levels = -1;
    // For invariant tuples the conditions of one pair imply those of every other pair.
    bool single_pair_if_invariant = true;
};

// Dimension of {x in E^levels(n,k)} in each homogeneous degree 0..maxDeg.
std::vector<long long> kernel_nullity(int n, int k, int maxDeg, const KernelOptions& opt = {});
std::vector<long long> cumulative(const std::vector<long long>& perDegree);

enum class ExponentRule { Uniform2mMu, PerPair2Mu };

struct GradedDims {
    std::vector<Partition> mus;            // refined order
    std::vector<std::vector<long long>> dims; // dims[i][d]
    std::vector<long long> total() const;  // sum over mu, per degree
};

// Per degree, dim of Stab(mu)-invariants of the intersection of I_{ij}^{e_ij}, i < j <= l(mu).
GradedDims graded_dims(int n, int k, int maxDeg, ExponentRule rule = ExponentRule::Uniform2mMu);
std::vector<long long> graded_dims_mu(int n, const Partition& mu, int maxDeg, ExponentRule rule);

struct FiltrationReport {
    int n = 0, k = 0, maxDeg = 0;
    ExponentRule rule = ExponentRule::Uniform2mMu;
    std::vector<std::vector<long long>> levelNullities; // invariant nullity of E^l, l = 0..k-1
    std::vector<long long> kernel;                    // invariant nullity of the full kernel
    GradedDims graded;
    bool pass = false;
    int firstBadDegree = -1;
    std::string message;
};

FiltrationReport verify_filtration(int n, int k, int maxDeg, ExponentRule rule = ExponentRule::Uniform2mMu);

struct CheckResult {
    bool pass = false;
    long long checks = 0;
    std::string detail;
};

// Delta^l_mu = -Delta^{l-1}_{a0 mu} + Delta^{l-1}_{a1 mu}, formally and on random tuples.
CheckResult verify_recursion(int lMax);

struct TransitionResult {
    CheckResult corrected;         // coefficient -C(l+2, i)
    bool altSignHolds = false; // coefficient (-1)^{i+1} C(l+2, i)
    bool degenerateVanishes = false;
};
TransitionResult verify_transition(int lMax);

struct LocalFormulaCase {
    std::string name;
    bool pass = false;
    Q ratio; // lhs = ratio * rhs
};

struct LocalFormulaResult {
    bool pass = false;
    Q ratio; // common ratio over all cases
    std::vector<LocalFormulaCase> cases;
    bool constantsVanish = false;
    bool tupleInvariant = false;
};

// Invariant operator on a random decomposable invariant tuple versus the closed bracket formulas (k = 3, 4).
LocalFormulaResult verify_invariant_local_formula(int k, unsigned seed = 1);

} // namespace hilbtaut
