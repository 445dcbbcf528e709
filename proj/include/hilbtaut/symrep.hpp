#pragma once

#include <map>
#include <string>
#include <vector>

#include "hilbtaut/combinat.hpp"
#include "hilbtaut/numeric.hpp"

namespace hilbtaut {

struct CycleClass {
    Partition type;
    Z size;   // number of permutations of this cycle type
    int sign; // (-1)^{k - #cycles}
};

std::vector<CycleClass> cycle_classes(int k);

// Coefficient of t^q is the dimension of the anti-invariants in degree q.
struct GradedDimSeries {
    std::vector<Z> coeffs;
    bool integral = true; // every signed average was divisible by k!

    Z at(int q) const { return q >= 0 && q < static_cast<int>(coeffs.size()) ? coeffs[q] : Z(0); }
    std::string str() const; // e.g. "3 t^2"
};

// Anti-invariants of Lambda^q(V (x) rho_k), dim V = 2, by characters over cycle types.
GradedDimSeries antiinv_dims_rho(int k);
// Anti-invariants of Lambda^q(V (x) R_k).
GradedDimSeries antiinv_dims_R(int k);
// Same numbers from explicit matrices: projector rank (R_k) and det(1 + t M) per group element (rho_k).
GradedDimSeries antiinv_dims_R_brute(int k);
GradedDimSeries antiinv_dims_rho_brute(int k);

// Element of an exterior algebra: sorted index sets with coefficients.
using ExtElem = std::map<std::vector<int>, Q>;
ExtElem ext_wedge(const ExtElem& a, const ExtElem& b);

struct SymMapResult {
    bool pass = false;
    Q ratio;                           // common factor between the computed map and (k-1) sym
    std::vector<std::vector<Q>> matrix; // rows: monomials of S^{k-1}V, cols: (u, v) pairs
    bool antiInvariant = false;
};

// The map of invariants S^{k-2}V (x) V -> S^{k-1}V against (k-1) sym, k in {2, 3, 4}.
SymMapResult verify_sym_map(int k);

struct OmegaResult {
    bool pass = false;
    bool alternatingSum = false;   // sum_tau sign(tau) e_tau(1) (x) ... (x) e_tau(k-1) = omega_{k-1}
    bool inducedFromBelow = false; // (1/(k-1)!) sum_tau sign(tau) tau_*[omega_{k-2} (x) sigma_{k-1}] = omega_{k-1}
    bool cosetIndependent = false;
};

OmegaResult verify_omega(int k);

} // namespace hilbtaut
