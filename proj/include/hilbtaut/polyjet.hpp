#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hilbtaut/combinat.hpp"
#include "hilbtaut/linalg.hpp"
#include "hilbtaut/numeric.hpp"

namespace hilbtaut {

// Exponent vector over x_1..x_n, y_1..y_n: slot i is x_{i+1}, slot n+i is y_{i+1}.
using Monomial = std::vector<int>;

struct PolyRing {
    int n = 1;
    int maxDeg = 0;

    int nvars() const { return 2 * n; }
};

// Sparse polynomial over Q, truncated at total degree maxDeg (maxDeg < 0: no truncation).
class TruncPoly {
public:
    TruncPoly() = default;
    TruncPoly(int nvars, int maxDeg) : nvars_(nvars), maxDeg_(maxDeg) {}
    static TruncPoly constant(int nvars, int maxDeg, const Q& c);
    static TruncPoly variable(int nvars, int maxDeg, int var);
    static TruncPoly monomial(int nvars, int maxDeg, const Monomial& m, const Q& c = 1);

    int nvars() const { return nvars_; }
    int max_deg() const { return maxDeg_; }
    const std::map<Monomial, Q>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Q coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Q& c);

    TruncPoly& operator+=(const TruncPoly& o);
    TruncPoly& operator-=(const TruncPoly& o);
    TruncPoly& operator*=(const Q& c);
    friend TruncPoly operator+(TruncPoly a, const TruncPoly& b) { return a += b; }
    friend TruncPoly operator-(TruncPoly a, const TruncPoly& b) { return a -= b; }
    friend TruncPoly operator*(TruncPoly a, const Q& c) { return a *= c; }
    friend TruncPoly operator*(const Q& c, TruncPoly a) { return a *= c; }
    friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b);
    TruncPoly pow(int e) const;
    bool operator==(const TruncPoly& o) const { return terms_ == o.terms_; }

    // Homogeneous component of the given total degree.
    TruncPoly homogeneous_part(int d) const;
    std::string str() const;

private:
    int nvars_ = 0;
    int maxDeg_ = -1;
    std::map<Monomial, Q> terms_;
};

int total_degree(const Monomial& m);
// Monomials of total degree d in nvars variables, lexicographically decreasing.
std::vector<Monomial> monomials_of_degree(int nvars, int d);
// Monomial basis of degree <= maxDeg, by increasing degree.
std::vector<Monomial> monomial_basis(const PolyRing& ring);

// Pair A = {a0 < a1} of point indices (0-based).
struct DiagonalIdeal {
    int a0 = 0;
    int a1 = 1;

    TruncPoly u(const PolyRing& r) const; // x_{a0} - x_{a1}
    TruncPoly v(const PolyRing& r) const; // y_{a0} - y_{a1}
};

// Rewrites a monomial in the coordinates (x_{a0}, y_{a0}, u, v, rest) with
// u = x_{a1} - x_{a0}, v = y_{a1} - y_{a0}; slots a1 and n+a1 now hold u and v.
std::vector<std::pair<Monomial, Q>> to_diagonal_coordinates(const Monomial& m, int n, int a0, int a1);
TruncPoly to_diagonal_coordinates(const TruncPoly& p, int n, int a0, int a1);
// Degree in (u, v) of a monomial already in diagonal coordinates.
int normal_degree(const Monomial& m, int n, int a1);

// Linear functionals on the monomial basis of `ring` cutting out I_A^order.
SparseMatrix jet_conditions(const DiagonalIdeal& A, int order, const PolyRing& ring);
// Same, restricted to the homogeneous degree-d monomials (column order of monomials_of_degree).
SparseMatrix jet_conditions_degree(const DiagonalIdeal& A, int order, int n, int d);
bool in_ideal_power(const TruncPoly& p, const DiagonalIdeal& A, int order, int n);

// Basis of the intersection of I_A^{e_A} in degree <= maxDeg.
std::vector<TruncPoly> intersect_ideal_powers(const std::vector<std::pair<DiagonalIdeal, int>>& pairs,
                                              const PolyRing& ring);
// Dimension of the same intersection in each homogeneous degree 0..maxDeg.
std::vector<int> intersect_ideal_powers_dims(const std::vector<std::pair<DiagonalIdeal, int>>& pairs,
                                             const PolyRing& ring);

// sigma_* : x_i -> x_{sigma(i)}, y_i -> y_{sigma(i)}.
Monomial permute_monomial(const Monomial& m, const Perm& sigma);
TruncPoly symmetrize(const TruncPoly& p, const Perm& sigma);
// (1/n!) sum over S_n of sigma_* p.
TruncPoly invariant_projection(const TruncPoly& p, int n);

// Matrix entries budget for stacked systems; HILBTAUT_MAX_MATRIX_ENTRIES overrides.
long long max_matrix_entries();

} // namespace hilbtaut
