#pragma once

#include <vector>

#include "hilbtaut/numeric.hpp"

namespace hilbtaut {

using IntMatrix = std::vector<std::vector<Z>>;

enum class ToeplitzKind { TEven, TOdd, R };

struct ToeplitzSpec {
    ToeplitzKind kind = ToeplitzKind::TEven;
    int n = 1; // T_even / T_odd band parameter
    int m = 1; // T_even / T_odd size
    int l = 0; // R(l, k, j)
    int k = 0;
    int j = 0;
};

// (m x m), entry (r, c) = (-1)^{r-c} C(2n, n + r - c).
IntMatrix build_T_even(int n, int m);
// (m x m), entry (r, c) = (-1)^{r-c} C(2n+1, n + r - c + 1).
IntMatrix build_T_odd(int n, int m);
// (k-l+1) x (k-2j+1), entry (r, c) = (-1)^{c-r} C(l, j + c - r).
IntMatrix build_R(int l, int k, int j);
IntMatrix build(const ToeplitzSpec& s);

// Fraction-free (Bareiss) elimination.
Z det_exact(const IntMatrix& a);
int column_rank(const IntMatrix& a);
// det of the top-left i x i blocks, i = 1..m.
std::vector<Z> leading_minors(const IntMatrix& a);

// R(l,k,j) without its first j - floor((l+1)/2) and last j - floor(l/2) rows.
IntMatrix R_trimmed(int l, int k, int j);
// The trimmed matrix equals (-1)^{j - floor((l+1)/2)} T_even(l/2, k+1-2j) for even l and
// the same sign times the transpose of T_odd((l-1)/2, k+1-2j) for odd l.
bool R_trimmed_matches(int l, int k, int j);

IntMatrix transpose(const IntMatrix& a);

} // namespace hilbtaut
