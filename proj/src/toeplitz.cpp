#include "hilbtaut/toeplitz.hpp"

#include <stdexcept>
#include <utility>

namespace hilbtaut {

static Z signed_binomial(int sign_exp, long top, long bottom)
{
    Z b = binomial(top, bottom);
    return (sign_exp % 2 != 0) ? Z(-b) : b;
}

IntMatrix build_T_even(int n, int m)
{
    if (n < 0 || m < 1)
        throw std::invalid_argument("T_even: need n >= 0, m >= 1");
    IntMatrix a(m, std::vector<Z>(m));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            a[r][c] = signed_binomial(r - c, 2L * n, n + r - c);
    return a;
}

IntMatrix build_T_odd(int n, int m)
{
    if (n < 0 || m < 1)
        throw std::invalid_argument("T_odd: need n >= 0, m >= 1");
    IntMatrix a(m, std::vector<Z>(m));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            a[r][c] = signed_binomial(r - c, 2L * n + 1, n + r - c + 1);
    return a;
}

IntMatrix build_R(int l, int k, int j)
{
    const int rows = k - l + 1, cols = k - 2 * j + 1;
    if (l < 0 || j < 0 || rows < 1 || cols < 1)
        throw std::invalid_argument("R(l,k,j): need l <= k and 2j <= k");
    IntMatrix a(rows, std::vector<Z>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            a[r][c] = signed_binomial(c - r, l, j + c - r);
    return a;
}

IntMatrix build(const ToeplitzSpec& s)
{
    switch (s.kind) {
    case ToeplitzKind::TEven:
        return build_T_even(s.n, s.m);
    case ToeplitzKind::TOdd:
        return build_T_odd(s.n, s.m);
    case ToeplitzKind::R:
        return build_R(s.l, s.k, s.j);
    }
    throw std::invalid_argument("unknown Toeplitz kind");
}

IntMatrix transpose(const IntMatrix& a)
{
    if (a.empty())
        return {};
    IntMatrix t(a[0].size(), std::vector<Z>(a.size()));
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a[r].size(); ++c)
            t[c][r] = a[r][c];
    return t;
}

// Bareiss elimination in place; returns the rank and the sign of the row permutation.
static int bareiss(IntMatrix& a, int& sign)
{
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    sign = 1;
    Z prev = 1;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int p = rank;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != rank) {
            std::swap(a[p], a[rank]);
            sign = -sign;
        }
        for (int r = rank + 1; r < rows; ++r) {
            for (int cc = c + 1; cc < cols; ++cc) {
                a[r][cc] = a[r][cc] * a[rank][c] - a[r][c] * a[rank][cc];
                mpz_divexact(a[r][cc].get_mpz_t(), a[r][cc].get_mpz_t(), prev.get_mpz_t());
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

Z det_exact(const IntMatrix& a)
{
    const std::size_t m = a.size();
    for (const auto& row : a)
        if (row.size() != m)
            throw std::invalid_argument("det_exact: matrix is not square");
    if (m == 0)
        return 1;
    IntMatrix w = a;
    int sign = 1;
    if (bareiss(w, sign) < static_cast<int>(m))
        return 0;
    return sign * w[m - 1][m - 1];
}

int column_rank(const IntMatrix& a)
{
    IntMatrix w = a;
    int sign = 1;
    return bareiss(w, sign);
}

std::vector<Z> leading_minors(const IntMatrix& a)
{
    std::vector<Z> out;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        IntMatrix b(i, std::vector<Z>(i));
        for (std::size_t r = 0; r < i; ++r)
            for (std::size_t c = 0; c < i; ++c)
                b[r][c] = a[r][c];
        out.push_back(det_exact(b));
    }
    return out;
}

IntMatrix R_trimmed(int l, int k, int j)
{
    const int top = j - (l + 1) / 2, bottom = j - l / 2;
    if (top < 0 || bottom < 0)
        throw std::invalid_argument("R_trimmed: need l <= 2j");
    IntMatrix a = build_R(l, k, j);
    if (top + bottom > static_cast<int>(a.size()))
        throw std::invalid_argument("R_trimmed: too few rows");
    return IntMatrix(a.begin() + top, a.end() - bottom);
}

bool R_trimmed_matches(int l, int k, int j)
{
    const IntMatrix t = R_trimmed(l, k, j);
    const int m = k + 1 - 2 * j;
    IntMatrix ref = l % 2 == 0 ? build_T_even(l / 2, m) : transpose(build_T_odd((l - 1) / 2, m));
    if ((j - (l + 1) / 2) % 2 != 0)
        for (auto& row : ref)
            for (auto& v : row)
                v = -v;
    return t == ref;
}

} // namespace hilbtaut
