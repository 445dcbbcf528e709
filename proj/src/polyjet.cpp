#include "hilbtaut/polyjet.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hilbtaut {

int total_degree(const Monomial& m)
{
    return std::accumulate(m.begin(), m.end(), 0);
}

TruncPoly TruncPoly::constant(int nvars, int maxDeg, const Q& c)
{
    TruncPoly p(nvars, maxDeg);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

TruncPoly TruncPoly::variable(int nvars, int maxDeg, int var)
{
    Monomial m(nvars, 0);
    m.at(var) = 1;
    return monomial(nvars, maxDeg, m);
}

TruncPoly TruncPoly::monomial(int nvars, int maxDeg, const Monomial& m, const Q& c)
{
    TruncPoly p(nvars, maxDeg);
    p.add_term(m, c);
    return p;
}

Q TruncPoly::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Q(0) : it->second;
}

void TruncPoly::add_term(const Monomial& m, const Q& c)
{
    if (static_cast<int>(m.size()) != nvars_)
        throw std::invalid_argument("TruncPoly: monomial arity mismatch");
    if (c == 0 || (maxDeg_ >= 0 && total_degree(m) > maxDeg_))
        return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

TruncPoly& TruncPoly::operator+=(const TruncPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

TruncPoly& TruncPoly::operator-=(const TruncPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

TruncPoly& TruncPoly::operator*=(const Q& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

TruncPoly operator*(const TruncPoly& a, const TruncPoly& b)
{
    if (a.nvars_ != b.nvars_)
        throw std::invalid_argument("TruncPoly: product of different rings");
    int md = a.maxDeg_;
    if (md < 0 || (b.maxDeg_ >= 0 && b.maxDeg_ < md))
        md = b.maxDeg_;
    TruncPoly r(a.nvars_, md);
    Monomial m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i)
                m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

TruncPoly TruncPoly::pow(int e) const
{
    TruncPoly r = constant(nvars_, maxDeg_, 1);
    for (int i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

TruncPoly TruncPoly::homogeneous_part(int d) const
{
    TruncPoly r(nvars_, maxDeg_);
    for (const auto& [m, c] : terms_)
        if (total_degree(m) == d)
            r.terms_.emplace(m, c);
    return r;
}

std::string TruncPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    const int n = nvars_ / 2;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        const Q a = abs(c);
        const bool unit = total_degree(m) > 0 && a == 1;
        if (!unit)
            os << a.get_str();
        bool any = !unit;
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0)
                continue;
            if (any)
                os << "*";
            any = true;
            os << (i < n ? "x" : "y") << (i % n + 1);
            if (m[i] > 1)
                os << "^" << m[i];
        }
    }
    return os.str();
}

static void monomials_rec(int var, int rest, Monomial& cur, std::vector<Monomial>& out)
{
    const int nv = static_cast<int>(cur.size());
    if (var == nv - 1) {
        cur[var] = rest;
        out.push_back(cur);
        return;
    }
    for (int e = rest; e >= 0; --e) {
        cur[var] = e;
        monomials_rec(var + 1, rest - e, cur, out);
    }
}

std::vector<Monomial> monomials_of_degree(int nvars, int d)
{
    std::vector<Monomial> out;
    if (nvars <= 0 || d < 0)
        return out;
    Monomial cur(nvars, 0);
    monomials_rec(0, d, cur, out);
    return out;
}

std::vector<Monomial> monomial_basis(const PolyRing& ring)
{
    std::vector<Monomial> out;
    for (int d = 0; d <= ring.maxDeg; ++d) {
        auto part = monomials_of_degree(ring.nvars(), d);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

TruncPoly DiagonalIdeal::u(const PolyRing& r) const
{
    return TruncPoly::variable(r.nvars(), r.maxDeg, a0) - TruncPoly::variable(r.nvars(), r.maxDeg, a1);
}

TruncPoly DiagonalIdeal::v(const PolyRing& r) const
{
    return TruncPoly::variable(r.nvars(), r.maxDeg, r.n + a0) -
           TruncPoly::variable(r.nvars(), r.maxDeg, r.n + a1);
}

std::vector<std::pair<Monomial, Q>> to_diagonal_coordinates(const Monomial& m, int n, int a0, int a1)
{
    // x_{a0}^p x_{a1}^q = sum_r C(q,r) x_{a0}^{p+q-r} u^r, likewise for y.
    std::vector<std::pair<Monomial, Q>> out;
    const int qx = m[a1], qy = m[n + a1];
    for (int rx = 0; rx <= qx; ++rx)
        for (int ry = 0; ry <= qy; ++ry) {
            Monomial t = m;
            t[a0] += qx - rx;
            t[a1] = rx;
            t[n + a0] += qy - ry;
            t[n + a1] = ry;
            out.emplace_back(std::move(t), Q(binomial(qx, rx) * binomial(qy, ry)));
        }
    return out;
}

TruncPoly to_diagonal_coordinates(const TruncPoly& p, int n, int a0, int a1)
{
    TruncPoly r(p.nvars(), -1);
    for (const auto& [m, c] : p.terms())
        for (const auto& [t, b] : to_diagonal_coordinates(m, n, a0, a1))
            r.add_term(t, c * b);
    return r;
}

int normal_degree(const Monomial& m, int n, int a1)
{
    return m[a1] + m[n + a1];
}

static SparseMatrix jet_conditions_on(const std::vector<Monomial>& cols, const DiagonalIdeal& A, int order,
                                      int n)
{
    if (order < 1)
        throw std::invalid_argument("jet_conditions: order must be >= 1");
    std::map<Monomial, std::vector<std::pair<int, Q>>> rows;
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (auto& [t, b] : to_diagonal_coordinates(cols[j], n, A.a0, A.a1))
            if (normal_degree(t, n, A.a1) < order)
                rows[t].emplace_back(static_cast<int>(j), std::move(b));
    SparseMatrix mat;
    mat.ncols = static_cast<int>(cols.size());
    for (auto& [t, entries] : rows)
        mat.add_row(std::move(entries));
    return mat;
}

SparseMatrix jet_conditions(const DiagonalIdeal& A, int order, const PolyRing& ring)
{
    return jet_conditions_on(monomial_basis(ring), A, order, ring.n);
}

SparseMatrix jet_conditions_degree(const DiagonalIdeal& A, int order, int n, int d)
{
    return jet_conditions_on(monomials_of_degree(2 * n, d), A, order, n);
}

bool in_ideal_power(const TruncPoly& p, const DiagonalIdeal& A, int order, int n)
{
    if (order <= 0)
        return true;
    const TruncPoly t = to_diagonal_coordinates(p, n, A.a0, A.a1);
    for (const auto& [m, c] : t.terms())
        if (normal_degree(m, n, A.a1) < order)
            return false;
    return true;
}

static SparseMatrix stacked_conditions(const std::vector<std::pair<DiagonalIdeal, int>>& pairs, int n, int d)
{
    const auto cols = monomials_of_degree(2 * n, d);
    SparseMatrix all;
    all.ncols = static_cast<int>(cols.size());
    for (const auto& [A, e] : pairs) {
        if (e < 0)
            throw std::invalid_argument("intersect_ideal_powers: negative exponent");
        if (e == 0)
            continue;
        auto part = jet_conditions_on(cols, A, e, n);
        for (auto& r : part.rows)
            all.rows.push_back(std::move(r));
    }
    return all;
}

std::vector<TruncPoly> intersect_ideal_powers(const std::vector<std::pair<DiagonalIdeal, int>>& pairs,
                                              const PolyRing& ring)
{
    std::vector<TruncPoly> basis;
    for (int d = 0; d <= ring.maxDeg; ++d) {
        const auto cols = monomials_of_degree(ring.nvars(), d);
        for (const auto& v : nullspace(stacked_conditions(pairs, ring.n, d))) {
            TruncPoly p(ring.nvars(), ring.maxDeg);
            for (std::size_t j = 0; j < cols.size(); ++j)
                p.add_term(cols[j], v[j]);
            basis.push_back(std::move(p));
        }
    }
    return basis;
}

std::vector<int> intersect_ideal_powers_dims(const std::vector<std::pair<DiagonalIdeal, int>>& pairs,
                                             const PolyRing& ring)
{
    std::vector<int> dims;
    for (int d = 0; d <= ring.maxDeg; ++d) {
        const auto m = stacked_conditions(pairs, ring.n, d);
        dims.push_back(m.ncols - exact_rank(m));
    }
    return dims;
}

Monomial permute_monomial(const Monomial& m, const Perm& sigma)
{
    const int n = static_cast<int>(sigma.size());
    Monomial r(m.size(), 0);
    for (int i = 0; i < n; ++i) {
        r[sigma[i]] = m[i];
        r[n + sigma[i]] = m[n + i];
    }
    return r;
}

TruncPoly symmetrize(const TruncPoly& p, const Perm& sigma)
{
    if (static_cast<int>(sigma.size()) * 2 != p.nvars())
        throw std::invalid_argument("symmetrize: permutation size mismatch");
    TruncPoly r(p.nvars(), p.max_deg());
    for (const auto& [m, c] : p.terms())
        r.add_term(permute_monomial(m, sigma), c);
    return r;
}

TruncPoly invariant_projection(const TruncPoly& p, int n)
{
    TruncPoly r(p.nvars(), p.max_deg());
    const auto perms = all_permutations(n);
    for (const auto& s : perms)
        r += symmetrize(p, s);
    r *= Q(1, static_cast<unsigned long>(perms.size()));
    return r;
}

long long max_matrix_entries()
{
    if (const char* s = std::getenv("HILBTAUT_MAX_MATRIX_ENTRIES")) {
        char* end = nullptr;
        long long v = std::strtoll(s, &end, 10);
        if (end != s && v > 0)
            return v;
    }
    return 2000000;
}

} // namespace hilbtaut
