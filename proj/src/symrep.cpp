#include "hilbtaut/symrep.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hilbtaut/linalg.hpp"
#include "hilbtaut/toeplitz.hpp"

namespace hilbtaut {

namespace {

using ZPoly = std::vector<Z>;

ZPoly poly_mul(const ZPoly& a, const ZPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

// Exact division by (1 + t); throws on a nonzero remainder.
ZPoly divide_one_plus_t(const ZPoly& p)
{
    if (p.empty())
        return {};
    ZPoly q(p.size() - 1, 0);
    Z carry = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        q[i] = p[i] - carry;
        carry = q[i];
    }
    if (p.back() != carry)
        throw std::logic_error("character polynomial not divisible by (1 + t)");
    return q;
}

// det(1 + t sigma) on R_k for a permutation of the given cycle type.
ZPoly char_poly_R(const Partition& type)
{
    ZPoly r{1};
    for (int c : type) {
        ZPoly f(c + 1, 0);
        f[0] = 1;
        f[c] = c % 2 == 0 ? -1 : 1; // 1 - (-t)^c
        r = poly_mul(r, f);
    }
    return r;
}

GradedDimSeries average(const std::vector<ZPoly>& signedTerms, int k)
{
    ZPoly sum;
    for (const auto& p : signedTerms) {
        if (sum.size() < p.size())
            sum.resize(p.size(), 0);
        for (std::size_t i = 0; i < p.size(); ++i)
            sum[i] += p[i];
    }
    GradedDimSeries s;
    const Z order = factorial(k);
    for (auto& c : sum) {
        if (c % order != 0)
            s.integral = false;
        s.coeffs.push_back(c / order);
    }
    while (!s.coeffs.empty() && s.coeffs.back() == 0)
        s.coeffs.pop_back();
    return s;
}

// Sorts in place; returns the permutation sign, or 0 on a repeated index.
int sort_sign(std::vector<int>& v)
{
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] == v[i - 1])
            return 0;
    return sign;
}

void add_into(ExtElem& e, std::vector<int> idx, const Q& c)
{
    const int s = sort_sign(idx);
    if (s == 0 || c == 0)
        return;
    auto [it, fresh] = e.emplace(std::move(idx), s * c);
    if (!fresh) {
        it->second += s * c;
        if (it->second == 0)
            e.erase(it);
    }
}

ExtElem scale(ExtElem e, const Q& c)
{
    if (c == 0)
        return {};
    for (auto& [k, v] : e)
        v *= c;
    return e;
}

void accumulate_into(ExtElem& acc, const ExtElem& e, const Q& c = 1)
{
    for (const auto& [idx, v] : e) {
        auto [it, fresh] = acc.emplace(idx, c * v);
        if (!fresh) {
            it->second += c * v;
            if (it->second == 0)
                acc.erase(it);
        }
    }
}

// W = V (x) R_k with basis w_{a,i} at index a*k + i; sigma acts on the R_k factor.
int widx(int a, int i, int k)
{
    return a * k + i;
}

ExtElem act_W(const Perm& sigma, const ExtElem& e, int k)
{
    ExtElem r;
    for (const auto& [idx, c] : e) {
        std::vector<int> img;
        for (int w : idx)
            img.push_back(widx(w / k, sigma[w % k], k));
        add_into(r, std::move(img), c);
    }
    return r;
}

// omega_m on the points pts (|pts| = m + 1), as a combination of sorted index sets of R_k.
ExtElem omega(const std::vector<int>& pts)
{
    const int m1 = static_cast<int>(pts.size());
    ExtElem r;
    for (int i = 0; i < m1; ++i) {
        std::vector<int> hat;
        for (int j = 0; j < m1; ++j)
            if (j != i)
                hat.push_back(pts[j]);
        add_into(r, hat, (m1 - 1 - i) % 2 == 0 ? 1 : -1);
    }
    return r;
}

// S^pV (x) Lambda^p R -> Lambda^p(V (x) R): u_1...u_p (x) e_J -> sum_tau (u_tau1 (x) e_j1) ^ ... ^ (u_taup (x) e_jp).
ExtElem inclusion(const std::vector<int>& us, const ExtElem& rpart, int k)
{
    const int p = static_cast<int>(us.size());
    ExtElem r;
    for (const auto& [J, c] : rpart) {
        if (static_cast<int>(J.size()) != p)
            throw std::invalid_argument("inclusion: degree mismatch");
        for (const auto& tau : all_permutations(p)) {
            std::vector<int> idx;
            for (int t = 0; t < p; ++t)
                idx.push_back(widx(us[tau[t]], J[t], k));
            add_into(r, std::move(idx), c);
        }
    }
    return r;
}

std::vector<int> monomial_factors(int a, int deg)
{
    std::vector<int> f(a, 0);
    f.resize(deg, 1);
    return f;
}

using Tensor = std::map<std::vector<int>, Q>;

void tensor_add(Tensor& t, const std::vector<int>& idx, const Q& c)
{
    auto [it, fresh] = t.emplace(idx, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            t.erase(it);
    }
}

// Unnormalized wedge of the listed basis vectors as an alternating tensor.
Tensor wedge_tensor(const std::vector<int>& idx)
{
    Tensor t;
    for (const auto& p : all_permutations(static_cast<int>(idx.size()))) {
        std::vector<int> v;
        for (int i : p)
            v.push_back(idx[i]);
        tensor_add(t, v, perm_sign(p));
    }
    return t;
}

Tensor ext_to_tensor(const ExtElem& e)
{
    Tensor t;
    for (const auto& [idx, c] : e)
        for (const auto& [v, s] : wedge_tensor(idx))
            tensor_add(t, v, c * s);
    return t;
}

Tensor act_tensor(const Perm& sigma, const Tensor& t)
{
    Tensor r;
    for (const auto& [idx, c] : t) {
        std::vector<int> v;
        for (int i : idx)
            v.push_back(sigma[i]);
        tensor_add(r, v, c);
    }
    return r;
}

std::vector<int> iota_vec(int n)
{
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

} // namespace

std::string GradedDimSeries::str() const
{
    std::ostringstream os;
    bool any = false;
    for (std::size_t q = 0; q < coeffs.size(); ++q) {
        if (coeffs[q] == 0)
            continue;
        if (any)
            os << " + ";
        any = true;
        os << coeffs[q].get_str();
        if (q == 1)
            os << " t";
        else if (q > 1)
            os << " t^" << q;
    }
    return any ? os.str() : "0";
}

std::vector<CycleClass> cycle_classes(int k)
{
    if (k < 1)
        throw std::invalid_argument("cycle_classes: need k >= 1");
    std::vector<CycleClass> out;
    const Z kf = factorial(k);
    for (const auto& type : enumerate_partitions(k, k)) {
        const auto alpha = exponential_notation(type);
        Z z = 1;
        for (std::size_t i = 1; i < alpha.size(); ++i) {
            for (int c = 0; c < alpha[i]; ++c)
                z *= static_cast<unsigned long>(i);
            z *= factorial(alpha[i]);
        }
        const int sign = (k - static_cast<int>(type.size())) % 2 == 0 ? 1 : -1;
        out.push_back({type, kf / z, sign});
    }
    return out;
}

GradedDimSeries antiinv_dims_R(int k)
{
    std::vector<ZPoly> terms;
    for (const auto& cls : cycle_classes(k)) {
        ZPoly p = char_poly_R(cls.type);
        p = poly_mul(p, p);
        for (auto& c : p)
            c *= cls.size * cls.sign;
        terms.push_back(std::move(p));
    }
    return average(terms, k);
}

GradedDimSeries antiinv_dims_rho(int k)
{
    std::vector<ZPoly> terms;
    for (const auto& cls : cycle_classes(k)) {
        ZPoly p = divide_one_plus_t(char_poly_R(cls.type));
        p = poly_mul(p, p);
        for (auto& c : p)
            c *= cls.size * cls.sign;
        terms.push_back(std::move(p));
    }
    return average(terms, k);
}

GradedDimSeries antiinv_dims_R_brute(int k)
{
    if (k < 1 || k > 5)
        throw std::invalid_argument("antiinv_dims_R_brute: need 1 <= k <= 5");
    const int dim = 2 * k;
    const auto perms = all_permutations(k);
    GradedDimSeries s;
    for (int q = 0; q <= dim; ++q) {
        // Rows: images of the basis of Lambda^q under the signed sum over S_k.
        std::vector<std::vector<int>> basis;
        for (unsigned mask = 0; mask < (1u << dim); ++mask)
            if (std::popcount(mask) == q)
                basis.push_back(elements(mask));
        std::map<std::vector<int>, int> col;
        for (std::size_t i = 0; i < basis.size(); ++i)
            col.emplace(basis[i], static_cast<int>(i));
        SparseMatrix m;
        m.ncols = static_cast<int>(basis.size());
        for (const auto& b : basis) {
            ExtElem img;
            for (const auto& p : perms)
                accumulate_into(img, act_W(p, ExtElem{{b, Q(1)}}, k), perm_sign(p));
            std::vector<std::pair<int, Q>> row;
            for (const auto& [idx, c] : img)
                row.emplace_back(col.at(idx), c);
            m.add_row(std::move(row));
        }
        s.coeffs.push_back(exact_rank(m));
    }
    while (!s.coeffs.empty() && s.coeffs.back() == 0)
        s.coeffs.pop_back();
    return s;
}

GradedDimSeries antiinv_dims_rho_brute(int k)
{
    if (k < 2 || k > 5)
        throw std::invalid_argument("antiinv_dims_rho_brute: need 2 <= k <= 5");
    const int d = k - 1, dim = 2 * d;
    std::vector<ZPoly> terms;
    for (const auto& p : all_permutations(k)) {
        // sigma(e_j - e_{k-1}) = f_{sigma j} - f_{sigma(k-1)}, with f_{k-1} = 0.
        IntMatrix M(dim, std::vector<Z>(dim, 0));
        for (int blk = 0; blk < 2; ++blk)
            for (int j = 0; j < d; ++j) {
                if (p[j] != k - 1)
                    M[blk * d + p[j]][blk * d + j] += 1;
                if (p[k - 1] != k - 1)
                    M[blk * d + p[k - 1]][blk * d + j] -= 1;
            }
        // det(1 + tM) = sum_q t^q (sum of principal q x q minors)
        ZPoly poly(dim + 1, 0);
        for (unsigned mask = 0; mask < (1u << dim); ++mask) {
            const auto idx = elements(mask);
            IntMatrix sub(idx.size(), std::vector<Z>(idx.size()));
            for (std::size_t r = 0; r < idx.size(); ++r)
                for (std::size_t c = 0; c < idx.size(); ++c)
                    sub[r][c] = M[idx[r]][idx[c]];
            poly[idx.size()] += det_exact(sub);
        }
        for (auto& c : poly)
            c *= perm_sign(p);
        terms.push_back(std::move(poly));
    }
    return average(terms, k);
}

ExtElem ext_wedge(const ExtElem& a, const ExtElem& b)
{
    ExtElem r;
    for (const auto& [ia, ca] : a)
        for (const auto& [ib, cb] : b) {
            std::vector<int> idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            add_into(r, std::move(idx), ca * cb);
        }
    return r;
}

SymMapResult verify_sym_map(int k)
{
    if (k < 2 || k > 4)
        throw std::invalid_argument("verify_sym_map: k must be 2, 3 or 4");
    const auto perms = all_permutations(k);
    const ExtElem omegaHatTop = scale(omega(iota_vec(k)), Q(1) / Q(factorial(k - 1)));
    const ExtElem omegaHatLow = scale(omega(iota_vec(k - 1)), Q(1) / Q(factorial(k - 2)));

    // Target basis: m (x) omega-hat_{k-1} for the monomials m = v0^a v1^{k-1-a}.
    std::vector<ExtElem> target;
    for (int a = k - 1; a >= 0; --a)
        target.push_back(inclusion(monomial_factors(a, k - 1), omegaHatTop, k));
    std::map<std::vector<int>, int> rowOf;
    for (const auto& t : target)
        for (const auto& [idx, c] : t)
            rowOf.emplace(idx, static_cast<int>(rowOf.size()));

    SymMapResult res;
    res.antiInvariant = true;
    res.matrix.assign(k, std::vector<Q>(2 * (k - 1), 0));
    bool solvable = true;
    int col = 0;
    for (int a = k - 2; a >= 0; --a) {
        for (int v = 0; v < 2; ++v, ++col) {
            ExtElem sigmaLow;
            for (int i = 0; i < k - 1; ++i)
                sigmaLow.emplace(std::vector<int>{widx(v, i, k)}, Q(1));
            // alt: Lambda^{k-2} (x) Lambda^1 -> Lambda^{k-1} carries the factor (k-2)!/(k-1)!
            const ExtElem y = scale(ext_wedge(inclusion(monomial_factors(a, k - 2), omegaHatLow, k), sigmaLow),
                                    frac(1, k - 1));
            ExtElem z;
            for (const auto& p : perms)
                accumulate_into(z, act_W(p, y, k), perm_sign(p));
            z = scale(z, Q(1) / Q(factorial(k - 1)));
            for (const auto& p : perms)
                if (act_W(p, z, k) != scale(z, perm_sign(p)))
                    res.antiInvariant = false;

            // Solve z = sum_b c_b target_b.
            SparseMatrix m;
            m.ncols = k + 1;
            std::map<std::vector<int>, std::vector<std::pair<int, Q>>> rows;
            for (int b = 0; b < k; ++b)
                for (const auto& [idx, c] : target[b])
                    rows[idx].emplace_back(b, c);
            for (const auto& [idx, c] : z)
                rows[idx].emplace_back(k, c);
            for (auto& [idx, entries] : rows)
                m.add_row(std::move(entries));
            const auto ns = nullspace(m);
            if (ns.size() != 1 || ns[0][k] == 0) {
                solvable = false;
                continue;
            }
            for (int b = 0; b < k; ++b)
                res.matrix[b][col] = -ns[0][b] / ns[0][k];
        }
    }
    for (const auto& t : target)
        for (const auto& p : perms)
            if (act_W(p, t, k) != scale(t, perm_sign(p)))
                res.antiInvariant = false;

    // (k-1) sym(v0^a v1^{k-2-a} (x) v) = v0^a v1^{k-2-a} v; row index counts the exponent of v1.
    res.pass = solvable && res.antiInvariant;
    res.ratio = 0;
    col = 0;
    for (int a = k - 2; a >= 0; --a)
        for (int v = 0; v < 2; ++v, ++col)
            for (int b = 0; b < k; ++b) {
                const int v1exp = (k - 2 - a) + v;
                const Q expected = b == v1exp ? 1 : 0;
                const Q got = res.matrix[b][col];
                if (expected == 0) {
                    if (got != 0)
                        res.pass = false;
                } else if (res.ratio == 0) {
                    res.ratio = got;
                } else if (got != res.ratio) {
                    res.pass = false;
                }
            }
    res.pass = res.pass && res.ratio > 0;
    return res;
}

OmegaResult verify_omega(int k)
{
    if (k < 1 || k > 7)
        throw std::invalid_argument("verify_omega: need 1 <= k <= 7");
    OmegaResult r;
    const Tensor top = ext_to_tensor(omega(iota_vec(k)));
    const auto perms = all_permutations(k);

    Tensor alt;
    for (const auto& p : perms)
        tensor_add(alt, std::vector<int>(p.begin(), p.end() - 1), perm_sign(p));
    r.alternatingSum = alt == top;

    if (k < 2) {
        r.inducedFromBelow = r.cosetIndependent = true;
    } else {
        const Tensor low = ext_to_tensor(omega(iota_vec(k - 1)));
        Tensor x;
        for (const auto& [idx, c] : low)
            for (int i = 0; i < k - 1; ++i) {
                std::vector<int> v = idx;
                v.push_back(i);
                tensor_add(x, v, c);
            }
        Tensor sum;
        r.cosetIndependent = true;
        for (const auto& p : perms) {
            const Tensor img = act_tensor(p, x);
            const int s = perm_sign(p);
            for (const auto& [idx, c] : img)
                tensor_add(sum, idx, s * c / Q(factorial(k - 1)));
            if (p[k - 1] == k - 1) {
                Tensor signedImg;
                for (const auto& [idx, c] : img)
                    tensor_add(signedImg, idx, s * c);
                r.cosetIndependent = r.cosetIndependent && signedImg == x;
            }
        }
        r.inducedFromBelow = sum == top;
    }
    r.pass = r.alternatingSum && r.inducedFromBelow && r.cosetIndependent;
    return r;
}

} // namespace hilbtaut
