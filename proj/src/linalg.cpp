#include "hilbtaut/linalg.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace hilbtaut {

void SparseMatrix::add_row(std::vector<std::pair<int, Q>> entries)
{
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow row;
    for (auto& [c, v] : entries) {
        if (c < 0 || c >= ncols)
            throw std::out_of_range("SparseMatrix::add_row: column out of range");
        if (!row.empty() && row.back().first == c)
            row.back().second += v;
        else
            row.emplace_back(c, std::move(v));
        if (row.back().second == 0)
            row.pop_back();
    }
    if (!row.empty())
        rows.push_back(std::move(row));
}

namespace {

// r - f * p, both sorted; drops zeros.
SparseRow axpy(const SparseRow& r, const Q& f, const SparseRow& p)
{
    SparseRow out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.push_back(r[i++]);
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, -f * p[j].second);
            ++j;
        } else {
            Q v = r[i].second - f * p[j].second;
            if (v != 0)
                out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

const Q* find_entry(const SparseRow& r, int col)
{
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    if (it != r.end() && it->first == col)
        return &it->second;
    return nullptr;
}

class IncrementalRref {
public:
    explicit IncrementalRref(int ncols) : pivot_row_(ncols, -1) { rref_.ncols = ncols; }

    SparseRow reduce(SparseRow r) const
    {
        // Pivot rows vanish on the other pivot columns, so each pivot is cleared once.
        std::size_t pos = 0;
        while (pos < r.size()) {
            const int c = r[pos].first;
            const int pr = pivot_row_[c];
            if (pr < 0) {
                ++pos;
                continue;
            }
            const Q f = r[pos].second;
            r = axpy(r, f, rref_.rows[pr]);
            pos = 0;
            while (pos < r.size() && r[pos].first < c)
                ++pos;
        }
        return r;
    }

    bool insert(const SparseRow& row)
    {
        SparseRow r = reduce(row);
        if (r.empty())
            return false;
        const int c = r.front().first;
        const Q lead = r.front().second;
        for (auto& e : r)
            e.second /= lead;
        for (std::size_t i = 0; i < rref_.rows.size(); ++i) {
            if (const Q* v = find_entry(rref_.rows[i], c)) {
                const Q f = *v;
                rref_.rows[i] = axpy(rref_.rows[i], f, r);
            }
        }
        pivot_row_[c] = static_cast<int>(rref_.rows.size());
        rref_.rows.push_back(std::move(r));
        rref_.pivots.push_back(c);
        return true;
    }

    Rref finish() &&
    {
        std::vector<std::size_t> order(rref_.rows.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return rref_.pivots[a] < rref_.pivots[b]; });
        Rref out;
        out.ncols = rref_.ncols;
        for (std::size_t i : order) {
            out.pivots.push_back(rref_.pivots[i]);
            out.rows.push_back(std::move(rref_.rows[i]));
        }
        return out;
    }

    int rank() const { return rref_.rank(); }

private:
    Rref rref_;
    std::vector<int> pivot_row_;
};

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kPrime = (u64(1) << 61) - 1;

u64 mulmod(u64 a, u64 b)
{
    u128 z = static_cast<u128>(a) * b;
    u64 lo = static_cast<u64>(z & kPrime);
    u64 hi = static_cast<u64>(z >> 61);
    u64 s = lo + hi;
    return s >= kPrime ? s - kPrime : s;
}

u64 powmod(u64 a, u64 e)
{
    u64 r = 1;
    while (e) {
        if (e & 1)
            r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

u64 reduce_z(const Z& z)
{
    Z m = z % Z(static_cast<unsigned long>(kPrime));
    if (m < 0)
        m += static_cast<unsigned long>(kPrime);
    return static_cast<u64>(m.get_ui());
}

std::optional<u64> reduce_q(const Q& q)
{
    u64 d = reduce_z(q.get_den());
    if (d == 0)
        return std::nullopt;
    return mulmod(reduce_z(q.get_num()), powmod(d, kPrime - 2));
}

// Indices of a maximal set of rows independent modulo the prime.
std::vector<std::size_t> modular_pivot_rows(const SparseMatrix& m)
{
    const int nc = m.ncols;
    std::vector<std::vector<u64>> piv(nc);
    std::vector<std::size_t> chosen;
    std::vector<u64> r(nc);
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        if (static_cast<int>(chosen.size()) == nc)
            break;
        std::fill(r.begin(), r.end(), 0);
        bool ok = true;
        for (const auto& [c, v] : m.rows[i]) {
            auto x = reduce_q(v);
            if (!x) {
                ok = false;
                break;
            }
            r[c] = *x;
        }
        if (!ok)
            continue;
        for (int c = 0; c < nc; ++c) {
            if (r[c] == 0)
                continue;
            if (piv[c].empty()) {
                const u64 inv = powmod(r[c], kPrime - 2);
                for (int d = c; d < nc; ++d)
                    r[d] = mulmod(r[d], inv);
                piv[c] = r;
                chosen.push_back(i);
                break;
            }
            const u64 f = r[c];
            const auto& p = piv[c];
            for (int d = c; d < nc; ++d) {
                if (p[d] == 0)
                    continue;
                u64 t = mulmod(f, p[d]);
                r[d] = r[d] >= t ? r[d] - t : r[d] + kPrime - t;
            }
        }
    }
    return chosen;
}

} // namespace

std::vector<std::vector<Q>> Rref::nullspace() const
{
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Q>> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Q> v(ncols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (const Q* e = find_entry(rows[i], f))
                v[pivots[i]] = -*e;
        basis.push_back(std::move(v));
    }
    return basis;
}

bool Rref::contains(const SparseRow& v) const
{
    SparseRow r = v;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (const Q* e = find_entry(r, pivots[i])) {
            const Q f = *e;
            r = axpy(r, f, rows[i]);
        }
    }
    return r.empty();
}

Rref exact_rref(const SparseMatrix& m)
{
    IncrementalRref inc(m.ncols);
    std::vector<bool> used(m.rows.size(), false);
    for (std::size_t i : modular_pivot_rows(m)) {
        inc.insert(m.rows[i]);
        used[i] = true;
    }
    // Certification: every remaining row must reduce to zero, otherwise it joins the basis.
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        if (used[i])
            continue;
        if (inc.rank() == m.ncols)
            break;
        inc.insert(m.rows[i]);
    }
    return std::move(inc).finish();
}

int exact_rank(const SparseMatrix& m)
{
    return exact_rref(m).rank();
}

std::vector<std::vector<Q>> nullspace(const SparseMatrix& m)
{
    return exact_rref(m).nullspace();
}

} // namespace hilbtaut
