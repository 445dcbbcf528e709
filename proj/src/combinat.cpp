#include "hilbtaut/combinat.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hilbtaut/numeric.hpp"

namespace hilbtaut {

int weight(const std::vector<int>& v)
{
    return std::accumulate(v.begin(), v.end(), 0);
}

int popcount(Subset s)
{
    return std::popcount(s);
}

std::vector<int> elements(Subset s)
{
    std::vector<int> out;
    for (int i = 0; s; ++i, s >>= 1)
        if (s & 1u)
            out.push_back(i);
    return out;
}

Subset subset_of(const std::vector<int>& elems)
{
    Subset s = 0;
    for (int e : elems)
        s |= Subset(1) << e;
    return s;
}

static void compositions_rec(int pos, int rest, Composition& cur, std::vector<Composition>& out)
{
    const int n = static_cast<int>(cur.size());
    if (pos == n - 1) {
        cur[pos] = rest;
        out.push_back(cur);
        return;
    }
    for (int v = rest; v >= 0; --v) {
        cur[pos] = v;
        compositions_rec(pos + 1, rest - v, cur, out);
    }
}

std::vector<Composition> enumerate_compositions(int n, int k)
{
    if (n < 1 || k < 0)
        throw std::invalid_argument("enumerate_compositions: need n >= 1, k >= 0");
    std::vector<Composition> out;
    Composition cur(n, 0);
    compositions_rec(0, k, cur, out);
    return out;
}

static void partitions_rec(int rest, int maxpart, int slots, Partition& cur, std::vector<Partition>& out)
{
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    if (slots == 0)
        return;
    for (int v = std::min(rest, maxpart); v >= 1; --v) {
        cur.push_back(v);
        partitions_rec(rest - v, v, slots - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> enumerate_partitions(int k, int n)
{
    if (k < 0 || n < 1)
        throw std::invalid_argument("enumerate_partitions: need k >= 0, n >= 1");
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(k, k, n, cur, out);
    std::stable_sort(out.begin(), out.end(),
                     [](const Partition& a, const Partition& b) { return compare_refined(a, b) < 0; });
    return out;
}

Partition partition_of(const Composition& c)
{
    Partition p;
    for (int v : c)
        if (v > 0)
            p.push_back(v);
    std::sort(p.begin(), p.end(), std::greater<int>());
    return p;
}

Composition as_composition(const Partition& p, int n)
{
    if (static_cast<int>(p.size()) > n)
        throw std::invalid_argument("partition longer than range");
    Composition c(n, 0);
    std::copy(p.begin(), p.end(), c.begin());
    return c;
}

bool is_partition(const std::vector<int>& p)
{
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0)
            return false;
        if (i > 0 && p[i] > p[i - 1])
            return false;
    }
    return true;
}

std::strong_ordering compare_rlex(const Partition& a, const Partition& b)
{
    const std::size_t len = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
        const int x = i < a.size() ? a[i] : 0;
        const int y = i < b.size() ? b[i] : 0;
        if (x != y)
            return x > y ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering compare_refined(const Partition& a, const Partition& b)
{
    if (weight(a) != weight(b))
        throw std::invalid_argument("compare_refined: weight mismatch");
    if (a.size() != b.size())
        return a.size() <=> b.size();
    return compare_rlex(a, b);
}

int m_mu(const Partition& mu)
{
    if (mu.empty())
        throw std::invalid_argument("m_mu: empty partition");
    if (mu.size() == 1)
        return 0;
    return mu.back();
}

std::vector<int> exponential_notation(const Partition& mu)
{
    const int top = mu.empty() ? 0 : mu.front();
    std::vector<int> alpha(top + 1, 0);
    for (int v : mu)
        ++alpha[v];
    return alpha;
}

Partition from_exponential(const std::vector<int>& alpha)
{
    Partition p;
    for (int i = static_cast<int>(alpha.size()) - 1; i >= 1; --i)
        for (int c = 0; c < alpha[i]; ++c)
            p.push_back(i);
    return p;
}

std::string format_vector(const std::vector<int>& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

std::vector<Perm> all_permutations(int n)
{
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do
        out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int perm_sign(const Perm& p)
{
    int s = 1;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i])
            continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0)
            s = -s;
    }
    return s;
}

Perm perm_inverse(const Perm& p)
{
    Perm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        q[p[i]] = static_cast<int>(i);
    return q;
}

Perm perm_compose(const Perm& a, const Perm& b)
{
    Perm c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        c[i] = a[b[i]];
    return c;
}

Subset apply_perm(const Perm& p, Subset s)
{
    Subset r = 0;
    for (int e : elements(s))
        r |= Subset(1) << p[e];
    return r;
}

Composition act_on_composition(const Perm& sigma, const Composition& c)
{
    Composition r(c.size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        r[sigma[i]] = c[i];
    return r;
}

MultiIndexInvariants multiindex_invariants(const MultiIndexMap& a)
{
    if (static_cast<int>(a.images.size()) != a.k)
        throw std::invalid_argument("multi-index map: wrong number of images");
    MultiIndexInvariants r;
    r.lambda.assign(a.n, 0);
    int total = 0;
    for (Subset s : a.images) {
        if (s == 0 || (a.n < 32 && (s >> a.n) != 0))
            throw std::invalid_argument("multi-index map: invalid image");
        const int c = popcount(s);
        total += c;
        if (c >= 2)
            r.A |= s;
        else
            r.J |= s;
    }
    for (int i = 0; i < a.k; ++i) {
        const Subset s = a.images[i];
        if (popcount(s) == 1)
            ++r.lambda[std::countr_zero(s)];
        if (popcount(s) >= 2 && s == r.A)
            r.S0 |= Subset(1) << i;
    }
    r.l = total - a.k;
    r.kk = std::max(0, 2 * (popcount(r.A) - 1));
    r.t = popcount(r.A & r.J);
    return r;
}

bool in_I(const MultiIndexMap& a, int p)
{
    const auto inv = multiindex_invariants(a);
    return inv.l == p && inv.kk <= 2;
}

std::vector<MultiIndexMap> enumerate_I(int k, int n, int p)
{
    // All non-singleton images of an element of I^p equal one pair A, used p times.
    std::vector<MultiIndexMap> out;
    if (p < 0 || p > k)
        return out;
    std::vector<Subset> pairs;
    if (p == 0)
        pairs.push_back(0);
    else
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                pairs.push_back((Subset(1) << i) | (Subset(1) << j));
    for (Subset A : pairs) {
        for (Subset S0 = 0; S0 < (Subset(1) << k); ++S0) {
            if (popcount(S0) != p)
                continue;
            const int free = k - p;
            long long total = 1;
            for (int i = 0; i < free; ++i)
                total *= n;
            for (long long code = 0; code < total; ++code) {
                MultiIndexMap a{k, n, std::vector<Subset>(k, 0)};
                long long c = code;
                for (int i = 0; i < k; ++i) {
                    if (S0 & (Subset(1) << i)) {
                        a.images[i] = A;
                    } else {
                        a.images[i] = Subset(1) << static_cast<int>(c % n);
                        c /= n;
                    }
                }
                out.push_back(std::move(a));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

MultiIndexMap act(const Perm& sigma, const Perm& tau, const MultiIndexMap& a)
{
    MultiIndexMap r{a.k, a.n, std::vector<Subset>(a.k, 0)};
    // (sigma a tau^{-1})(tau(i)) = sigma(a(i))
    for (int i = 0; i < a.k; ++i)
        r.images[tau[i]] = apply_perm(sigma, a.images[i]);
    return r;
}

BLabel psi(const MultiIndexMap& a)
{
    const auto inv = multiindex_invariants(a);
    return BLabel{inv.lambda, inv.A};
}

ALabel eta(const BLabel& b)
{
    Composition onA, offA;
    for (std::size_t j = 0; j < b.lambda.size(); ++j) {
        if (b.A & (Subset(1) << j))
            onA.push_back(b.lambda[j]);
        else
            offA.push_back(b.lambda[j]);
    }
    return ALabel{partition_of(onA), partition_of(offA)};
}

BLabel act_on_label(const Perm& sigma, const BLabel& b)
{
    return BLabel{act_on_composition(sigma, b.lambda), apply_perm(sigma, b.A)};
}

MultiIndexMap canonical_section(const BLabel& b, int k)
{
    const int n = static_cast<int>(b.lambda.size());
    const int l = k - weight(b.lambda);
    if (l < 0 || (l == 0) != (b.A == 0))
        throw std::invalid_argument("canonical_section: inconsistent label");
    MultiIndexMap a{k, n, {}};
    for (int i = 0; i < l; ++i)
        a.images.push_back(b.A);
    for (int j = 0; j < n; ++j)
        for (int c = 0; c < b.lambda[j]; ++c)
            a.images.push_back(Subset(1) << j);
    return a;
}

std::vector<BLabel> quotient_B(int k, int l, int n)
{
    if (l < 0 || l > k)
        throw std::invalid_argument("quotient_B: need 0 <= l <= k");
    std::vector<BLabel> out;
    const auto comps = enumerate_compositions(n, k - l);
    if (l == 0) {
        for (const auto& c : comps)
            out.push_back(BLabel{c, 0});
        return out;
    }
    for (const auto& c : comps)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                out.push_back(BLabel{c, (Subset(1) << i) | (Subset(1) << j)});
    return out;
}

std::vector<ALabel> quotient_A(int k, int l, int n)
{
    if (l < 0 || l > k)
        throw std::invalid_argument("quotient_A: need 0 <= l <= k");
    const int asize = std::min(2, 2 * l);
    std::vector<ALabel> out;
    if (asize > n)
        return out;
    for (int w = k - l; w >= 0; --w) {
        const auto lams = asize == 0 ? std::vector<Partition>{Partition{}}
                                     : enumerate_partitions(w, asize);
        for (const auto& lam : lams) {
            if (asize == 0 && w != 0)
                continue;
            const int rest = k - l - w;
            if (n - asize < 1) {
                if (rest == 0)
                    out.push_back(ALabel{lam, {}});
                continue;
            }
            for (const auto& mu : enumerate_partitions(rest, n - asize))
                out.push_back(ALabel{lam, mu});
        }
    }
    return out;
}

std::vector<ALabel> quotient_A0(int k, int l, int n)
{
    if (l < 1 || l > k - 1)
        throw std::invalid_argument("quotient_A0: need 1 <= l <= k-1");
    std::vector<ALabel> out;
    for (auto& x : quotient_A(k, l, n)) {
        if (x.lambda.empty())
            continue;
        if (x.lambda.size() == 2 && x.lambda[0] == x.lambda[1])
            continue;
        out.push_back(std::move(x));
    }
    return out;
}

long long stabilizer_order(const MultiIndexMap& a, StabGroup g)
{
    const auto inv = multiindex_invariants(a);
    if (inv.kk > 2)
        throw std::invalid_argument("stabilizer_order: map not in any I^p");
    long long h = factorial_ll(popcount(inv.S0));
    for (int j = 0; j < a.n; ++j)
        h *= factorial_ll(inv.lambda[j]);
    if (g == StabGroup::H)
        return h;
    // sigma must preserve A and the level sets of lambda.
    std::map<std::pair<bool, int>, int> classes;
    for (int j = 0; j < a.n; ++j)
        ++classes[{(inv.A >> j) & 1u, inv.lambda[j]}];
    long long s = 1;
    for (const auto& [key, size] : classes)
        s *= factorial_ll(size);
    return s * h;
}

static void check_cap(int k, int n)
{
    if (factorial_ll(n) * factorial_ll(k) > kBruteForceCap)
        throw std::length_error("brute-force group enumeration beyond n!k! <= 1e5");
}

long long stabilizer_order_brute(const MultiIndexMap& a, StabGroup g)
{
    check_cap(a.k, a.n);
    const auto sigmas = g == StabGroup::H ? std::vector<Perm>{[&] {
        Perm id(a.n);
        std::iota(id.begin(), id.end(), 0);
        return id;
    }()}
                                          : all_permutations(a.n);
    const auto taus = all_permutations(a.k);
    long long count = 0;
    for (const auto& s : sigmas)
        for (const auto& t : taus)
            if (act(s, t, a) == a)
                ++count;
    return count;
}

OrbitCount brute_force_orbits(int k, int n, int p, StabGroup g)
{
    check_cap(k, n);
    const auto elems = enumerate_I(k, n, p);
    std::map<MultiIndexMap, std::size_t> index;
    for (std::size_t i = 0; i < elems.size(); ++i)
        index.emplace(elems[i], i);
    std::vector<Perm> sigmas;
    if (g == StabGroup::GxH)
        sigmas = all_permutations(n);
    else {
        Perm id(n);
        std::iota(id.begin(), id.end(), 0);
        sigmas.push_back(id);
    }
    const auto taus = all_permutations(k);
    std::vector<bool> seen(elems.size(), false);
    OrbitCount r;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (seen[i])
            continue;
        std::set<MultiIndexMap> orbit;
        for (const auto& s : sigmas)
            for (const auto& t : taus)
                orbit.insert(act(s, t, elems[i]));
        for (const auto& o : orbit) {
            auto it = index.find(o);
            if (it == index.end())
                throw std::logic_error("I^p not stable under the group action");
            seen[it->second] = true;
        }
        ++r.orbits;
        r.orbit_sizes.push_back(static_cast<long long>(orbit.size()));
        r.representatives.push_back(elems[i]);
    }
    return r;
}

int sign_epsilon(int i, Subset J)
{
    if (!(J & (Subset(1) << i)))
        throw std::invalid_argument("sign_epsilon: index not in subset");
    const int below = popcount(J & ((Subset(1) << i) - 1));
    return below % 2 ? -1 : 1;
}

} // namespace hilbtaut
