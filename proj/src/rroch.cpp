#include "hilbtaut/rroch.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hilbtaut {

Z SurfaceModel::dot(const BundleClass& a, const BundleClass& b) const
{
    if (static_cast<int>(a.size()) != rank || static_cast<int>(b.size()) != rank)
        throw std::invalid_argument("lattice vector length differs from the Picard rank of " + name);
    Z r = 0;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            r += a[i] * intersection[i][j] * b[j];
    return r;
}

void SurfaceModel::validate() const
{
    if (rank < 1)
        throw std::invalid_argument("surface " + name + ": rank must be positive");
    if (static_cast<int>(intersection.size()) != rank)
        throw std::invalid_argument("surface " + name + ": intersection matrix has wrong size");
    for (int i = 0; i < rank; ++i) {
        if (static_cast<int>(intersection[i].size()) != rank)
            throw std::invalid_argument("surface " + name + ": intersection matrix is not square");
        for (int j = 0; j < i; ++j)
            if (intersection[i][j] != intersection[j][i])
                throw std::invalid_argument("surface " + name + ": intersection matrix is not symmetric");
    }
    if (static_cast<int>(K.size()) != rank)
        throw std::invalid_argument("surface " + name + ": canonical vector has wrong length");
    if (dot(K, K) + c2 != 12 * chiO)
        throw std::invalid_argument("surface " + name + ": Noether's formula K.K + c2 = 12 chiO fails");
}

std::vector<std::string> builtin_surface_names()
{
    return {"p2", "p1xp1", "k3", "abelian"};
}

SurfaceModel builtin_surface(const std::string& name)
{
    SurfaceModel s;
    s.name = name;
    if (name == "p2") {
        s.rank = 1;
        s.intersection = {{1}};
        s.K = {-3};
        s.chiO = 1;
        s.c2 = 3;
    } else if (name == "p1xp1") {
        s.rank = 2;
        s.intersection = {{0, 1}, {1, 0}};
        s.K = {-2, -2};
        s.chiO = 1;
        s.c2 = 4;
    } else if (name == "k3") {
        s.rank = 1;
        s.intersection = {{2}};
        s.K = {0};
        s.chiO = 2;
        s.c2 = 24;
    } else if (name == "abelian") {
        s.rank = 1;
        s.intersection = {{2}};
        s.K = {0};
        s.chiO = 0;
        s.c2 = 0;
    } else {
        throw std::invalid_argument("unknown built-in surface: " + name);
    }
    s.validate();
    return s;
}

SurfaceModel parse_surface_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("surface JSON: ") + e.what());
    }
    SurfaceModel s;
    try {
        s.name = j.at("name").get<std::string>();
        s.rank = j.at("rank").get<int>();
        for (const auto& row : j.at("intersection")) {
            std::vector<Z> r;
            for (const auto& v : row)
                r.emplace_back(v.get<long>());
            s.intersection.push_back(std::move(r));
        }
        for (const auto& v : j.at("K"))
            s.K.emplace_back(v.get<long>());
        s.chiO = j.at("chiO").get<long>();
        s.c2 = j.at("c2").get<long>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("surface JSON: ") + e.what());
    }
    s.validate();
    return s;
}

SurfaceModel load_surface_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open surface file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_surface_json(ss.str());
}

SurfaceModel resolve_surface(const std::string& nameOrPath)
{
    for (const auto& n : builtin_surface_names())
        if (n == nameOrPath)
            return builtin_surface(n);
    return load_surface_file(nameOrPath);
}

BundleClass lattice_zero(const SurfaceModel& s)
{
    return BundleClass(s.rank, 0);
}

BundleClass combo(const BundleClass& L, long a, const BundleClass& A, long b)
{
    if (L.size() != A.size())
        throw std::invalid_argument("lattice vectors of different length");
    BundleClass r(L.size());
    for (std::size_t i = 0; i < L.size(); ++i)
        r[i] = a * L[i] + b * A[i];
    return r;
}

static BundleClass scaled(const BundleClass& v, const Z& c)
{
    BundleClass r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = c * v[i];
    return r;
}

static BundleClass added(const BundleClass& a, const BundleClass& b)
{
    BundleClass r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

Z chi(const SurfaceModel& s, const ChernData& E)
{
    // rank chiO + (c1^2 - 2 c2)/2 - c1.K/2
    const Q v = Q(E.rank * s.chiO) + frac(s.dot(E.c1, E.c1) - 2 * E.c2num, 2) - frac(s.dot(E.c1, s.K), 2);
    return require_integer(v, "Riemann-Roch");
}

ChernData line_bundle(const SurfaceModel& s, const BundleClass& M)
{
    (void)s;
    return ChernData{1, M, 0};
}

Z chi_line(const SurfaceModel& s, const BundleClass& M)
{
    return chi(s, line_bundle(s, M));
}

ChernData canonical_bundle(const SurfaceModel& s)
{
    return ChernData{1, s.K, 0};
}

ChernData chern_sym_omega(const SurfaceModel& s, int l)
{
    if (l < 0)
        throw std::invalid_argument("chern_sym_omega: l must be nonnegative");
    const Z L = l;
    const Z tri = L * (L + 1) / 2;
    const Z KK = s.dot(s.K, s.K);
    const Z sumSq = L * (L + 1) * (2 * L + 1) / 6 * (KK - 2 * s.c2) + L * (L + 1) * (L - 1) / 3 * s.c2;
    const Q c2 = frac(tri * tri * KK - sumSq, 2);
    return ChernData{l + 1, scaled(s.K, tri), require_integer(c2, "c2(S^l Omega)")};
}

ChernData twist(const SurfaceModel& s, const ChernData& E, const BundleClass& M)
{
    ChernData r;
    r.rank = E.rank;
    r.c1 = added(E.c1, scaled(M, E.rank));
    r.c2num = E.c2num + (E.rank - 1) * s.dot(E.c1, M) + binomial(E.rank, 2) * s.dot(M, M);
    return r;
}

ChernData tensor(const SurfaceModel& s, const ChernData& E, const ChernData& F)
{
    // ch2 = c1^2/2 - c2; ch2(E (x) F) = r_F ch2(E) + c1(E) c1(F) + r_E ch2(F)
    const Q ch2E = frac(s.dot(E.c1, E.c1), 2) - Q(E.c2num);
    const Q ch2F = frac(s.dot(F.c1, F.c1), 2) - Q(F.c2num);
    ChernData r;
    r.rank = E.rank * F.rank;
    r.c1 = added(scaled(E.c1, F.rank), scaled(F.c1, E.rank));
    const Q ch2 = Q(F.rank) * ch2E + Q(s.dot(E.c1, F.c1)) + Q(E.rank) * ch2F;
    r.c2num = require_integer(frac(s.dot(r.c1, r.c1), 2) - ch2, "c2 of tensor product");
    return r;
}

Z chi_twisted(const SurfaceModel& s, const ChernData& E, const BundleClass& M)
{
    return chi(s, twist(s, E, M));
}

namespace {

struct Terms {
    const SurfaceModel& s;
    const BundleClass& L;
    const BundleClass& A;

    // chi(L^a A^b)
    Z line(long a, long b) const { return chi_line(s, combo(L, a, A, b)); }
    // chi(E (x) L^a A^b)
    Z tw(const ChernData& E, long a, long b) const { return chi_twisted(s, E, combo(L, a, A, b)); }
    Z symOmega(int j, long a, long b) const { return tw(chern_sym_omega(s, j), a, b); }
};

Z floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

} // namespace

Z chi_sym_power_n2(const SurfaceModel& s, int k, const BundleClass& L, const BundleClass& A)
{
    if (k < 0)
        throw std::invalid_argument("chi_sym_power: k must be nonnegative");
    const Terms t{s, L, A};
    Z r = 0;
    if (k % 2 == 0)
        r += binomial_poly(t.line(k / 2, 1) + 1, 2);
    const long top = floor_div(k - 1, 2).get_si();
    for (long i = 0; i <= top; ++i)
        r += t.line(k - i, 1) * t.line(i, 1);
    for (int j = 0; j <= k - 2; ++j)
        r -= floor_div(k - j, 2) * t.symOmega(j, k, 2);
    return r;
}

Z chi_sym_power_fixed_k(const SurfaceModel& s, int n, int k, const BundleClass& L, const BundleClass& A)
{
    if (n < 1)
        throw std::invalid_argument("chi_sym_power: n must be positive");
    const Terms t{s, L, A};
    const Z chiA = t.line(0, 1);
    auto B = [&](int i) { return binomial_poly(chiA + n - 1 - i, n - i); };
    switch (k) {
    case 0:
        return B(0);
    case 1:
        return B(1) * t.line(1, 1);
    case 2:
        return B(1) * t.line(2, 1) + B(2) * (binomial_poly(t.line(1, 1) + 1, 2) - t.line(2, 2));
    case 3: {
        const ChernData om = chern_sym_omega(s, 1);
        return B(1) * t.line(3, 1) +
               B(2) * (t.line(2, 1) * t.line(1, 1) - t.line(3, 2) - t.tw(om, 3, 2)) +
               B(3) * (binomial_poly(t.line(1, 1) + 2, 3) - t.line(2, 2) * t.line(1, 1) + t.tw(om, 3, 3));
    }
    case 4: {
        const ChernData om = chern_sym_omega(s, 1);
        const ChernData omom = tensor(s, om, om);
        const ChernData s2 = chern_sym_omega(s, 2);
        const ChernData s3 = chern_sym_omega(s, 3);
        const ChernData kx = canonical_bundle(s);
        const Z x1 = t.line(1, 1);
        const Z b2 = B(2) * (t.line(3, 1) * x1 - 2 * t.line(4, 2) - t.tw(om, 4, 2) +
                             binomial_poly(t.line(2, 1) + 1, 2) - t.tw(s2, 4, 2));
        const Z b3 = B(3) * (t.line(2, 1) * binomial_poly(x1 + 1, 2) - t.line(3, 2) * x1 - t.line(2, 2) * t.line(2, 1) +
                             t.line(4, 3) - t.tw(om, 3, 2) * x1 + 2 * t.tw(om, 4, 3) + t.tw(omom, 4, 3) +
                             t.tw(s3, 4, 3));
        const Z b4 = B(4) * (binomial_poly(x1 + 3, 4) - t.line(2, 2) * binomial_poly(x1 + 1, 2) +
                             binomial_poly(t.line(2, 2), 2) + t.tw(om, 3, 3) * x1 - t.tw(om, 4, 4) -
                             t.tw(kx, 4, 4) - t.tw(s3, 4, 4));
        return B(1) * t.line(4, 1) + b2 + b3 + b4;
    }
    default:
        throw std::invalid_argument("chi_sym_power: the fixed-k formula covers k <= 4 only");
    }
}

Z chi_sym_power(const SurfaceModel& s, int n, int k, const BundleClass& L, const BundleClass& A, ChiFormula f)
{
    switch (f) {
    case ChiFormula::N2:
        if (n != 2)
            throw std::invalid_argument("chi_sym_power: the n = 2 formula needs n = 2");
        return chi_sym_power_n2(s, k, L, A);
    case ChiFormula::GeneralK:
        return chi_sym_power_fixed_k(s, n, k, L, A);
    case ChiFormula::Auto:
        break;
    }
    if (k >= 0 && k <= 4)
        return chi_sym_power_fixed_k(s, n, k, L, A);
    if (n == 2)
        return chi_sym_power_n2(s, k, L, A);
    throw std::invalid_argument("chi_sym_power: unsupported (n, k); need n = 2 or k <= 4");
}

Z chi_graded_piece_n2(const SurfaceModel& s, int k, int j, const BundleClass& L, const BundleClass& A)
{
    if (k < 0 || j < 0 || 2 * j > k)
        throw std::invalid_argument("chi_graded_piece_n2: need 0 <= j <= k/2");
    const Terms t{s, L, A};
    const int a = k - j, b = j;
    Z r = 0;
    if (a > b) {
        r = t.line(a, 1) * t.line(b, 1);
        for (int l = 0; l <= 2 * j - 1; ++l)
            r -= t.symOmega(l, k, 2);
    } else {
        r = binomial_poly(t.line(a, 1) + 1, 2);
        for (int l = 0; l < 2 * j; l += 2)
            r -= t.symOmega(l, k, 2);
    }
    return r;
}

Z chi_A4(const SurfaceModel& s, const BundleClass& M)
{
    return binomial_poly(chi_line(s, M), 2);
}

} // namespace hilbtaut
