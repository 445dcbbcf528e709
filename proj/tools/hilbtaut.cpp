// Command-line front end: chi tables, kernel and graded dimensions, Toeplitz matrices,
// representation dimensions and the verification suites.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilbtaut/rroch.hpp"
#include "hilbtaut/suites.hpp"
#include "hilbtaut/symrep.hpp"
#include "hilbtaut/tautops.hpp"
#include "hilbtaut/toeplitz.hpp"

using namespace hilbtaut;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool proven_range(int n, int k)
{
    return n <= 2 || k <= 4;
}

void require_range(int n, int k, bool exploratory)
{
    if (!proven_range(n, k) && !exploratory)
        throw UsageError("(n,k) = (" + std::to_string(n) + "," + std::to_string(k) +
                         ") is outside n <= 2 or k <= 4; pass --exploratory to run it anyway");
}

// "2", "1:3" or "1,3"
BundleClass parse_bundle(const std::string& s, int rank)
{
    BundleClass v;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, s.find(':') != std::string::npos ? ':' : ',')) {
        try {
            std::size_t pos = 0;
            const long x = std::stol(tok, &pos);
            if (pos != tok.size())
                throw std::invalid_argument(tok);
            v.emplace_back(x);
        } catch (const std::exception&) {
            throw UsageError("bad lattice vector '" + s + "'");
        }
    }
    if (static_cast<int>(v.size()) != rank)
        throw UsageError("lattice vector '" + s + "' needs " + std::to_string(rank) + " entries");
    return v;
}

std::string join(const BundleClass& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ":" : "") + v[i].get_str();
    return s;
}

template <class T>
std::string join_list(const std::vector<T>& v, const char* sep = ",")
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? sep : "") << v[i];
    return os.str();
}

// big integers go to JSON as strings only when they leave the 64-bit range
json to_json(const Z& z)
{
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

// ---- chi ----

struct ChiArgs {
    std::string surface = "p2";
    std::vector<int> n, k;
    std::vector<std::string> L, A{"0"};
    std::string format = "csv";
};

int cmd_chi(const ChiArgs& a)
{
    SurfaceModel s;
    try {
        s = resolve_surface(a.surface);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::vector<std::string> As = a.A;
    if (As.size() == 1 && As[0] == "0" && s.rank > 1)
        As[0] = join(lattice_zero(s));
    for (int n : a.n)
        for (int k : a.k) {
            if (n < 1 || k < 0)
                throw UsageError("need n >= 1 and k >= 0");
            if (!(n == 2 || k <= 4))
                throw UsageError("no closed formula for (n,k) = (" + std::to_string(n) + "," + std::to_string(k) +
                                 "); need n = 2 or k <= 4");
        }
    std::vector<BundleClass> Ls, Avs;
    for (const auto& x : a.L)
        Ls.push_back(parse_bundle(x, s.rank));
    for (const auto& x : As)
        Avs.push_back(parse_bundle(x, s.rank));

    bool allN2 = true;
    int maxJ = 0;
    for (int n : a.n)
        allN2 = allN2 && n == 2;
    for (int k : a.k)
        maxJ = std::max(maxJ, k / 2);

    json rows = json::array();
    std::ostringstream csv;
    csv << "surface,n,k,L,A,chi";
    if (allN2)
        for (int j = 0; j <= maxJ; ++j)
            csv << ",gr_" << j;
    csv << "\n";
    std::ostringstream text;
    for (int n : a.n)
        for (int k : a.k)
            for (const auto& L : Ls)
                for (const auto& A : Avs) {
                    const Z v = chi_sym_power(s, n, k, L, A);
                    csv << s.name << "," << n << "," << k << "," << join(L) << "," << join(A) << "," << v;
                    json row{{"n", n}, {"k", k}, {"L", join(L)}, {"A", join(A)}, {"chi", to_json(v)},
                             {"conjectural", !proven_range(n, k)}};
                    text << "chi(S^" << k << " L^[" << n << "] (x) D_A) on " << s.name << ", L=" << join(L)
                         << ", A=" << join(A) << ": " << v << "\n";
                    if (n == 2) {
                        json gr = json::array();
                        for (int j = 0; j <= k / 2; ++j) {
                            const Z g = chi_graded_piece_n2(s, k, j, L, A);
                            gr.push_back(to_json(g));
                            text << "  graded (" << k - j << "," << j << "): " << g << "\n";
                            if (allN2)
                                csv << "," << g;
                        }
                        row["graded"] = gr;
                    }
                    if (allN2)
                        for (int j = k / 2 + 1; j <= maxJ; ++j)
                            csv << ",";
                    csv << "\n";
                    rows.push_back(row);
                }
    if (a.format == "json")
        std::cout << json{{"surface", s.name}, {"rows", rows}}.dump(2) << "\n";
    else if (a.format == "text")
        std::cout << text.str();
    else
        std::cout << csv.str();
    return kOk;
}

// ---- verify ----

struct VerifyArgs {
    std::string suite = "all";
    unsigned seed = 7;
    int cases = 25;
    int maxDegree = -1;
    std::string format = "text";
    bool timings = false;
};

int cmd_verify(const VerifyArgs& a)
{
    SuiteOptions o;
    o.seed = a.seed;
    o.casesPerSurface = a.cases;
    if (a.cases < 1)
        throw UsageError("--cases must be positive");
    if (a.maxDegree >= 0)
        o.maxDegreeN2 = o.maxDegreeN3 = a.maxDegree;
    std::vector<SuiteReport> reports;
    try {
        reports = run_suites(a.suite, o);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    bool all = true;
    for (const auto& r : reports)
        all = all && r.pass;
    if (a.format == "json") {
        json js = json::array();
        for (const auto& r : reports) {
            json checks = json::array();
            for (const auto& c : r.checks) {
                json cj{{"name", c.name}, {"pass", c.pass}, {"checks", c.checks}, {"detail", c.detail}};
                if (a.timings)
                    cj["seconds"] = c.seconds;
                checks.push_back(cj);
            }
            json rj{{"suite", r.suite}, {"pass", r.pass}, {"checks", checks}};
            if (a.timings)
                rj["seconds"] = r.seconds;
            js.push_back(rj);
        }
        std::cout << json{{"seed", a.seed}, {"pass", all}, {"suites", js}}.dump(2) << "\n";
    } else {
        std::cout << "seed " << a.seed << "\n";
        for (const auto& r : reports) {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.suite;
            if (a.timings)
                std::cout << " (" << r.seconds << " s)";
            std::cout << "\n";
            for (const auto& c : r.checks) {
                std::cout << "  " << (c.pass ? "ok   " : "FAIL ") << c.name << " [" << c.checks << "]";
                if (!c.detail.empty())
                    std::cout << " " << c.detail;
                if (a.timings)
                    std::cout << " (" << c.seconds << " s)";
                std::cout << "\n";
            }
        }
    }
    return all ? kOk : kFailed;
}

// ---- kernel / graded ----

struct KernelArgs {
    int n = 2, k = 2, maxDegree = 2, levels = -1;
    bool invariant = false, exploratory = false;
    std::string format = "csv";
};

int cmd_kernel(const KernelArgs& a)
{
    if (a.n < 1 || a.k < 0 || a.maxDegree < 0)
        throw UsageError("need n >= 1, k >= 0, max-degree >= 0");
    require_range(a.n, a.k, a.exploratory);
    KernelOptions o;
    o.invariant = a.invariant;
    o.levels = a.levels;
    const auto per = kernel_nullity(a.n, a.k, a.maxDegree, o);
    const auto cum = cumulative(per);
    if (a.format == "json") {
        std::cout << json{{"n", a.n}, {"k", a.k}, {"invariant", a.invariant}, {"levels", a.levels},
                          {"perDegree", per}, {"cumulative", cum}, {"conjectural", !proven_range(a.n, a.k)}}
                         .dump(2)
                  << "\n";
    } else if (a.format == "text") {
        std::cout << "per-degree [" << join_list(per) << "]\ncumulative [" << join_list(cum) << "]\n";
    } else {
        std::cout << "degree,nullity,cumulative\n";
        for (std::size_t d = 0; d < per.size(); ++d)
            std::cout << d << "," << per[d] << "," << cum[d] << "\n";
    }
    return kOk;
}

struct GradedArgs {
    int n = 2, k = 2, maxDegree = 2;
    std::string rule = "uniform";
    bool exploratory = false, verify = false;
    std::string format = "csv";
};

int cmd_graded(const GradedArgs& a)
{
    if (a.n < 1 || a.k < 0 || a.maxDegree < 0)
        throw UsageError("need n >= 1, k >= 0, max-degree >= 0");
    require_range(a.n, a.k, a.exploratory);
    const ExponentRule rule = a.rule == "per-pair" ? ExponentRule::PerPair2Mu : ExponentRule::Uniform2mMu;
    const bool conjectural = !proven_range(a.n, a.k);
    FiltrationReport rep;
    GradedDims g;
    if (a.verify) {
        rep = verify_filtration(a.n, a.k, a.maxDegree, rule);
        g = rep.graded;
    } else {
        g = graded_dims(a.n, a.k, a.maxDegree, rule);
    }
    const auto tot = g.total();
    if (a.format == "json") {
        json mus = json::array();
        for (std::size_t i = 0; i < g.mus.size(); ++i)
            mus.push_back(json{{"mu", format_vector(g.mus[i])}, {"dims", g.dims[i]}});
        json out{{"n", a.n}, {"k", a.k}, {"rule", a.rule}, {"graded", mus}, {"total", tot}, {"conjectural", conjectural}};
        if (a.verify)
            out["verify"] = json{{"pass", rep.pass}, {"kernel", rep.kernel}, {"message", rep.message}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "mu";
        for (int d = 0; d <= a.maxDegree; ++d)
            std::cout << ",deg_" << d;
        std::cout << "\n";
        for (std::size_t i = 0; i < g.mus.size(); ++i)
            std::cout << (g.mus[i].empty() ? "0" : join_list(g.mus[i], ":")) << "," << join_list(g.dims[i]) << "\n";
        std::cout << "total," << join_list(tot) << "\n";
        if (a.verify)
            std::cout << "kernel," << join_list(rep.kernel) << "\n"
                      << (rep.pass ? "# pass: " : "# FAIL: ") << rep.message << (conjectural ? " (conjectural)" : "")
                      << "\n";
    }
    // outside the proven range a mismatch is a finding, not a failure
    return a.verify && !rep.pass && !conjectural ? kFailed : kOk;
}

// ---- toeplitz ----

struct ToeplitzArgs {
    std::string kind = "T";
    bool even = false, odd = false, det = false, minors = false, rank = false, trimmed = false;
    int n = 1, m = 1, l = 0, k = 0, j = 0;
};

void print_matrix(const IntMatrix& a)
{
    for (const auto& row : a) {
        for (std::size_t c = 0; c < row.size(); ++c)
            std::cout << (c ? " " : "") << row[c];
        std::cout << "\n";
    }
}

int cmd_toeplitz(const ToeplitzArgs& a)
{
    ToeplitzSpec s;
    if (a.kind == "T") {
        if (a.even == a.odd)
            throw UsageError("kind T needs exactly one of --even, --odd");
        s.kind = a.even ? ToeplitzKind::TEven : ToeplitzKind::TOdd;
    } else {
        s.kind = ToeplitzKind::R;
    }
    s.n = a.n;
    s.m = a.m;
    s.l = a.l;
    s.k = a.k;
    s.j = a.j;
    IntMatrix mat;
    try {
        mat = a.trimmed ? R_trimmed(a.l, a.k, a.j) : build(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (a.trimmed && a.kind != "R")
        throw UsageError("--trimmed applies to kind R");
    if (a.det) {
        if (mat.size() != mat.front().size())
            throw UsageError("--det needs a square matrix");
        std::cout << det_exact(mat) << "\n";
    } else if (a.minors) {
        if (mat.size() != mat.front().size())
            throw UsageError("--minors needs a square matrix");
        std::cout << join_list(leading_minors(mat), " ") << "\n";
    } else if (a.rank) {
        std::cout << column_rank(mat) << "\n";
    } else {
        print_matrix(mat);
        if (a.trimmed)
            std::cout << "# matches signed T block: " << (R_trimmed_matches(a.l, a.k, a.j) ? "yes" : "no") << "\n";
    }
    return kOk;
}

// ---- reps ----

struct RepsArgs {
    int k = 3;
    bool brute = false;
    std::string format = "text";
};

int cmd_reps(const RepsArgs& a)
{
    if (a.k < 2 || a.k > 12)
        throw UsageError("reps needs 2 <= k <= 12");
    if (a.brute && a.k > 5)
        throw UsageError("--brute needs k <= 5");
    const GradedDimSeries rho = antiinv_dims_rho(a.k), R = antiinv_dims_R(a.k);
    bool agree = true;
    if (a.brute)
        agree = rho.coeffs == antiinv_dims_rho_brute(a.k).coeffs && R.coeffs == antiinv_dims_R_brute(a.k).coeffs;
    if (a.format == "json") {
        json out{{"k", a.k}, {"rho", rho.str()}, {"R", R.str()}, {"integral", rho.integral && R.integral}};
        if (a.brute)
            out["bruteAgrees"] = agree;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "rho_" << a.k << ": " << rho.str() << "\n";
        std::cout << "R_" << a.k << ": " << R.str() << "\n";
        if (a.brute)
            std::cout << "explicit matrices agree: " << (agree ? "yes" : "no") << "\n";
    }
    return agree && rho.integral && R.integral ? kOk : kFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Tautological bundles on Hilbert schemes of points: exact computations"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"csv", "json", "text"};

    ChiArgs chiA;
    auto* chi = app.add_subcommand("chi", "Euler characteristics of S^k L^[n] (x) D_A");
    chi->add_option("--surface", chiA.surface, "built-in name (p2, p1xp1, k3, abelian) or JSON file");
    chi->add_option("--n", chiA.n, "number of points (list allowed)")->required();
    chi->add_option("--k", chiA.k, "symmetric power (list allowed)")->required();
    chi->add_option("--L", chiA.L, "line bundle class, e.g. 2 or 1:3 (list allowed)")->required();
    chi->add_option("--A", chiA.A, "twisting class (list allowed)");
    chi->add_option("--format", chiA.format)->check(CLI::IsMember(formats));

    VerifyArgs verA;
    auto* ver = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> suites = suite_names();
    suites.insert(suites.begin(), "all");
    ver->add_option("--suite", verA.suite)->check(CLI::IsMember(suites));
    ver->add_option("--seed", verA.seed, "seed for randomized sweeps");
    ver->add_option("--cases", verA.cases, "random cases per surface");
    ver->add_option("--max-degree", verA.maxDegree, "degree bound for kernel-vs-graded");
    ver->add_option("--format", verA.format)->check(CLI::IsMember(std::vector<std::string>{"text", "json"}));
    ver->add_flag("--timings", verA.timings, "report wall-clock times");

    KernelArgs kerA;
    auto* ker = app.add_subcommand("kernel", "nullity of the higher-restriction system per degree");
    ker->add_option("--n", kerA.n)->required();
    ker->add_option("--k", kerA.k)->required();
    ker->add_option("--max-degree", kerA.maxDegree);
    ker->add_option("--levels", kerA.levels, "number of operator levels (default all)");
    ker->add_flag("--invariant", kerA.invariant, "restrict to S_n-invariant tuples");
    ker->add_flag("--exploratory", kerA.exploratory, "allow (n,k) outside n <= 2 or k <= 4");
    ker->add_option("--format", kerA.format)->check(CLI::IsMember(formats));

    GradedArgs grA;
    auto* gr = app.add_subcommand("graded", "graded-piece dimensions per partition");
    gr->add_option("--n", grA.n)->required();
    gr->add_option("--k", grA.k)->required();
    gr->add_option("--max-degree", grA.maxDegree);
    gr->add_option("--rule", grA.rule)->check(CLI::IsMember(std::vector<std::string>{"uniform", "per-pair"}));
    gr->add_flag("--verify", grA.verify, "compare the total with the invariant kernel");
    gr->add_flag("--exploratory", grA.exploratory, "allow (n,k) outside n <= 2 or k <= 4");
    gr->add_option("--format", grA.format)->check(CLI::IsMember(std::vector<std::string>{"csv", "json"}));

    ToeplitzArgs toA;
    auto* to = app.add_subcommand("toeplitz", "binomial Toeplitz matrices");
    to->add_option("--kind", toA.kind)->check(CLI::IsMember(std::vector<std::string>{"T", "R"}));
    to->add_flag("--even", toA.even);
    to->add_flag("--odd", toA.odd);
    to->add_option("--n", toA.n);
    to->add_option("--m", toA.m);
    to->add_option("--l", toA.l);
    to->add_option("--k", toA.k);
    to->add_option("--j", toA.j);
    to->add_flag("--trimmed", toA.trimmed, "R with the outer rows removed");
    auto* actDet = to->add_flag("--det", toA.det);
    auto* actMin = to->add_flag("--minors", toA.minors);
    auto* actRank = to->add_flag("--rank", toA.rank);
    actDet->excludes(actMin)->excludes(actRank);
    actMin->excludes(actRank);

    RepsArgs repA;
    auto* rep = app.add_subcommand("reps", "anti-invariant dimensions of exterior powers");
    rep->add_option("--k", repA.k)->required();
    rep->add_flag("--brute", repA.brute, "cross-check with explicit matrices (k <= 5)");
    rep->add_option("--format", repA.format)->check(CLI::IsMember(std::vector<std::string>{"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (chi->parsed())
            return cmd_chi(chiA);
        if (ver->parsed())
            return cmd_verify(verA);
        if (ker->parsed())
            return cmd_kernel(kerA);
        if (gr->parsed())
            return cmd_graded(grA);
        if (to->parsed())
            return cmd_toeplitz(toA);
        if (rep->parsed())
            return cmd_reps(repA);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ResourceCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
