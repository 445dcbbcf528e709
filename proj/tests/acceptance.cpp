// One line per acceptance criterion; exit status 0 iff all pass within their time limits.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "hilbtaut/suites.hpp"

using namespace hilbtaut;

namespace {

struct Criterion {
    int id;
    std::string title;
    double limitSeconds;
    std::vector<SuiteReport (*)(const SuiteOptions&)> suites;
};

} // namespace

int main()
{
    SuiteOptions o; // seed 7, 25 cases per surface, degree 4 for n = 2 and 3 for n = 3
    const std::vector<Criterion> criteria{
        {1, "chi cross-formula consistency on p2, p1xp1, k3, abelian", 5.0, {suite_chi_consistency}},
        {2, "P2 equalities chi = dim S^k H0(O(l))", 1.0, {suite_danila}},
        {3, "invariant kernel nullity = graded sum", 60.0, {suite_kernel_vs_graded}},
        {4, "Toeplitz minors, determinants, ranks", 2.0, {suite_toeplitz}},
        {5, "anti-invariant dimensions, k <= 7", 2.0, {suite_reps}},
        {6, "difference recursion, transition identity, local formulas", 5.0, {suite_recursion}},
        {7, "sym map k = 2..4 and omega classes k <= 6", 10.0, {suite_appendix}},
        {8, "quotients and stabilizers against brute force", 10.0, {suite_combinatorics}},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        bool pass = true;
        long long checks = 0;
        std::string why;
        for (auto* fn : c.suites) {
            const SuiteReport r = fn(o);
            pass = pass && r.pass;
            for (const auto& ch : r.checks) {
                checks += ch.checks;
                if (!ch.pass)
                    why += " [" + ch.name + ": " + ch.detail + "]";
            }
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs >= c.limitSeconds) {
            pass = false;
            why += " [over time limit]";
        }
        std::printf("%s criterion %d: %s (%lld checks, %.2f s of %.0f s)%s\n", pass ? "PASS" : "FAIL", c.id,
                    c.title.c_str(), checks, secs, c.limitSeconds, why.c_str());
        if (!pass)
            ++failed;
    }
    return failed == 0 ? 0 : 1;
}
