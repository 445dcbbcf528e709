#pragma once

#include <string>
#include <vector>

namespace hilbtaut {

struct SuiteCheck {
    std::string name;
    bool pass = false;
    long long checks = 0;
    std::string detail;
    double seconds = 0;
};

struct SuiteReport {
    std::string suite;
    bool pass = false;
    std::vector<SuiteCheck> checks;
    double seconds = 0;
};

struct SuiteOptions {
    unsigned seed = 7;
    int casesPerSurface = 25;
    // kernel-vs-graded: degree bounds for n = 2 and n = 3
    int maxDegreeN2 = 4;
    int maxDegreeN3 = 3;
};

// chi-consistency: the n = 2 formula against the fixed-k formulas at n = 2, k = 3, 4.
SuiteReport suite_chi_consistency(const SuiteOptions& o = {});
// chi against dim S^k H^0(O(l)) on P^2 with A = O.
SuiteReport suite_danila(const SuiteOptions& o = {});
SuiteReport suite_kernel_vs_graded(const SuiteOptions& o = {});
SuiteReport suite_toeplitz(const SuiteOptions& o = {});
SuiteReport suite_reps(const SuiteOptions& o = {});
// difference recursion, transition identity, invariant local formulas
SuiteReport suite_recursion(const SuiteOptions& o = {});
// sym map and omega classes
SuiteReport suite_appendix(const SuiteOptions& o = {});
SuiteReport suite_combinatorics(const SuiteOptions& o = {});

std::vector<std::string> suite_names(); // without "all"
// name in suite_names() or "all"; throws std::invalid_argument otherwise.
std::vector<SuiteReport> run_suites(const std::string& name, const SuiteOptions& o = {});

} // namespace hilbtaut
