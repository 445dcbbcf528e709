#pragma once

#include <string>
#include <vector>

#include "hilbtaut/numeric.hpp"

namespace hilbtaut {

// Line bundle class as a vector in the Picard lattice.
using BundleClass = std::vector<Z>;

struct SurfaceModel {
    std::string name;
    int rank = 1;
    std::vector<std::vector<Z>> intersection;
    BundleClass K;
    Z chiO = 1;
    Z c2 = 0; // topological Euler number

    Z dot(const BundleClass& a, const BundleClass& b) const;
    // Throws std::invalid_argument on shape, symmetry or Noether (K.K + c2 = 12 chiO) failure.
    void validate() const;
};

std::vector<std::string> builtin_surface_names();
SurfaceModel builtin_surface(const std::string& name);
// JSON object {"name", "rank", "intersection", "K", "chiO", "c2"}.
SurfaceModel parse_surface_json(const std::string& text);
SurfaceModel load_surface_file(const std::string& path);
// Built-in name or path to a JSON file.
SurfaceModel resolve_surface(const std::string& nameOrPath);

struct ChernData {
    long rank = 1;
    BundleClass c1;
    Z c2num = 0;
};

BundleClass lattice_zero(const SurfaceModel& s);
// a L + b A
BundleClass combo(const BundleClass& L, long a, const BundleClass& A, long b);

Z chi_line(const SurfaceModel& s, const BundleClass& M);
Z chi(const SurfaceModel& s, const ChernData& E);
ChernData line_bundle(const SurfaceModel& s, const BundleClass& M);
ChernData canonical_bundle(const SurfaceModel& s);
// S^l Omega^1_X via the splitting principle.
ChernData chern_sym_omega(const SurfaceModel& s, int l);
ChernData twist(const SurfaceModel& s, const ChernData& E, const BundleClass& M);
ChernData tensor(const SurfaceModel& s, const ChernData& E, const ChernData& F);
Z chi_twisted(const SurfaceModel& s, const ChernData& E, const BundleClass& M);

enum class ChiFormula { Auto, N2, GeneralK };

// chi(S^n X, S^k L^[n] (x) D_A). Auto: the fixed-k formula for k <= 4, else the n = 2 formula.
Z chi_sym_power(const SurfaceModel& s, int n, int k, const BundleClass& L, const BundleClass& A,
                ChiFormula f = ChiFormula::Auto);
// n = 2, any k >= 0.
Z chi_sym_power_n2(const SurfaceModel& s, int k, const BundleClass& L, const BundleClass& A);
// k in {0, ..., 4}, any n >= 1.
Z chi_sym_power_fixed_k(const SurfaceModel& s, int n, int k, const BundleClass& L, const BundleClass& A);

// chi of the graded piece indexed by (k-j, j) for n = 2.
Z chi_graded_piece_n2(const SurfaceModel& s, int k, int j, const BundleClass& L, const BundleClass& A);
// binom(chi(M), 2)
Z chi_A4(const SurfaceModel& s, const BundleClass& M);

} // namespace hilbtaut
