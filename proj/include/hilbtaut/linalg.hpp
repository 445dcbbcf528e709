#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "hilbtaut/numeric.hpp"

namespace hilbtaut {

// Sparse row: (column, value) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<int, Q>>;

struct SparseMatrix {
    int ncols = 0;
    std::vector<SparseRow> rows;

    std::size_t nrows() const { return rows.size(); }
    // Accumulates into a row given as an unsorted list; drops zeros.
    void add_row(std::vector<std::pair<int, Q>> entries);
};

// Reduced row echelon form of the row space, computed exactly.
struct Rref {
    int ncols = 0;
    std::vector<int> pivots;      // pivot column of each row, increasing
    std::vector<SparseRow> rows;  // leading entry 1 at the pivot, zero in other pivot columns

    int rank() const { return static_cast<int>(pivots.size()); }
    // Basis of {x : M x = 0}, one dense vector per free column.
    std::vector<std::vector<Q>> nullspace() const;
    // True iff v lies in the row space.
    bool contains(const SparseRow& v) const;
};

// Exact rank/RREF over Q. Candidate pivot rows are chosen modulo a large prime and the
// result is then certified by exact reduction of every row.
Rref exact_rref(const SparseMatrix& m);
int exact_rank(const SparseMatrix& m);
std::vector<std::vector<Q>> nullspace(const SparseMatrix& m);

} // namespace hilbtaut
