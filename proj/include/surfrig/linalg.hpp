#pragma once

#include <vector>

#include "surfrig/exact.hpp"

namespace surfrig {

// Dense rational matrix, row-major.
struct QMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> data;

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, Rat(0)) {}

    Rat& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
};

struct RankResult {
    int rank = 0;
    // Primitive integer-vector basis of the right nullspace, one per nullity
    // dimension; deterministic (free columns in increasing order, first
    // nonzero entry positive).
    std::vector<std::vector<Rat>> nullspace;
};

// Exact rank and nullspace by fraction-free (Bareiss) elimination over the
// integers after clearing row denominators.
RankResult rank_exact(const QMatrix& m);

// Numerical rank: singular values above max(rows,cols) * eps * sigma_max,
// scaled by tol_factor. Errors on non-finite entries.
int rank_float(const std::vector<double>& data, int rows, int cols, double tol_factor = 1.0);

// M * v for a nullspace-sized rational vector.
std::vector<Rat> matvec(const QMatrix& m, const std::vector<Rat>& v);

} // namespace surfrig
