#pragma once

#include "w3f/execution.hpp"
#include "w3f/scalars.hpp"

#include <vector>

namespace w3f {

using Row = std::vector<QuadScalar>;
using Matrix = std::vector<Row>;

struct Echelon {
    Matrix rows;              // echelon form, rows beyond rank dropped
    std::vector<int> pivots;  // pivot column per row
};

// Fraction-free (Bareiss) forward elimination. Each row is first scaled into Z[sqrt(-3)],
// so every intermediate entry is a minor of the scaled matrix.
Echelon bareiss(Matrix m, Execution ex = Execution::serial);

int rank(const Matrix& m, Execution ex = Execution::serial);
QuadScalar determinant(const Matrix& m);

// Reduced row echelon form, pivots scaled to 1, zero rows dropped.
Matrix rref(const Matrix& m, Execution ex = Execution::serial);

// Basis of {x : m x = 0}, returned in reduced echelon form.
Matrix nullspace(const Matrix& m, int ncols, Execution ex = Execution::serial);

}  // namespace w3f
