#include "w3f/linalg.hpp"

#include <numeric>

namespace w3f {

namespace {

void scale_integral(Row& row) {
    mpz_class l = 1;
    for (const auto& x : row) {
        l = lcm(l, x.re().get_den());
        l = lcm(l, x.s3_part().get_den());
    }
    if (l == 1) return;
    QuadScalar f{Rational(l)};
    for (auto& x : row) x *= f;
}

}  // namespace

Echelon bareiss(Matrix m, Execution ex) {
    Echelon out;
    if (m.empty()) return out;
    for (auto& row : m) scale_integral(row);
    const int nrows = static_cast<int>(m.size());
    const int ncols = static_cast<int>(m[0].size());
    const bool par = ex == Execution::parallel;
    QuadScalar prev(1);
    int r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int p = r;
        while (p < nrows && m[p][c].is_zero()) ++p;
        if (p == nrows) continue;
        std::swap(m[r], m[p]);
        const QuadScalar iprev = prev.inv();
#pragma omp parallel for schedule(dynamic) if (par)
        for (int i = r + 1; i < nrows; ++i) {
            Row& row = m[i];
            const Row& piv = m[r];
            for (int j = c + 1; j < ncols; ++j) row[j] = (piv[c] * row[j] - row[c] * piv[j]) * iprev;
            row[c] = QuadScalar();
        }
        prev = m[r][c];
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

int rank(const Matrix& m, Execution ex) { return static_cast<int>(bareiss(m, ex).pivots.size()); }

QuadScalar determinant(const Matrix& m) {
    Matrix a = m;
    const int n = static_cast<int>(a.size());
    QuadScalar det(1);
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return QuadScalar();
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        QuadScalar ip = a[c][c].inv();
        for (int i = c + 1; i < n; ++i) {
            if (a[i][c].is_zero()) continue;
            QuadScalar f = a[i][c] * ip;
            for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

Matrix rref(const Matrix& m, Execution ex) {
    Echelon e = bareiss(m, ex);
    Matrix& rows = e.rows;
    const int r = static_cast<int>(rows.size());
    const bool par = ex == Execution::parallel;
    for (int i = 0; i < r; ++i) {
        QuadScalar ip = rows[i][e.pivots[i]].inv();
        for (auto& x : rows[i]) x *= ip;
    }
    for (int k = r - 1; k >= 0; --k) {
        const int c = e.pivots[k];
#pragma omp parallel for schedule(dynamic) if (par)
        for (int i = 0; i < k; ++i) {
            if (rows[i][c].is_zero()) continue;
            QuadScalar f = rows[i][c];
            for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] -= f * rows[k][j];
        }
    }
    return rows;
}

Matrix nullspace(const Matrix& m, int ncols, Execution ex) {
    Matrix reduced = m.empty() ? Matrix{} : rref(m, ex);
    std::vector<int> pivot_of_col(ncols, -1);
    for (int i = 0; i < static_cast<int>(reduced.size()); ++i)
        for (int c = 0; c < ncols; ++c)
            if (!reduced[i][c].is_zero()) {
                pivot_of_col[c] = i;
                break;
            }
    Matrix basis;
    for (int f = 0; f < ncols; ++f) {
        if (pivot_of_col[f] >= 0) continue;
        Row x(ncols);
        x[f] = QuadScalar(1);
        for (int c = 0; c < ncols; ++c)
            if (pivot_of_col[c] >= 0) x[c] = -reduced[pivot_of_col[c]][f];
        basis.push_back(std::move(x));
    }
    return basis.empty() ? basis : rref(basis, ex);
}

}  // namespace w3f
