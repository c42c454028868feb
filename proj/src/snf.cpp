// snf.cpp
// Smith normal form by the classical pivot-and-reduce loop: bring the
// smallest-magnitude entry of the working submatrix to the pivot seat,
// kill its row and column with division steps, and when the remaining
// block contains an entry not divisible by the pivot, fold that row into
// the pivot row and repeat.  Row operations accumulate in U, column
// operations in V.

#include "floer/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace floer {

namespace {

i64 add_mul(i64 x, i64 y, i64 q) {
    // x + y*q with overflow check
    return checked_i64(i128(x) + i128(y) * q, "SNF row/col update");
}

void row_op(Mat& m, size_t dst, size_t src, i64 q) {
    // row dst += q * row src
    for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] = add_mul(m[dst][j], m[src][j], q);
}

void col_op(Mat& m, size_t dst, size_t src, i64 q) {
    // col dst += q * col src
    for (size_t i = 0; i < m.size(); ++i) m[i][dst] = add_mul(m[i][dst], m[i][src], q);
}

void negate_row(Mat& m, size_t r) {
    for (auto& v : m[r]) v = checked_i64(-i128(v), "SNF negate");
}

// Bareiss intermediates are k x k minors and can exceed even __int128
// for matrices with large entries; wrapping silently would corrupt the
// determinant, so every product and difference is checked.
i128 mul_i128(i128 x, i128 y) {
    i128 r;
    if (__builtin_mul_overflow(x, y, &r))
        throw OverflowError("int128 range exceeded in determinant");
    return r;
}

i128 sub_i128(i128 x, i128 y) {
    i128 r;
    if (__builtin_sub_overflow(x, y, &r))
        throw OverflowError("int128 range exceeded in determinant");
    return r;
}

} // namespace

Mat mat_identity(size_t n) {
    Mat id(n, std::vector<i64>(n, 0));
    for (size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

Mat mat_mul(const Mat& x, const Mat& y) {
    size_t n = mat_rows(x), k = mat_cols(x), mcols = mat_cols(y);
    if (k != mat_rows(y)) throw InternalCheckFailure("mat_mul shape mismatch");
    Mat z(n, std::vector<i64>(mcols, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (x[i][t] == 0) continue;
            for (size_t j = 0; j < mcols; ++j)
                z[i][j] = add_mul(z[i][j], y[t][j], x[i][t]);
        }
    return z;
}

SmithResult smith_normal_form(const Mat& m) {
    size_t rows = mat_rows(m), cols = mat_cols(m);
    SmithResult res{mat_identity(rows), m, mat_identity(cols)};
    Mat& D = res.D;
    Mat& U = res.U;
    Mat& V = res.V;

    size_t nmin = std::min(rows, cols);
    for (size_t k = 0; k < nmin; ++k) {
        for (;;) {
            // smallest nonzero |entry| in the submatrix, lowest (row, col) wins ties
            size_t pi = k, pj = k;
            i64 best = 0;
            for (size_t i = k; i < rows; ++i)
                for (size_t j = k; j < cols; ++j)
                    if (D[i][j] != 0 && (best == 0 || std::abs(D[i][j]) < best)) {
                        best = std::abs(D[i][j]);
                        pi = i; pj = j;
                    }
            if (best == 0) break; // submatrix is zero; done with this k and all later ones

            if (pi != k) { std::swap(D[pi], D[k]); std::swap(U[pi], U[k]); }
            if (pj != k) {
                for (size_t i = 0; i < rows; ++i) std::swap(D[i][pj], D[i][k]);
                for (size_t i = 0; i < cols; ++i) std::swap(V[i][pj], V[i][k]);
            }

            // clear column k and row k by division; a nonzero remainder leaves a
            // smaller entry for the next pivot pass
            bool clean = true;
            for (size_t i = k + 1; i < rows; ++i) {
                if (D[i][k] == 0) continue;
                i64 q = D[i][k] / D[k][k];
                row_op(D, i, k, -q);
                row_op(U, i, k, -q);
                if (D[i][k] != 0) clean = false;
            }
            for (size_t j = k + 1; j < cols; ++j) {
                if (D[k][j] == 0) continue;
                i64 q = D[k][j] / D[k][k];
                col_op(D, j, k, -q);
                col_op(V, j, k, -q);
                if (D[k][j] != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility: the pivot must divide every later entry; fold the
            // first offending row into row k and redo the elimination
            bool divides = true;
            for (size_t i = k + 1; i < rows && divides; ++i)
                for (size_t j = k + 1; j < cols; ++j)
                    if (D[i][j] % D[k][k] != 0) {
                        row_op(D, k, i, 1);
                        row_op(U, k, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (D[k][k] < 0) { negate_row(D, k); negate_row(U, k); }
        if (D[k][k] == 0) break; // rest of the diagonal is zero too
    }
    return res;
}

std::optional<std::vector<i64>> solve_integer(const Mat& m, const std::vector<i64>& b) {
    size_t rows = mat_rows(m), cols = mat_cols(m);
    if (b.size() != rows) throw InternalCheckFailure("solve_integer: rhs size mismatch");
    if (cols == 0)
        return std::all_of(b.begin(), b.end(), [](i64 v) { return v == 0; })
                   ? std::optional<std::vector<i64>>(std::vector<i64>{})
                   : std::nullopt;

    SmithResult s = smith_normal_form(m);
    // m x = b  <=>  D (V^-1 x) = U b; solve for y = V^-1 x, then x = V y.
    std::vector<i64> ub(rows, 0);
    for (size_t i = 0; i < rows; ++i) {
        i128 acc = 0;
        for (size_t j = 0; j < rows; ++j) acc += i128(s.U[i][j]) * b[j];
        ub[i] = checked_i64(acc, "solve_integer U*b");
    }
    std::vector<i64> y(cols, 0);
    size_t nmin = std::min(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        i64 d = (i < nmin) ? s.D[i][i] : 0;
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            y[i] = ub[i] / d;
        }
    }
    std::vector<i64> x(cols, 0);
    for (size_t i = 0; i < cols; ++i) {
        i128 acc = 0;
        for (size_t j = 0; j < cols; ++j) acc += i128(s.V[i][j]) * y[j];
        x[i] = checked_i64(acc, "solve_integer V*y");
    }
    return x;
}

i64 determinant(const Mat& m) {
    size_t n = mat_rows(m);
    if (n == 0) return 1;
    if (n != mat_cols(m)) throw InternalCheckFailure("determinant: not square");
    // Bareiss fraction-free elimination in __int128.
    std::vector<std::vector<i128>> a(n, std::vector<i128>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    i128 prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = sub_i128(mul_i128(a[i][j], a[k][k]), mul_i128(a[i][k], a[k][j])) /
                          prev;
        prev = a[k][k];
    }
    return checked_i64(sign * a[n - 1][n - 1], "determinant");
}

} // namespace floer
