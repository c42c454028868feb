// snf.hpp
// Smith normal form over the integers and the integer linear solver built
// on it.  Matrices are dense row-major vector<vector<int64>>; every
// arithmetic step goes through checked __int128 so overflow is an error,
// never a wrong answer.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "floer/rational.hpp"

namespace floer {

using Mat = std::vector<std::vector<i64>>;

// U * m * V = D with U, V unimodular and D diagonal, d1 | d2 | ...
// Pivoting is smallest absolute value with lowest (row, col) tie-break, so
// the output is deterministic for a given input.
struct SmithResult {
    Mat U; // rows x rows
    Mat D; // rows x cols, diagonal, nonnegative
    Mat V; // cols x cols
};

SmithResult smith_normal_form(const Mat& m);

// Solves m * x = b over the integers.  Returns a witness or nullopt when no
// integer solution exists.  Free coordinates are set to zero, so the result
// is deterministic.
std::optional<std::vector<i64>> solve_integer(const Mat& m, const std::vector<i64>& b);

// Determinant by fraction-free (Bareiss) elimination; used by the property
// tests to confirm |det U| = |det V| = 1.
i64 determinant(const Mat& m);

// rows x cols of a possibly empty matrix (empty matrices are 0 x 0).
inline size_t mat_rows(const Mat& m) { return m.size(); }
inline size_t mat_cols(const Mat& m) { return m.empty() ? 0 : m[0].size(); }

Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_identity(size_t n);

} // namespace floer
