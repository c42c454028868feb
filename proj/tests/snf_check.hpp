// snf_check.hpp
// Overflow-proof verification of Smith-normal-form results for the
// property suites.  The transform matrices U and V can pick up entries
// far beyond int64 even when the input matrix is tiny (a 5x5 with
// entries bounded by 9 has produced |U| ~ 1e12), so the triple product
// and the unimodularity determinants are evaluated in arbitrary
// precision here instead of through the library's checked int64 ops.
#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "floer/snf.hpp"

namespace snf_check {

using bigint = boost::multiprecision::cpp_int;
using BigMat = std::vector<std::vector<bigint>>;

inline BigMat to_big(const floer::Mat& m) {
    BigMat out(m.size());
    for (size_t i = 0; i < m.size(); ++i) out[i].assign(m[i].begin(), m[i].end());
    return out;
}

// Bareiss fraction-free elimination; every division is exact.
inline bigint big_det(BigMat a) {
    size_t n = a.size();
    if (n == 0) return 1;
    bigint prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t s = k + 1;
            while (s < n && a[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

// Empty string when every Smith identity holds for (m, s): U m V = D,
// U and V unimodular, D diagonal and nonnegative with a divisibility
// chain.  Otherwise the first failed identity.
inline std::string identity_failures(const floer::Mat& m, const floer::SmithResult& s) {
    size_t rows = floer::mat_rows(m), cols = floer::mat_cols(m);

    BigMat um(rows, std::vector<bigint>(cols, 0));
    for (size_t i = 0; i < rows; ++i)
        for (size_t t = 0; t < rows; ++t) {
            if (s.U[i][t] == 0) continue;
            for (size_t j = 0; j < cols; ++j) um[i][j] += bigint(s.U[i][t]) * m[t][j];
        }
    BigMat umv(rows, std::vector<bigint>(cols, 0));
    for (size_t i = 0; i < rows; ++i)
        for (size_t t = 0; t < cols; ++t) {
            if (um[i][t] == 0) continue;
            for (size_t j = 0; j < cols; ++j) umv[i][j] += um[i][t] * s.V[t][j];
        }
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (umv[i][j] != s.D[i][j]) return "U m V != D";

    if (rows > 0) {
        bigint du = big_det(to_big(s.U));
        if (du != 1 && du != -1) return "det U is not a unit";
    }
    if (cols > 0) {
        bigint dv = big_det(to_big(s.V));
        if (dv != 1 && dv != -1) return "det V is not a unit";
    }

    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            if (i != j && s.D[i][j] != 0) return "D not diagonal";
            if (i == j && s.D[i][j] < 0) return "negative diagonal entry";
        }
    size_t nmin = std::min(rows, cols);
    for (size_t k = 0; k + 1 < nmin; ++k) {
        floer::i64 a = s.D[k][k], b = s.D[k + 1][k + 1];
        if (a == 0 && b != 0) return "zero before nonzero on the diagonal";
        if (a != 0 && b % a != 0) return "divisibility chain broken";
    }
    return "";
}

} // namespace snf_check
