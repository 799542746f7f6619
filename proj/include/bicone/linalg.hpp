#ifndef BICONE_LINALG_HPP
#define BICONE_LINALG_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace bicone {

using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>; // row-major

inline QMat mat_zero(size_t rows, size_t cols) {
    return QMat(rows, QVec(cols, mpq_class(0)));
}

inline QMat mat_identity(size_t n) {
    QMat m = mat_zero(n, n);
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline QMat mat_mul(const QMat& a, const QMat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    QMat r = mat_zero(n, m);
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < m; ++j)
                if (b[l][j] != 0) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

inline QVec mat_vec(const QMat& a, const QVec& v) {
    QVec r(a.size(), mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (a[i][j] != 0 && v[j] != 0) r[i] += a[i][j] * v[j];
    return r;
}

inline mpq_class mat_trace(const QMat& a) {
    mpq_class t(0);
    for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

// In-place row echelon reduction; returns the pivot columns.
inline std::vector<size_t> row_echelon(QMat& m) {
    std::vector<size_t> pivots;
    size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        mpq_class inv = mpq_class(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            mpq_class f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t mat_rank(QMat m) { return row_echelon(m).size(); }

inline size_t rank_of_rows(const std::vector<QVec>& rows) {
    return mat_rank(QMat(rows));
}

// Basis of the null space of a (solutions of a x = 0), one vector per row.
inline std::vector<QVec> mat_kernel(QMat a) {
    size_t cols = a.empty() ? 0 : a[0].size();
    auto pivots = row_echelon(a);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(cols, mpq_class(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of a x = b, if consistent.
inline std::optional<QVec> mat_solve(QMat a, const QVec& b) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    auto pivots = row_echelon(a);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt; // 0 = 1 row
    QVec x(cols, mpq_class(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
    return x;
}

inline QMat mat_inverse(const QMat& a) {
    size_t n = a.size();
    QMat m = a;
    for (size_t i = 0; i < n; ++i) {
        QVec id(n, mpq_class(0));
        id[i] = 1;
        m[i].insert(m[i].end(), id.begin(), id.end());
    }
    auto pivots = row_echelon(m);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw std::domain_error("matrix not invertible");
    QMat inv = mat_zero(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

inline bool vec_is_zero(const QVec& v) {
    for (auto& x : v)
        if (x != 0) return false;
    return true;
}

// Is v in the row span of the given vectors? (rank comparison)
inline bool in_span(const std::vector<QVec>& span, const QVec& v) {
    QMat m(span);
    size_t r0 = mat_rank(m);
    m.push_back(v);
    return mat_rank(m) == r0;
}

} // namespace bicone

#endif
