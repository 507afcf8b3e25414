#include "core/intmat.hpp"

#include <cstdlib>
#include <utility>

#include "core/error.hpp"

namespace polysft {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

IntMat identity_matrix(int n) {
    IntMat m(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat matmul(const IntMat& a, const IntMat& b) {
    std::size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
    IntMat r(rows, IntVec(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            std::int64_t aik = a[i][k];
            if (aik == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) r[i][j] += aik * b[k][j];
        }
    return r;
}

IntVec row_times_matrix(const IntVec& v, const IntMat& m) {
    std::size_t n = m.empty() ? 0 : m[0].size();
    IntVec r(n, 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) r[j] += v[i] * m[i][j];
    }
    return r;
}

IntVec matrix_times_col(const IntMat& m, const IntVec& v) {
    IntVec r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

IntMat matrix_power(const IntMat& m, const IntMat& m_inverse, std::int64_t exponent) {
    const IntMat& base = exponent >= 0 ? m : m_inverse;
    std::int64_t e = exponent >= 0 ? exponent : -exponent;
    IntMat acc = identity_matrix(static_cast<int>(m.size()));
    IntMat sq = base;
    while (e > 0) {
        if (e & 1) acc = matmul(acc, sq);
        e >>= 1;
        if (e > 0) sq = matmul(sq, sq);
    }
    return acc;
}

std::int64_t determinant(const IntMat& m) {
    // Fraction-free Gaussian elimination (Bareiss).
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    IntMat a = m;
    std::int64_t sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { swap = i; break; }
            if (swap < 0) return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

IntMat unimodular_inverse(const IntMat& m) {
    int n = static_cast<int>(m.size());
    std::int64_t det = determinant(m);
    if (det != 1 && det != -1) fail(ErrorCode::Usage, "matrix is not unimodular");
    if (n == 1) return {{det}};
    IntMat adj(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntMat minor(n - 1, IntVec(n - 1, 0));
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor[rr][cc++] = m[r][c];
                }
                ++rr;
            }
            std::int64_t cof = determinant(minor);
            if ((i + j) % 2 != 0) cof = -cof;
            adj[j][i] = cof * det; // det = 1/det for unimodular
        }
    return adj;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVec vec_neg(const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

std::int64_t dot(const IntVec& a, const IntVec& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntMat hnf_rows(IntMat rows, int n) {
    // Column by column Euclidean reduction on rows.
    int m = static_cast<int>(rows.size());
    if (m < n) fail(ErrorCode::Lattice, "not enough rows for full-rank HNF");
    for (int col = 0; col < n; ++col) {
        // Zero out entries below the pivot row by gcd steps.
        while (true) {
            int pivot = -1;
            for (int r = col; r < m; ++r) {
                if (rows[r][col] == 0) continue;
                if (pivot < 0 || std::llabs(rows[r][col]) < std::llabs(rows[pivot][col])) pivot = r;
            }
            if (pivot < 0) fail(ErrorCode::Lattice, "singular lattice basis");
            std::swap(rows[col], rows[pivot]);
            bool done = true;
            for (int r = col + 1; r < m; ++r) {
                if (rows[r][col] == 0) continue;
                std::int64_t q = floor_div(rows[r][col], rows[col][col]);
                for (int j = 0; j < n; ++j) rows[r][j] -= q * rows[col][j];
                if (rows[r][col] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[col][col] < 0)
            for (int j = 0; j < n; ++j) rows[col][j] = -rows[col][j];
        for (int r = 0; r < col; ++r) {
            std::int64_t q = floor_div(rows[r][col], rows[col][col]);
            for (int j = 0; j < n; ++j) rows[r][j] -= q * rows[col][j];
        }
    }
    rows.resize(n);
    return rows;
}

} // namespace polysft
