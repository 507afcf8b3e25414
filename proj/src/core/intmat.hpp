#pragma once

#include <cstdint>
#include <vector>

namespace polysft {

using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>; // row major

std::int64_t floor_div(std::int64_t a, std::int64_t b);

IntMat identity_matrix(int n);
IntMat matmul(const IntMat& a, const IntMat& b);
IntVec row_times_matrix(const IntVec& v, const IntMat& m);
IntVec matrix_times_col(const IntMat& m, const IntVec& v);
IntMat matrix_power(const IntMat& m, const IntMat& m_inverse, std::int64_t exponent);
std::int64_t determinant(const IntMat& m);

// Adjugate-based inverse for |det| = 1 matrices.
IntMat unimodular_inverse(const IntMat& m);

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_neg(const IntVec& a);
std::int64_t dot(const IntVec& a, const IntVec& b);

// Row-style Hermite normal form of an m x n integer matrix of full column
// rank: returns an n x n upper-triangular matrix with positive diagonal and
// 0 <= h[j][i] < h[i][i] for j < i, whose rows generate the same lattice.
IntMat hnf_rows(IntMat rows, int n);

} // namespace polysft
