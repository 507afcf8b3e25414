#pragma once

#include "core/sft.hpp"

namespace polysft {

/// Unimodular n x n integer matrix acting on Z^n configurations under the
/// row-vector convention g -> g * m.
struct AutMatrix {
    IntMat entries;

    int dim() const { return static_cast<int>(entries.size()); }
};

AutMatrix make_aut_matrix(IntMat entries); // checks |det| = 1

// I + outer(v, u): maps g to g + (g . v) u. Requires u . v = 0 and v != 0,
// which makes the determinant exactly 1.
AutMatrix shear(const IntVec& u, const IntVec& v);

AutMatrix aut_multiply(const AutMatrix& a, const AutMatrix& b);
AutMatrix aut_inverse(const AutMatrix& a);

// result(g) = c(g * m). Torus domains require m to normalize the lattice;
// ball domains keep the largest sub-window where the image cell is defined.
Configuration apply_automorphism(const AutMatrix& m, const Configuration& c);

enum class DivCheck { Consistent, Refuted };

// Refuted certifies that no extension of c maps into x under m; Consistent is
// only the absence of an obstruction on this window.
DivCheck div_witness_check(const Sft& x, const Configuration& c, const AutMatrix& m);

} // namespace polysft
