#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/intmat.hpp"

namespace polysft {

/// Finite-index subgroup of Z^n, stored as a row-style Hermite normal form
/// basis: upper triangular, positive diagonal, entries above a pivot reduced
/// modulo it. Canonical residues are the integer box 0 <= v_i < basis[i][i].
class Lattice {
public:
    explicit Lattice(const IntMat& basis_rows);

    int dim() const { return n_; }
    const IntMat& basis() const { return basis_; }
    std::int64_t index() const; // |det|, the number of residues

    IntVec reduce(IntVec v) const;      // canonical representative of v + L
    bool contains(const IntVec& v) const;
    bool operator==(const Lattice& other) const { return basis_ == other.basis_; }

    std::vector<IntVec> residues() const;      // canonical order: lexicographic
    std::size_t residue_index(const IntVec& canonical) const;

    std::string to_text() const;               // "a,b;c,d" row-major
    static Lattice from_text(const std::string& text, int expected_dim = 0);

private:
    int n_;
    IntMat basis_;
};

// All HNF lattices of Z^n with index <= max_index, in a fixed deterministic
// order (by index, then lexicographic on the basis).
std::vector<Lattice> enumerate_lattices(int n, std::int64_t max_index);

} // namespace polysft
