#include "core/automorphism.hpp"

#include "core/error.hpp"

namespace polysft {

AutMatrix make_aut_matrix(IntMat entries) {
    if (entries.empty()) fail(ErrorCode::Usage, "automorphism matrix must be nonempty");
    for (const auto& row : entries)
        if (row.size() != entries.size()) fail(ErrorCode::Usage, "automorphism matrix must be square");
    std::int64_t det = determinant(entries);
    if (det != 1 && det != -1) fail(ErrorCode::Usage, "automorphism matrix must be unimodular");
    return AutMatrix{std::move(entries)};
}

AutMatrix shear(const IntVec& u, const IntVec& v) {
    if (u.size() != v.size()) fail(ErrorCode::Usage, "shear vectors must have equal length");
    bool v_zero = true;
    for (auto x : v)
        if (x != 0) v_zero = false;
    if (v_zero) fail(ErrorCode::Usage, "shear direction v must be nonzero");
    if (dot(u, v) != 0) fail(ErrorCode::Usage, "shear vectors must be orthogonal");
    int n = static_cast<int>(u.size());
    IntMat m = identity_matrix(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] += v[i] * u[j];
    return make_aut_matrix(std::move(m));
}

AutMatrix aut_multiply(const AutMatrix& a, const AutMatrix& b) {
    return make_aut_matrix(matmul(a.entries, b.entries));
}

AutMatrix aut_inverse(const AutMatrix& a) {
    return make_aut_matrix(unimodular_inverse(a.entries));
}

Configuration apply_automorphism(const AutMatrix& m, const Configuration& c) {
    if (c.group->family != GroupFamily::FreeAbelian)
        fail(ErrorCode::Unsupported, "automorphisms act on free abelian groups only");
    if (m.dim() != c.group->rank) fail(ErrorCode::Usage, "matrix dimension != group rank");
    if (c.is_torus()) {
        const Lattice& l = c.torus_lattice();
        for (const auto& row : l.basis()) {
            IntVec image = row_times_matrix(row, m.entries);
            if (!l.contains(image))
                fail(ErrorCode::Lattice, "automorphism does not preserve the torus lattice");
        }
        auto residues = l.residues();
        std::vector<int> vals(residues.size());
        for (std::size_t i = 0; i < residues.size(); ++i) {
            IntVec pre = l.reduce(row_times_matrix(residues[i], m.entries));
            vals[i] = c.values[l.residue_index(pre)];
        }
        return make_torus_configuration(c.group, c.alphabet, l, std::move(vals));
    }
    const auto& elems = c.ball_elements();
    std::vector<GroupElement> kept;
    std::vector<int> vals;
    for (const auto& g : elems) {
        GroupElement image{c.group, row_times_matrix(g.coords, m.entries)};
        auto v = value_at(c, image);
        if (!v.has_value()) continue;
        kept.push_back(g);
        vals.push_back(*v);
    }
    if (kept.empty()) fail(ErrorCode::Domain, "transformed window is empty");
    return make_ball_configuration(c.group, c.alphabet, std::move(kept), std::move(vals));
}

DivCheck div_witness_check(const Sft& x, const Configuration& c, const AutMatrix& m) {
    if (!is_locally_admissible(x, c))
        fail(ErrorCode::Usage, "div_witness_check requires an admissible configuration");
    Configuration image = apply_automorphism(m, c);
    return is_locally_admissible(x, image) ? DivCheck::Consistent : DivCheck::Refuted;
}

} // namespace polysft
