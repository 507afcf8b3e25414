#pragma once

#include "core/hom.hpp"
#include "core/sft.hpp"

namespace polysft {

// SFT on phi.source whose points are exactly the pullbacks x o phi of points
// of x: forbidden patterns of x lifted through a fixed section of phi, plus
// constancy patterns along every kernel generator.
Sft quotient_lift(const Sft& x, const Homomorphism& phi);

// Same forbidden patterns, supports pushed into emb.target elementwise.
// Nonemptiness is preserved in both directions.
Sft subgroup_induce(const Sft& x, const Homomorphism& emb);

// Componentwise product: a configuration is admissible iff both projections
// are. Alphabet is the cartesian product, ordered lexicographically.
Sft product(const Sft& x1, const Sft& x2);

// Nearest-neighbour SFT on Z^n over {0,1,2}^n whose points are the
// coordinatewise mod-3 marker and its translates: along axis i the only
// allowed neighbour pair increments digit i modulo 3.
Sft mod3_marker(int n);

// Embed a Z^2 SFT into Z^n and force constancy in directions e_3 ... e_n.
Sft extend_periodic(const Sft& y, int n);

// Product of n reoriented periodic extensions of the base with the mod-3
// marker. The projection (one bit per base symbol) is carried as metadata
// for window diagnostics; it does not constrain the SFT.
Sft automorphism_free_product(const Sft& base, const std::vector<int>& projection, int n);

// Apply a chain of quotient lifts / subgroup inductions to the Wang SFT of t.
// Emptiness is preserved at each step.
Sft reduce_to_group(const WangTileSet& t, const std::vector<Homomorphism>& chain);

// Diagnostic for automorphism_free_product outputs: true iff the projected
// first component is constant along e_2 wherever both cells are visible.
bool projection_columns_monochromatic(const Sft& x, const Configuration& c);

} // namespace polysft
