#pragma once

#include <vector>

#include "core/group.hpp"

namespace polysft {

enum class HomKind { Quotient, Embedding, General };

/// Homomorphism between supported groups, given by generator images.
/// Well-definedness is a property of the images (see check_hom); operations
/// that need a valid homomorphism verify it and throw on violation.
struct Homomorphism {
    GroupPtr source;
    GroupPtr target;
    std::vector<GroupElement> images; // one per source generator
    HomKind kind = HomKind::General;
    std::vector<GroupElement> kernel_generators; // Quotient only
};

Homomorphism make_hom(GroupPtr source, GroupPtr target, std::vector<GroupElement> images,
                      HomKind kind = HomKind::General,
                      std::vector<GroupElement> kernel_generators = {});

// Exponents of the canonical generator word of a (one per generator, in
// generator order). Every element factors uniquely this way per family.
std::vector<std::int64_t> canonical_word(const GroupElement& a);

GroupElement apply_hom(const Homomorphism& h, const GroupElement& a);

// True iff the generator images satisfy every defining relation of the source
// family, and (for Quotient kind) every kernel generator maps to the identity.
bool check_hom(const Homomorphism& h);

} // namespace polysft
