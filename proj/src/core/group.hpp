#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "core/intmat.hpp"

namespace polysft {

enum class GroupFamily { FreeAbelian, Heisenberg3, SemidirectZnByZ };

/// One of the supported concrete group families, with exact integer normal
/// forms. Immutable after construction; shared by reference between elements.
struct GroupDescriptor {
    GroupFamily family;
    int rank;                 // n for FreeAbelian and SemidirectZnByZ; 3 for Heisenberg3
    IntMat twist;             // SemidirectZnByZ only: |det| = 1
    IntMat twist_inverse;     // cached, integral because |det twist| = 1
    int declared_hirsch;
    std::vector<std::string> generator_names;

    // Length of an element's coordinate vector: n, 3, or n+1.
    int coord_count() const;
    int generator_count() const { return static_cast<int>(generator_names.size()); }

    bool operator==(const GroupDescriptor& other) const;
};

using GroupPtr = std::shared_ptr<const GroupDescriptor>;

GroupPtr make_free_abelian(int rank);
GroupPtr make_heisenberg3();
GroupPtr make_semidirect(int rank, const IntMat& twist);

struct GroupElement {
    GroupPtr group;
    IntVec coords;

    bool operator==(const GroupElement& other) const { return coords == other.coords; }
    bool operator<(const GroupElement& other) const { return coords < other.coords; }
};

GroupElement identity_element(const GroupPtr& g);
GroupElement make_element(const GroupPtr& g, IntVec coords);
bool is_identity(const GroupElement& a);

GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
GroupElement power(const GroupElement& a, std::int64_t exponent);

// The i-th standard generator (0-based).
GroupElement generator(const GroupPtr& g, int i);

// All elements expressible as words of length <= r in the standard generators
// and their inverses, sorted lexicographically on coords.
std::vector<GroupElement> ball(const GroupPtr& g, int r);

// Word norm of each element (length of a shortest generator word), computed by
// breadth-first search. Throws if an element is farther than max_radius.
std::vector<int> word_norms(const GroupPtr& g, const std::vector<GroupElement>& elements,
                            int max_radius = 64);

} // namespace polysft
