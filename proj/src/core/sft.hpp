#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "core/group.hpp"
#include "core/lattice.hpp"

namespace polysft {

struct Alphabet {
    std::vector<std::string> symbols;

    int size() const { return static_cast<int>(symbols.size()); }
    int index_of(const std::string& s) const; // -1 if absent
    bool operator==(const Alphabet& other) const { return symbols == other.symbols; }
};

Alphabet make_alphabet(std::vector<std::string> symbols);

struct PatternEntry {
    GroupElement cell;
    int symbol;
};

/// Finite partial map from group elements to symbol indices. Entries are kept
/// sorted by cell coordinates; the support is the cell set.
struct Pattern {
    GroupPtr group;
    std::vector<PatternEntry> entries;
};

Pattern make_pattern(const GroupPtr& group, std::vector<PatternEntry> entries);

struct Sft {
    GroupPtr group;
    Alphabet alphabet;
    std::vector<Pattern> forbidden;
    // Diagnostic tag attached by automorphism_free_product: the 0/1 projection
    // of the base alphabet, and how product symbols decompose.
    struct ProductTag {
        int dims = 0;
        std::vector<std::string> base_alphabet;
        std::vector<int> projection; // one bit per base symbol
        bool operator==(const ProductTag&) const = default;
    };
    std::optional<ProductTag> product_tag;
};

Sft make_sft(GroupPtr group, Alphabet alphabet, std::vector<Pattern> forbidden);

// Smallest r such that every support element of every forbidden pattern lies
// in ball(group, r).
int max_support_radius(const Sft& x);

struct BallDomain {
    std::vector<GroupElement> elements; // sorted canonically
    std::optional<int> radius;          // set when elements == ball(group, radius)
};

struct TorusDomain {
    Lattice lattice; // FreeAbelian groups only
};

using Domain = std::variant<BallDomain, TorusDomain>;

/// Total coloring of a finite region: a Cayley ball (any supported group) or
/// a torus Z^n/L (free abelian only). Values are parallel to the canonical
/// cell order (sorted ball elements, lexicographic residues).
struct Configuration {
    GroupPtr group;
    Alphabet alphabet;
    Domain domain;
    std::vector<int> values;

    bool is_torus() const { return std::holds_alternative<TorusDomain>(domain); }
    const std::vector<GroupElement>& ball_elements() const { return std::get<BallDomain>(domain).elements; }
    const Lattice& torus_lattice() const { return std::get<TorusDomain>(domain).lattice; }
    std::size_t cell_count() const { return values.size(); }
};

Configuration make_ball_configuration(GroupPtr group, Alphabet alphabet,
                                      std::vector<GroupElement> elements, std::vector<int> values,
                                      std::optional<int> radius = std::nullopt);
Configuration make_torus_configuration(GroupPtr group, Alphabet alphabet, Lattice lattice,
                                       std::vector<int> values);

// Symbol at an absolute group element: torus domains reduce modulo the
// lattice, ball domains return nullopt outside the stored element set.
std::optional<int> value_at(const Configuration& c, const GroupElement& g);

// The shift action: result(h) = c(g^-1 h). Ball domains move to g * domain.
Configuration translate(const GroupElement& g, const Configuration& c);

// True iff c(g*h) = p(h) for every support element h.
bool occurs(const Pattern& p, const Configuration& c, const GroupElement& g);

// No forbidden pattern of x occurs at any anchor whose translated support lies
// inside the domain (ball) or at any residue (torus).
bool is_locally_admissible(const Sft& x, const Configuration& c);

struct WangTile {
    std::string north, east, south, west;
};

struct WangTileSet {
    std::vector<WangTile> tiles;
};

// Standard nearest-neighbour encoding on Z^2: one symbol per tile, adjacent
// tiles must agree on the shared edge color.
Sft wang_to_sft(const WangTileSet& t);

} // namespace polysft
