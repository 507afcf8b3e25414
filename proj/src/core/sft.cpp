#include "core/sft.hpp"

#include <algorithm>
#include <set>

#include "core/error.hpp"

namespace polysft {

int Alphabet::index_of(const std::string& s) const {
    for (std::size_t i = 0; i < symbols.size(); ++i)
        if (symbols[i] == s) return static_cast<int>(i);
    return -1;
}

Alphabet make_alphabet(std::vector<std::string> symbols) {
    if (symbols.empty()) fail(ErrorCode::Usage, "alphabet must be nonempty");
    std::set<std::string> seen(symbols.begin(), symbols.end());
    if (seen.size() != symbols.size()) fail(ErrorCode::Usage, "alphabet has duplicate symbols");
    return Alphabet{std::move(symbols)};
}

Pattern make_pattern(const GroupPtr& group, std::vector<PatternEntry> entries) {
    if (entries.empty()) fail(ErrorCode::Usage, "pattern must have nonempty support");
    for (const auto& e : entries)
        if (!(*e.cell.group == *group)) fail(ErrorCode::GroupMismatch, "pattern cell not in group");
    std::sort(entries.begin(), entries.end(),
              [](const PatternEntry& a, const PatternEntry& b) { return a.cell.coords < b.cell.coords; });
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i].cell.coords == entries[i - 1].cell.coords)
            fail(ErrorCode::Usage, "pattern support has a repeated cell");
    return Pattern{group, std::move(entries)};
}

Sft make_sft(GroupPtr group, Alphabet alphabet, std::vector<Pattern> forbidden) {
    for (const auto& p : forbidden) {
        if (!(*p.group == *group)) fail(ErrorCode::GroupMismatch, "forbidden pattern on wrong group");
        for (const auto& e : p.entries)
            if (e.symbol < 0 || e.symbol >= alphabet.size())
                fail(ErrorCode::Usage, "pattern symbol index out of alphabet range");
    }
    return Sft{std::move(group), std::move(alphabet), std::move(forbidden), std::nullopt};
}

int max_support_radius(const Sft& x) {
    std::vector<GroupElement> cells;
    for (const auto& p : x.forbidden)
        for (const auto& e : p.entries) cells.push_back(e.cell);
    if (cells.empty()) return 0;
    auto norms = word_norms(x.group, cells);
    return *std::max_element(norms.begin(), norms.end());
}

Configuration make_ball_configuration(GroupPtr group, Alphabet alphabet,
                                      std::vector<GroupElement> elements, std::vector<int> values,
                                      std::optional<int> radius) {
    if (elements.size() != values.size())
        fail(ErrorCode::Usage, "configuration values must cover exactly the domain");
    if (elements.empty()) fail(ErrorCode::Usage, "configuration domain must be nonempty");
    // Keep elements sorted with their values.
    std::vector<std::size_t> order(elements.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return elements[a].coords < elements[b].coords;
    });
    std::vector<GroupElement> sorted_elems;
    std::vector<int> sorted_vals;
    sorted_elems.reserve(elements.size());
    sorted_vals.reserve(values.size());
    for (std::size_t i : order) {
        sorted_elems.push_back(elements[i]);
        sorted_vals.push_back(values[i]);
    }
    for (std::size_t i = 1; i < sorted_elems.size(); ++i)
        if (sorted_elems[i].coords == sorted_elems[i - 1].coords)
            fail(ErrorCode::Usage, "configuration domain has a repeated element");
    for (int v : sorted_vals)
        if (v < 0 || v >= alphabet.size()) fail(ErrorCode::Usage, "configuration value out of range");
    for (const auto& e : sorted_elems)
        if (!(*e.group == *group)) fail(ErrorCode::GroupMismatch, "domain element not in group");
    return Configuration{std::move(group), std::move(alphabet),
                         BallDomain{std::move(sorted_elems), radius}, std::move(sorted_vals)};
}

Configuration make_torus_configuration(GroupPtr group, Alphabet alphabet, Lattice lattice,
                                       std::vector<int> values) {
    if (group->family != GroupFamily::FreeAbelian)
        fail(ErrorCode::Unsupported, "torus domains require a free abelian group");
    if (lattice.dim() != group->rank) fail(ErrorCode::Lattice, "lattice dimension != group rank");
    if (static_cast<std::int64_t>(values.size()) != lattice.index())
        fail(ErrorCode::Usage, "configuration values must cover exactly the residues");
    for (int v : values)
        if (v < 0 || v >= alphabet.size()) fail(ErrorCode::Usage, "configuration value out of range");
    return Configuration{std::move(group), std::move(alphabet), TorusDomain{std::move(lattice)},
                         std::move(values)};
}

std::optional<int> value_at(const Configuration& c, const GroupElement& g) {
    if (c.is_torus()) {
        const Lattice& l = c.torus_lattice();
        return c.values[l.residue_index(l.reduce(g.coords))];
    }
    const auto& elems = c.ball_elements();
    auto it = std::lower_bound(elems.begin(), elems.end(), g,
                               [](const GroupElement& a, const GroupElement& b) {
                                   return a.coords < b.coords;
                               });
    if (it == elems.end() || !(it->coords == g.coords)) return std::nullopt;
    return c.values[static_cast<std::size_t>(it - elems.begin())];
}

Configuration translate(const GroupElement& g, const Configuration& c) {
    if (!(*g.group == *c.group)) fail(ErrorCode::GroupMismatch, "translation element not in group");
    if (c.is_torus()) {
        const Lattice& l = c.torus_lattice();
        auto res = l.residues();
        std::vector<int> vals(res.size());
        GroupElement ginv = inverse(g);
        for (std::size_t i = 0; i < res.size(); ++i) {
            IntVec pre = l.reduce(vec_add(ginv.coords, res[i]));
            vals[i] = c.values[l.residue_index(pre)];
        }
        return make_torus_configuration(c.group, c.alphabet, l, std::move(vals));
    }
    // result(g*d) = c(d): move every domain element by g.
    const auto& elems = c.ball_elements();
    std::vector<GroupElement> moved;
    moved.reserve(elems.size());
    for (const auto& d : elems) moved.push_back(multiply(g, d));
    return make_ball_configuration(c.group, c.alphabet, std::move(moved), c.values);
}

bool occurs(const Pattern& p, const Configuration& c, const GroupElement& g) {
    if (!(*p.group == *c.group)) fail(ErrorCode::GroupMismatch, "pattern and configuration groups differ");
    for (const auto& e : p.entries) {
        GroupElement cell = multiply(g, e.cell);
        auto v = value_at(c, cell);
        if (!v.has_value())
            fail(ErrorCode::Domain, "pattern support falls outside the configuration domain");
        if (*v != e.symbol) return false;
    }
    return true;
}

static bool pattern_fits(const Pattern& p, const Configuration& c, const GroupElement& g) {
    for (const auto& e : p.entries) {
        if (!value_at(c, multiply(g, e.cell)).has_value()) return false;
    }
    return true;
}

bool is_locally_admissible(const Sft& x, const Configuration& c) {
    if (!(*x.group == *c.group)) fail(ErrorCode::GroupMismatch, "sft and configuration groups differ");
    if (!(x.alphabet == c.alphabet)) fail(ErrorCode::AlphabetMismatch, "sft and configuration alphabets differ");
    if (c.is_torus()) {
        const Lattice& l = c.torus_lattice();
        for (const auto& p : x.forbidden)
            for (const auto& r : l.residues())
                if (occurs(p, c, GroupElement{c.group, r})) return false;
        return true;
    }
    const auto& elems = c.ball_elements();
    for (const auto& p : x.forbidden) {
        std::set<IntVec> anchors;
        for (const auto& d : elems)
            for (const auto& e : p.entries) anchors.insert(multiply(d, inverse(e.cell)).coords);
        for (const auto& a : anchors) {
            GroupElement g{c.group, a};
            if (pattern_fits(p, c, g) && occurs(p, c, g)) return false;
        }
    }
    return true;
}

Sft wang_to_sft(const WangTileSet& t) {
    if (t.tiles.empty()) fail(ErrorCode::Usage, "tile set must be nonempty");
    GroupPtr z2 = make_free_abelian(2);
    std::vector<std::string> symbols;
    for (std::size_t i = 0; i < t.tiles.size(); ++i) symbols.push_back("t" + std::to_string(i));
    Alphabet alphabet = make_alphabet(std::move(symbols));
    GroupElement origin = identity_element(z2);
    GroupElement e1 = generator(z2, 0), e2 = generator(z2, 1);
    std::vector<Pattern> forbidden;
    int k = static_cast<int>(t.tiles.size());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (t.tiles[i].east != t.tiles[j].west)
                forbidden.push_back(make_pattern(z2, {{origin, i}, {e1, j}}));
            if (t.tiles[i].north != t.tiles[j].south)
                forbidden.push_back(make_pattern(z2, {{origin, i}, {e2, j}}));
        }
    return make_sft(z2, std::move(alphabet), std::move(forbidden));
}

} // namespace polysft
