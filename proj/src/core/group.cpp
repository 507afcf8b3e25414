#include "core/group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "core/error.hpp"

namespace polysft {

int GroupDescriptor::coord_count() const {
    switch (family) {
        case GroupFamily::FreeAbelian: return rank;
        case GroupFamily::Heisenberg3: return 3;
        case GroupFamily::SemidirectZnByZ: return rank + 1;
    }
    return 0;
}

bool GroupDescriptor::operator==(const GroupDescriptor& other) const {
    return family == other.family && rank == other.rank && twist == other.twist;
}

static std::vector<std::string> default_names(GroupFamily family, int rank) {
    std::vector<std::string> names;
    switch (family) {
        case GroupFamily::FreeAbelian:
            for (int i = 1; i <= rank; ++i) names.push_back("e" + std::to_string(i));
            break;
        case GroupFamily::Heisenberg3:
            names = {"a", "b", "c"};
            break;
        case GroupFamily::SemidirectZnByZ:
            for (int i = 1; i <= rank; ++i) names.push_back("e" + std::to_string(i));
            names.push_back("t");
            break;
    }
    return names;
}

GroupPtr make_free_abelian(int rank) {
    if (rank < 1) fail(ErrorCode::Usage, "free abelian rank must be >= 1");
    auto g = std::make_shared<GroupDescriptor>();
    g->family = GroupFamily::FreeAbelian;
    g->rank = rank;
    g->declared_hirsch = rank;
    g->generator_names = default_names(g->family, rank);
    return g;
}

GroupPtr make_heisenberg3() {
    auto g = std::make_shared<GroupDescriptor>();
    g->family = GroupFamily::Heisenberg3;
    g->rank = 3;
    g->declared_hirsch = 3;
    g->generator_names = default_names(g->family, 3);
    return g;
}

GroupPtr make_semidirect(int rank, const IntMat& twist) {
    if (rank < 1) fail(ErrorCode::Usage, "semidirect rank must be >= 1");
    if (static_cast<int>(twist.size()) != rank) fail(ErrorCode::Usage, "twist matrix must be rank x rank");
    for (const auto& row : twist)
        if (static_cast<int>(row.size()) != rank) fail(ErrorCode::Usage, "twist matrix must be rank x rank");
    std::int64_t det = determinant(twist);
    if (det != 1 && det != -1) fail(ErrorCode::Usage, "twist matrix must have determinant +-1");
    auto g = std::make_shared<GroupDescriptor>();
    g->family = GroupFamily::SemidirectZnByZ;
    g->rank = rank;
    g->twist = twist;
    g->twist_inverse = unimodular_inverse(twist);
    g->declared_hirsch = rank + 1;
    g->generator_names = default_names(g->family, rank);
    return g;
}

GroupElement identity_element(const GroupPtr& g) {
    return GroupElement{g, IntVec(g->coord_count(), 0)};
}

GroupElement make_element(const GroupPtr& g, IntVec coords) {
    if (static_cast<int>(coords.size()) != g->coord_count())
        fail(ErrorCode::Usage, "element coordinate count does not match group");
    return GroupElement{g, std::move(coords)};
}

bool is_identity(const GroupElement& a) {
    return std::all_of(a.coords.begin(), a.coords.end(), [](std::int64_t c) { return c == 0; });
}

static void require_same_group(const GroupElement& a, const GroupElement& b) {
    if (!a.group || !b.group || !(*a.group == *b.group))
        fail(ErrorCode::GroupMismatch, "elements belong to different groups");
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
    require_same_group(a, b);
    const auto& g = *a.group;
    switch (g.family) {
        case GroupFamily::FreeAbelian:
            return GroupElement{a.group, vec_add(a.coords, b.coords)};
        case GroupFamily::Heisenberg3: {
            // (x1,y1,z1)(x2,y2,z2) = (x1+x2, y1+y2, z1+z2+x1*y2)
            IntVec c(3);
            c[0] = a.coords[0] + b.coords[0];
            c[1] = a.coords[1] + b.coords[1];
            c[2] = a.coords[2] + b.coords[2] + a.coords[0] * b.coords[1];
            return GroupElement{a.group, std::move(c)};
        }
        case GroupFamily::SemidirectZnByZ: {
            // (v1,t1)(v2,t2) = (v1 + M^t1 v2, t1+t2)
            int n = g.rank;
            IntVec v2(b.coords.begin(), b.coords.begin() + n);
            IntMat mt = matrix_power(g.twist, g.twist_inverse, a.coords[n]);
            IntVec moved = matrix_times_col(mt, v2);
            IntVec c(n + 1);
            for (int i = 0; i < n; ++i) c[i] = a.coords[i] + moved[i];
            c[n] = a.coords[n] + b.coords[n];
            return GroupElement{a.group, std::move(c)};
        }
    }
    fail(ErrorCode::Internal, "unknown group family");
}

GroupElement inverse(const GroupElement& a) {
    const auto& g = *a.group;
    switch (g.family) {
        case GroupFamily::FreeAbelian:
            return GroupElement{a.group, vec_neg(a.coords)};
        case GroupFamily::Heisenberg3: {
            IntVec c(3);
            c[0] = -a.coords[0];
            c[1] = -a.coords[1];
            c[2] = a.coords[0] * a.coords[1] - a.coords[2];
            return GroupElement{a.group, std::move(c)};
        }
        case GroupFamily::SemidirectZnByZ: {
            int n = g.rank;
            IntVec v(a.coords.begin(), a.coords.begin() + n);
            IntMat mt = matrix_power(g.twist, g.twist_inverse, -a.coords[n]);
            IntVec moved = matrix_times_col(mt, v);
            IntVec c(n + 1);
            for (int i = 0; i < n; ++i) c[i] = -moved[i];
            c[n] = -a.coords[n];
            return GroupElement{a.group, std::move(c)};
        }
    }
    fail(ErrorCode::Internal, "unknown group family");
}

GroupElement power(const GroupElement& a, std::int64_t exponent) {
    GroupElement base = exponent >= 0 ? a : inverse(a);
    std::int64_t e = exponent >= 0 ? exponent : -exponent;
    GroupElement acc = identity_element(a.group);
    GroupElement sq = base;
    while (e > 0) {
        if (e & 1) acc = multiply(acc, sq);
        e >>= 1;
        if (e > 0) sq = multiply(sq, sq);
    }
    return acc;
}

GroupElement generator(const GroupPtr& g, int i) {
    if (i < 0 || i >= g->generator_count()) fail(ErrorCode::Usage, "generator index out of range");
    IntVec coords(g->coord_count(), 0);
    switch (g->family) {
        case GroupFamily::FreeAbelian:
        case GroupFamily::Heisenberg3:
            coords[i] = 1;
            break;
        case GroupFamily::SemidirectZnByZ:
            coords[i] = 1; // generator i < rank is a lattice generator, i == rank is the Z part
            break;
    }
    return GroupElement{g, std::move(coords)};
}

std::vector<GroupElement> ball(const GroupPtr& g, int r) {
    if (r < 0) fail(ErrorCode::Usage, "ball radius must be >= 0");
    std::set<IntVec> seen;
    std::vector<GroupElement> frontier{identity_element(g)};
    seen.insert(frontier[0].coords);
    std::vector<GroupElement> gens;
    for (int i = 0; i < g->generator_count(); ++i) {
        gens.push_back(generator(g, i));
        gens.push_back(inverse(gens.back()));
    }
    for (int step = 0; step < r; ++step) {
        std::vector<GroupElement> next;
        for (const auto& e : frontier)
            for (const auto& s : gens) {
                GroupElement p = multiply(e, s);
                if (seen.insert(p.coords).second) next.push_back(std::move(p));
            }
        frontier = std::move(next);
    }
    std::vector<GroupElement> out;
    out.reserve(seen.size());
    for (const auto& c : seen) out.push_back(GroupElement{g, c});
    return out; // std::set iteration is already lexicographic
}

std::vector<int> word_norms(const GroupPtr& g, const std::vector<GroupElement>& elements, int max_radius) {
    std::map<IntVec, int> dist;
    std::set<IntVec> wanted;
    for (const auto& e : elements) wanted.insert(e.coords);
    std::vector<GroupElement> gens;
    for (int i = 0; i < g->generator_count(); ++i) {
        gens.push_back(generator(g, i));
        gens.push_back(inverse(gens.back()));
    }
    std::vector<GroupElement> frontier{identity_element(g)};
    dist[frontier[0].coords] = 0;
    wanted.erase(frontier[0].coords);
    for (int r = 1; r <= max_radius && !wanted.empty(); ++r) {
        std::vector<GroupElement> next;
        for (const auto& e : frontier)
            for (const auto& s : gens) {
                GroupElement p = multiply(e, s);
                if (dist.emplace(p.coords, r).second) {
                    wanted.erase(p.coords);
                    next.push_back(std::move(p));
                }
            }
        frontier = std::move(next);
    }
    if (!wanted.empty()) fail(ErrorCode::Usage, "element beyond word-norm search radius");
    std::vector<int> out;
    out.reserve(elements.size());
    for (const auto& e : elements) out.push_back(dist.at(e.coords));
    return out;
}

} // namespace polysft
