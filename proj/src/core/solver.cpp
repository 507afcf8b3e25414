#include "core/solver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "core/error.hpp"

namespace polysft {

namespace {

struct Placement {
    std::vector<std::pair<int, int>> cells; // (cell index, required symbol)
};

// Grounded constraint network: cells in canonical order plus every anchored
// forbidden-pattern placement that fits the region.
struct Grounding {
    int symbol_count = 0;
    std::size_t cell_count = 0;
    std::vector<Placement> placements;
    std::vector<std::vector<std::pair<int, int>>> watched; // cell -> (placement, required)
    bool trivially_empty = false; // a placement with a single distinct cell set per symbol... unused

    void finish(std::size_t cells, int symbols) {
        cell_count = cells;
        symbol_count = symbols;
        watched.assign(cells, {});
        for (std::size_t p = 0; p < placements.size(); ++p)
            for (const auto& [cell, sym] : placements[p].cells)
                watched[cell].push_back({static_cast<int>(p), sym});
    }
};

Grounding ground_ball(const Sft& x, const std::vector<GroupElement>& cells) {
    Grounding g;
    std::map<IntVec, int> cell_index;
    for (std::size_t i = 0; i < cells.size(); ++i) cell_index[cells[i].coords] = static_cast<int>(i);
    for (const auto& p : x.forbidden) {
        std::set<IntVec> anchors;
        for (const auto& d : cells)
            for (const auto& e : p.entries) anchors.insert(multiply(d, inverse(e.cell)).coords);
        for (const auto& a : anchors) {
            GroupElement anchor{x.group, a};
            Placement pl;
            bool fits = true;
            for (const auto& e : p.entries) {
                auto it = cell_index.find(multiply(anchor, e.cell).coords);
                if (it == cell_index.end()) { fits = false; break; }
                pl.cells.push_back({it->second, e.symbol});
            }
            if (fits) g.placements.push_back(std::move(pl));
        }
    }
    g.finish(cells.size(), x.alphabet.size());
    return g;
}

Grounding ground_torus(const Sft& x, const Lattice& l) {
    Grounding g;
    auto residues = l.residues();
    for (const auto& p : x.forbidden) {
        for (const auto& r : residues) {
            Placement pl;
            bool possible = true;
            std::map<std::size_t, int> required;
            for (const auto& e : p.entries) {
                std::size_t cell = l.residue_index(l.reduce(vec_add(r, e.cell.coords)));
                auto [it, fresh] = required.emplace(cell, e.symbol);
                if (!fresh && it->second != e.symbol) { possible = false; break; }
            }
            if (!possible) continue; // two support cells wrap onto one residue with different symbols
            for (const auto& [cell, sym] : required) pl.cells.push_back({static_cast<int>(cell), sym});
            g.placements.push_back(std::move(pl));
        }
    }
    g.finish(residues.size(), x.alphabet.size());
    return g;
}

enum class SearchOutcome { Done, BudgetExceeded };

// Backtracker with forward checking. Assignments are counted as search nodes;
// the visitor receives every full admissible assignment and returns false to
// stop the search.
class Search {
public:
    Search(const Grounding& g, std::uint64_t budget)
        : g_(g), budget_(budget),
          allowed_(g.cell_count, std::vector<char>(g.symbol_count, 1)),
          allowed_count_(g.cell_count, g.symbol_count),
          assigned_(g.cell_count, -1),
          hit_(g.placements.size(), 0),
          bad_(g.placements.size(), 0) {}

    std::uint64_t nodes() const { return nodes_; }

    SearchOutcome run(const std::function<bool(const std::vector<int>&)>& visit) {
        // Unit placements prune up front.
        for (const auto& pl : g_.placements)
            if (pl.cells.size() == 1) {
                auto [cell, sym] = pl.cells[0];
                if (allowed_[cell][sym]) {
                    allowed_[cell][sym] = 0;
                    if (--allowed_count_[cell] == 0) return SearchOutcome::Done;
                }
            }
        stop_ = false;
        bool out_of_budget = !descend(visit);
        return out_of_budget ? SearchOutcome::BudgetExceeded : SearchOutcome::Done;
    }

private:
    struct TrailEntry {
        enum Kind { Prune, Hit, Bad } kind;
        int a, b;
    };

    int pick_cell() const {
        int best = -1, best_count = g_.symbol_count + 1;
        for (std::size_t i = 0; i < g_.cell_count; ++i)
            if (assigned_[i] < 0 && allowed_count_[i] < best_count) {
                best = static_cast<int>(i);
                best_count = allowed_count_[i];
            }
        return best;
    }

    bool assign(int cell, int sym, std::size_t& trail_mark) {
        trail_mark = trail_.size();
        assigned_[cell] = sym;
        for (const auto& [p, req] : g_.watched[cell]) {
            if (req == sym) {
                ++hit_[p];
                trail_.push_back({TrailEntry::Hit, p, 0});
            } else {
                ++bad_[p];
                trail_.push_back({TrailEntry::Bad, p, 0});
                continue;
            }
            const auto& pl = g_.placements[p];
            int size = static_cast<int>(pl.cells.size());
            if (bad_[p] > 0) continue;
            if (hit_[p] == size) return false; // forbidden pattern completed
            if (hit_[p] == size - 1) {
                for (const auto& [other, osym] : pl.cells) {
                    if (assigned_[other] >= 0) continue;
                    if (allowed_[other][osym]) {
                        allowed_[other][osym] = 0;
                        --allowed_count_[other];
                        trail_.push_back({TrailEntry::Prune, other, osym});
                        if (allowed_count_[other] == 0) return false;
                    }
                    break;
                }
            }
        }
        return true;
    }

    void undo(int cell, std::size_t trail_mark) {
        while (trail_.size() > trail_mark) {
            TrailEntry e = trail_.back();
            trail_.pop_back();
            switch (e.kind) {
                case TrailEntry::Prune:
                    allowed_[e.a][e.b] = 1;
                    ++allowed_count_[e.a];
                    break;
                case TrailEntry::Hit: --hit_[e.a]; break;
                case TrailEntry::Bad: --bad_[e.a]; break;
            }
        }
        assigned_[cell] = -1;
    }

    // Returns false when the node budget ran out.
    bool descend(const std::function<bool(const std::vector<int>&)>& visit) {
        int cell = pick_cell();
        if (cell < 0) {
            if (!visit(assigned_)) stop_ = true;
            return true;
        }
        for (int sym = 0; sym < g_.symbol_count; ++sym) {
            if (!allowed_[cell][sym]) continue;
            if (++nodes_ > budget_) return false;
            std::size_t mark = 0;
            if (assign(cell, sym, mark)) {
                if (!descend(visit)) { undo(cell, mark); return false; }
            }
            undo(cell, mark);
            if (stop_) return true;
        }
        return true;
    }

    const Grounding& g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool stop_ = false;
    std::vector<std::vector<char>> allowed_;
    std::vector<int> allowed_count_;
    std::vector<int> assigned_;
    std::vector<int> hit_, bad_;
    std::vector<TrailEntry> trail_;
};

} // namespace

EmptinessVerdict check_ball_emptiness(const Sft& x, int r, std::uint64_t budget) {
    if (r < 0) fail(ErrorCode::Usage, "radius must be >= 0");
    int needed = max_support_radius(x);
    if (r < needed)
        fail(ErrorCode::Domain, "radius " + std::to_string(r) + " is below the pattern support radius " +
                                    std::to_string(needed));
    if (budget == 0) budget = kDefaultNodeBudget;
    auto cells = ball(x.group, r);
    Grounding g = ground_ball(x, cells);
    Search search(g, budget);
    std::optional<std::vector<int>> found;
    auto outcome = search.run([&](const std::vector<int>& vals) {
        found = vals;
        return false;
    });
    EmptinessVerdict v;
    v.radius = r;
    v.nodes = search.nodes();
    if (found.has_value()) {
        v.kind = VerdictKind::Witness;
        v.witness = make_ball_configuration(x.group, x.alphabet, cells, *found, r);
    } else if (outcome == SearchOutcome::BudgetExceeded) {
        v.kind = VerdictKind::Inconclusive;
    } else {
        v.kind = VerdictKind::EmptyAtRadius;
    }
    return v;
}

static void require_free_abelian(const Sft& x, const Lattice& l) {
    if (x.group->family != GroupFamily::FreeAbelian)
        fail(ErrorCode::Unsupported, "periodic search requires a free abelian group");
    if (l.dim() != x.group->rank) fail(ErrorCode::Lattice, "lattice dimension != group rank");
}

PeriodicSearchResult find_periodic(const Sft& x, const Lattice& l) {
    require_free_abelian(x, l);
    Grounding g = ground_torus(x, l);
    Search search(g, UINT64_MAX);
    PeriodicSearchResult result;
    search.run([&](const std::vector<int>& vals) {
        result.witness = make_torus_configuration(x.group, x.alphabet, l, vals);
        return false;
    });
    result.nodes = search.nodes();
    return result;
}

std::uint64_t count_torus(const Sft& x, const Lattice& l) {
    require_free_abelian(x, l);
    Grounding g = ground_torus(x, l);
    Search search(g, UINT64_MAX);
    std::uint64_t count = 0;
    search.run([&](const std::vector<int>&) {
        ++count;
        return true;
    });
    return count;
}

std::vector<Configuration> enumerate_torus_admissible(const Sft& x, const Lattice& l,
                                                      std::uint64_t max_count) {
    require_free_abelian(x, l);
    Grounding g = ground_torus(x, l);
    Search search(g, UINT64_MAX);
    std::vector<Configuration> out;
    search.run([&](const std::vector<int>& vals) {
        out.push_back(make_torus_configuration(x.group, x.alphabet, l, vals));
        return out.size() < max_count;
    });
    return out;
}

std::vector<Configuration> enumerate_ball_admissible(const Sft& x, int r, std::uint64_t max_count) {
    auto cells = ball(x.group, r);
    Grounding g = ground_ball(x, cells);
    Search search(g, UINT64_MAX);
    std::vector<Configuration> out;
    search.run([&](const std::vector<int>& vals) {
        out.push_back(make_ball_configuration(x.group, x.alphabet, cells, vals, r));
        return out.size() < max_count;
    });
    return out;
}

Lattice stabilizer(const Configuration& c) {
    if (!c.is_torus()) fail(ErrorCode::Unsupported, "stabilizer requires a torus configuration");
    const Lattice& l = c.torus_lattice();
    auto residues = l.residues();
    IntMat rows = l.basis();
    for (const auto& t : residues) {
        bool fixes = true;
        for (const auto& r : residues) {
            IntVec shifted = l.reduce(vec_sub(r, t));
            if (c.values[l.residue_index(shifted)] != c.values[l.residue_index(r)]) {
                fixes = false;
                break;
            }
        }
        if (fixes) rows.push_back(t);
    }
    return Lattice(rows);
}

std::vector<PeriodReportEntry> search_periods(const Sft& x, std::int64_t max_index) {
    if (x.group->family != GroupFamily::FreeAbelian)
        fail(ErrorCode::Unsupported, "period search requires a free abelian group");
    std::vector<PeriodReportEntry> out;
    for (const auto& l : enumerate_lattices(x.group->rank, max_index)) {
        auto r = find_periodic(x, l);
        out.push_back({l, std::move(r.witness), r.nodes});
    }
    return out;
}

std::string export_cnf(const Sft& x, int r) {
    if (r < 0) fail(ErrorCode::Usage, "radius must be >= 0");
    auto cells = ball(x.group, r);
    Grounding g = ground_ball(x, cells);
    int k = x.alphabet.size();
    std::size_t n = cells.size();
    std::size_t clause_count = n + n * static_cast<std::size_t>(k) * (k - 1) / 2 + g.placements.size();
    std::ostringstream os;
    os << "c ball radius " << r << ", " << n << " cells, " << k << " symbols\n";
    os << "c var(cell, symbol) = cell*" << k << " + symbol + 1\n";
    for (std::size_t i = 0; i < n; ++i) {
        os << "c cell " << i;
        for (auto v : cells[i].coords) os << ' ' << v;
        os << '\n';
    }
    os << "p cnf " << n * static_cast<std::size_t>(k) << ' ' << clause_count << '\n';
    auto var = [k](std::size_t cell, int sym) { return static_cast<long long>(cell) * k + sym + 1; };
    for (std::size_t i = 0; i < n; ++i) {
        for (int s = 0; s < k; ++s) os << var(i, s) << ' ';
        os << "0\n";
        for (int s = 0; s < k; ++s)
            for (int t = s + 1; t < k; ++t) os << -var(i, s) << ' ' << -var(i, t) << " 0\n";
    }
    for (const auto& pl : g.placements) {
        for (const auto& [cell, sym] : pl.cells) os << -var(cell, sym) << ' ';
        os << "0\n";
    }
    return os.str();
}

} // namespace polysft
