#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "core/sft.hpp"

namespace polysft {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

enum class VerdictKind { Witness, EmptyAtRadius, Inconclusive };

struct EmptinessVerdict {
    VerdictKind kind;
    std::optional<Configuration> witness; // Witness only
    int radius = 0;
    std::uint64_t nodes = 0;
};

// Backtracking search over colorings of ball(group, r), most-constrained cell
// first with forward checking. Deterministic for fixed inputs and budget.
EmptinessVerdict check_ball_emptiness(const Sft& x, int r,
                                      std::uint64_t budget = kDefaultNodeBudget);

struct PeriodicSearchResult {
    std::optional<Configuration> witness;
    std::uint64_t nodes = 0;
};

// Exhaustive search over Torus(l) colorings; a witness certifies a point of
// the subshift with stabilizer containing l.
PeriodicSearchResult find_periodic(const Sft& x, const Lattice& l);

// Number of admissible Torus(l) colorings (exhaustive).
std::uint64_t count_torus(const Sft& x, const Lattice& l);

// Admissible colorings in canonical search order, at most max_count of them.
std::vector<Configuration> enumerate_torus_admissible(const Sft& x, const Lattice& l,
                                                      std::uint64_t max_count);
std::vector<Configuration> enumerate_ball_admissible(const Sft& x, int r,
                                                     std::uint64_t max_count);

// Exact stabilizer lattice {g : translate(g,c) = c} of a torus configuration;
// always contains the defining lattice.
Lattice stabilizer(const Configuration& c);

struct PeriodReportEntry {
    Lattice lattice;
    std::optional<Configuration> witness;
    std::uint64_t nodes = 0;
};

// find_periodic over every HNF lattice of index <= max_index, fixed order.
std::vector<PeriodReportEntry> search_periods(const Sft& x, std::int64_t max_index);

// DIMACS CNF for the ball(r) coloring problem:
// var(cell,symbol) = cell * |A| + symbol + 1; at-least-one and at-most-one per
// cell, one negative clause per forbidden-pattern placement.
std::string export_cnf(const Sft& x, int r);

} // namespace polysft
