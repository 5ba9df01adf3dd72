#pragma once

// Breadth-first reachability over labeled states under a chosen generator
// set. Every generator is an involution, so a stored predecessor move also
// maps the state back to its predecessor and orbits are symmetric.

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "binmat/moves.hpp"

namespace binmat {

struct GeneratorSet {
    bool omega = false;
    bool sigma = false;
    bool lambda = false;
    bool hypcomp = false;
    bool swap_on = false;
    bool swap_off = false;
    // Restrict sigma to the r standard functionals (the row-cocircuits of
    // the standard basis).
    bool row_sigma_only = false;

    bool any() const { return omega || sigma || lambda || hypcomp || swap_on || swap_off; }

    static GeneratorSet sigma_omega() { return {.omega = true, .sigma = true}; }
    static GeneratorSet sigma_omega_lambda() {
        return {.omega = true, .sigma = true, .lambda = true};
    }
    static GeneratorSet lambda_swap() {
        return {.lambda = true, .swap_on = true, .swap_off = true};
    }
};

struct OrbitTable {
    Space space{1};
    GroundSet root;
    bool complete = true;  // false when a visit budget stopped the search

    // Discovery order; root is index 0. predecessor[i] < i except for the
    // root, where it is -1.
    std::vector<GroundSet> states;
    std::vector<std::int64_t> predecessor;
    std::vector<Move> via;
    std::unordered_map<GroundSet, std::size_t, GroundSetHash> index;

    bool contains(const GroundSet& g) const { return index.count(g) != 0; }
    std::size_t size() const { return states.size(); }

    // Moves mapping the root to the given visited state.
    MoveSequence sequence_to(const GroundSet& g) const;
};

struct orbit_budget_exhausted : std::runtime_error {
    OrbitTable partial;
    std::vector<GroundSet> frontier;
    orbit_budget_exhausted(OrbitTable t, std::vector<GroundSet> f)
        : std::runtime_error("orbit visit budget exhausted at " +
                             std::to_string(t.states.size()) + " states"),
          partial(std::move(t)),
          frontier(std::move(f)) {}
};

// BFS closure of the start state. A visit budget is required for r >= 5;
// exceeding it raises orbit_budget_exhausted carrying the partial table and
// the unexpanded frontier.
OrbitTable orbit(Space s, const Matroid& start, const GeneratorSet& gens,
                 std::optional<std::uint64_t> budget = std::nullopt);

// Shortest move sequence from one state to another, nullopt when the target
// is provably outside the orbit. indeterminate_error when the budget ran
// out first.
std::optional<MoveSequence> reachable(Space s, const Matroid& from, const Matroid& to,
                                      const GeneratorSet& gens,
                                      std::optional<std::uint64_t> budget = std::nullopt);

struct CoverageRow {
    std::size_t size = 0;
    std::uint64_t visited_states = 0;
    std::uint64_t total_states = 0;
    std::uint64_t visited_classes = 0;  // r <= 4 only
    std::uint64_t total_classes = 0;
};

struct CoverageReport {
    int r = 1;
    bool with_classes = false;
    std::vector<CoverageRow> rows;  // one per cardinality 0..n
    std::uint64_t visited_states = 0;
    std::uint64_t total_states = 0;
    std::uint64_t visited_classes = 0;
    std::uint64_t total_classes = 0;

    bool all_classes_visited() const {
        return with_classes && visited_classes == total_classes;
    }
    std::string to_string() const;
};

// Per-cardinality counts of visited states, and of visited GL(r,2) classes
// when r <= 4.
CoverageReport coverage_report(const OrbitTable& table);

}  // namespace binmat
