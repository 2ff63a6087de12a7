#pragma once

#include <vector>

#include "chordless/graph.hpp"

namespace chordless {

/// Put a cycle into canonical form: starts at its smallest vertex and runs
/// toward the smaller of that vertex's two cycle neighbors.
std::vector<int> canonical_cycle(const std::vector<int>& cycle);

/// Every chordless cycle of the graph, each in canonical form, sorted.
/// Exhaustive (chordless-path extension); guarded by limit_n.
std::vector<std::vector<int>> enumerate_chordless_cycles(const Graph& g, int limit_n = 16);

struct InducedCycleOracle {
    int length = 0;
    std::vector<std::vector<int>> cycles;  // all optimal cycles, canonical, sorted
};

/// Ground truth by exhaustive search.
InducedCycleOracle brute_force_longest_induced_cycle(const Graph& g, int limit_n = 16);

/// Ground truth for the isometric variant: longest chordless cycle whose
/// pairwise cycle distances all equal the graph distances.
int brute_force_longest_isometric_cycle(const Graph& g, int limit_n = 10);

struct HeuristicCycle {
    int length = 0;
    std::vector<int> cycle;
};

/// Constructive lower bound: from every edge, grow a path by vertices
/// adjacent to an endpoint and to no interior vertex, closing as soon as the
/// endpoints are adjacent. Candidates are tried smallest-first.
HeuristicCycle multi_start_heuristic(const Graph& g);

}  // namespace chordless
