#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chordless/graph.hpp"

namespace chordless {

/// Auxiliary graph for cycle length k: vertices are ordered vertex pairs of
/// the base graph at distance floor(k/2), adjacent when both coordinates
/// step along base edges simultaneously.
struct PairGraph {
    int k = 0;
    int half = 0;  // floor(k/2)
    std::vector<std::pair<int, int>> vertices;
    std::vector<std::vector<int>> adjacency;  // indices into vertices
    std::vector<int> index;                   // (u-1)*n + (v-1) -> vertex index or -1
    int n = 0;

    int index_of(int u, int v) const {
        if (u < 1 || u > n || v < 1 || v > n) return -1;
        return index[static_cast<std::size_t>(u - 1) * n + (v - 1)];
    }
};

/// Build the pair graph for cycle length k (3 <= k <= n) from a distance
/// matrix produced by all_pairs_distances.
PairGraph build_pair_graph(const Graph& g, int k, const std::vector<std::vector<int>>& dist);

/// BFS distance between two pairs; |vertices| acts as the unreachable
/// sentinel. Throws on pairs outside the graph.
int pair_graph_distance(const PairGraph& pg, std::pair<int, int> a, std::pair<int, int> b);

struct IsometricCycleResult {
    int length = 0;
    /// The pair-graph witness that certified the length, when one exists.
    std::optional<std::pair<std::pair<int, int>, std::pair<int, int>>> witness;
};

/// Length of the longest isometric cycle (0 for forests). Scans k upward by
/// default, recording the last certified length; fast mode scans downward
/// and stops at the first success.
IsometricCycleResult longest_isometric_cycle(const Graph& g, bool fast = false);

}  // namespace chordless
