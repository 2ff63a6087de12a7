#pragma once

#include <vector>

#include "chordless/graph.hpp"

namespace chordless::testing {

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({n, 1});
    return Graph(n, edges);
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
    return Graph(n, edges);
}

/// Star with the hub as vertex 1.
inline Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 2; i <= leaves + 1; ++i) edges.push_back({1, i});
    return Graph(leaves + 1, edges);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= a; ++i)
        for (int j = a + 1; j <= a + b; ++j) edges.push_back({i, j});
    return Graph(a + b, edges);
}

/// Outer cycle 1..5, spokes to 6..10, inner pentagram.
inline Graph petersen_graph() {
    return Graph(10, {{1, 2},
                      {2, 3},
                      {3, 4},
                      {4, 5},
                      {1, 5},
                      {1, 6},
                      {2, 7},
                      {3, 8},
                      {4, 9},
                      {5, 10},
                      {6, 8},
                      {8, 10},
                      {7, 10},
                      {7, 9},
                      {6, 9}});
}

/// Two vertex-disjoint 5-cycles: 1..5 and 6..10.
inline Graph two_c5() {
    return Graph(10, {{1, 2},
                      {2, 3},
                      {3, 4},
                      {4, 5},
                      {1, 5},
                      {6, 7},
                      {7, 8},
                      {8, 9},
                      {9, 10},
                      {6, 10}});
}

/// 6-cycle plus the long chord {1,4}.
inline Graph c6_with_chord() {
    return Graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {1, 4}});
}

}  // namespace chordless::testing
