#include "chordless/isometric.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace chordless {

PairGraph build_pair_graph(const Graph& g, int k, const std::vector<std::vector<int>>& dist) {
    const int n = g.vertex_count();
    if (k < 3 || k > std::max(n, 3)) throw std::invalid_argument("pair graph: k out of range");
    PairGraph pg;
    pg.k = k;
    pg.half = k / 2;
    pg.n = n;
    pg.index.assign(static_cast<std::size_t>(n) * n, -1);
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v) {
            if (u == v || dist[u][v] != pg.half) continue;
            pg.index[static_cast<std::size_t>(u - 1) * n + (v - 1)] =
                static_cast<int>(pg.vertices.size());
            pg.vertices.push_back({u, v});
        }
    pg.adjacency.resize(pg.vertices.size());
    for (std::size_t p = 0; p < pg.vertices.size(); ++p) {
        auto [u, v] = pg.vertices[p];
        for (int w : g.neighbors(u))
            for (int x : g.neighbors(v)) {
                int q = pg.index_of(w, x);
                if (q >= 0) pg.adjacency[p].push_back(q);
            }
    }
    return pg;
}

namespace {

/// BFS truncated at max_depth; unvisited entries stay -1. When cross_dist is
/// given (odd cycle lengths), a step (a,b) -> (c,d) is taken only if
/// d(a,d) = half: walking an odd isometric cycle certifies the shifted pairs
/// too, and without this filter the test accepts closed walks that are not
/// isometric cycles.
void bfs(const PairGraph& pg, int source, int max_depth, std::vector<int>& dist,
         const std::vector<std::vector<int>>* cross_dist = nullptr) {
    dist.assign(pg.vertices.size(), -1);
    dist[source] = 0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
        int p = q.front();
        q.pop();
        if (dist[p] >= max_depth) continue;
        for (int nb : pg.adjacency[p]) {
            if (dist[nb] >= 0) continue;
            if (cross_dist &&
                (*cross_dist)[pg.vertices[p].first][pg.vertices[nb].second] != pg.half)
                continue;
            dist[nb] = dist[p] + 1;
            q.push(nb);
        }
    }
}

}  // namespace

int pair_graph_distance(const PairGraph& pg, std::pair<int, int> a, std::pair<int, int> b) {
    int pa = pg.index_of(a.first, a.second);
    int pb = pg.index_of(b.first, b.second);
    if (pa < 0 || pb < 0) throw std::out_of_range("pair not in the pair graph");
    std::vector<int> dist;
    bfs(pg, pa, static_cast<int>(pg.vertices.size()), dist);
    return dist[pb] < 0 ? static_cast<int>(pg.vertices.size()) : dist[pb];
}

namespace {

/// Does the graph contain an isometric cycle of exactly length k?
///
/// An isometric cycle v_0..v_{k-1} puts every pair (v_i, v_{i+half}) into
/// the pair graph and walking both coordinates forward gives a pair-graph
/// path of length half, so for even k the pair (u,v) reaches its swap (v,u)
/// in exactly half steps, and for odd k it reaches (v,x) for some neighbor
/// x of u (with the cross-distance filter above). Both distances are never
/// below half (one coordinate has to travel from u to v), so a truncated
/// BFS decides the test. Conversely, such a path certifies distance half
/// for every antipodal pair of the induced closed walk, which pins all
/// pairwise distances by the triangle inequality and makes the walk a
/// simple isometric cycle.
bool has_isometric_cycle(const Graph& g, const PairGraph& pg, int k,
                         const std::vector<std::vector<int>>& gdist,
                         std::optional<std::pair<std::pair<int, int>, std::pair<int, int>>>* witness) {
    const int half = pg.half;
    const bool even = (k % 2 == 0);
    std::vector<int> dist;
    for (std::size_t p = 0; p < pg.vertices.size(); ++p) {
        auto [u, v] = pg.vertices[p];
        if (u > v) continue;  // every existing cycle also certifies from an ordered pair
        bfs(pg, static_cast<int>(p), half, dist, even ? nullptr : &gdist);
        if (even) {
            int q = pg.index_of(v, u);
            if (q >= 0 && dist[q] == half) {
                if (witness) *witness = {{u, v}, {v, u}};
                return true;
            }
        } else {
            for (int x : g.neighbors(u)) {
                int q = pg.index_of(v, x);
                if (q >= 0 && dist[q] == half) {
                    if (witness) *witness = {{u, v}, {v, x}};
                    return true;
                }
            }
        }
    }
    return false;
}

}  // namespace

IsometricCycleResult longest_isometric_cycle(const Graph& g, bool fast) {
    IsometricCycleResult out;
    const int n = g.vertex_count();
    if (n == 0 || is_acyclic(g)) return out;

    auto dist = all_pairs_distances(g);
    int max_finite = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (dist[i][j] < n) max_finite = std::max(max_finite, dist[i][j]);

    auto try_k = [&](int k) {
        if (k / 2 > max_finite) return false;
        PairGraph pg = build_pair_graph(g, k, dist);
        if (pg.vertices.empty()) return false;
        std::optional<std::pair<std::pair<int, int>, std::pair<int, int>>> wit;
        if (!has_isometric_cycle(g, pg, k, dist, &wit)) return false;
        out.length = k;
        out.witness = wit;
        return true;
    };

    if (fast) {
        for (int k = n; k >= 3; --k)
            if (try_k(k)) break;
    } else {
        for (int k = 3; k <= n; ++k) try_k(k);
    }
    return out;
}

}  // namespace chordless
