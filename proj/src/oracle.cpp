#include "chordless/oracle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace chordless {

std::vector<int> canonical_cycle(const std::vector<int>& cycle) {
    if (cycle.size() < 3) throw std::invalid_argument("cycle too short");
    const int L = static_cast<int>(cycle.size());
    int pos = static_cast<int>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
    int before = cycle[(pos + L - 1) % L];
    int after = cycle[(pos + 1) % L];
    std::vector<int> out;
    out.reserve(L);
    int step = (after < before) ? 1 : -1;
    for (int t = 0; t < L; ++t) out.push_back(cycle[((pos + step * t) % L + L) % L]);
    return out;
}

namespace {

struct CycleEnumerator {
    const Graph& g;
    std::vector<std::vector<int>>& out;
    std::vector<int> path;
    std::vector<char> on_path;

    void extend() {
        const int s = path.front();
        const int last = path.back();
        for (int x : g.neighbors(last)) {
            if (x <= s || on_path[x]) continue;
            // A chord to any interior vertex rules x out entirely.
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i)
                chord = g.has_edge(x, path[i]);
            if (chord) continue;
            if (path.size() >= 2 && g.has_edge(x, s)) {
                if (path[1] < x) {  // count each cycle in one direction only
                    path.push_back(x);
                    out.push_back(path);
                    path.pop_back();
                }
                continue;  // closing edge present, extending would leave a chord
            }
            path.push_back(x);
            on_path[x] = 1;
            extend();
            on_path[x] = 0;
            path.pop_back();
        }
    }
};

}  // namespace

std::vector<std::vector<int>> enumerate_chordless_cycles(const Graph& g, int limit_n) {
    if (g.vertex_count() > limit_n)
        throw std::invalid_argument("graph too large for exhaustive search (n=" +
                                    std::to_string(g.vertex_count()) + ", limit " +
                                    std::to_string(limit_n) + ")");
    std::vector<std::vector<int>> out;
    CycleEnumerator e{g, out, {}, std::vector<char>(g.vertex_count() + 1, 0)};
    for (int s = 1; s <= g.vertex_count(); ++s) {
        e.path = {s};
        e.on_path[s] = 1;
        e.extend();
        e.on_path[s] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

InducedCycleOracle brute_force_longest_induced_cycle(const Graph& g, int limit_n) {
    InducedCycleOracle res;
    for (auto& c : enumerate_chordless_cycles(g, limit_n)) {
        int len = static_cast<int>(c.size());
        if (len > res.length) {
            res.length = len;
            res.cycles.clear();
        }
        if (len == res.length) res.cycles.push_back(std::move(c));
    }
    std::sort(res.cycles.begin(), res.cycles.end());
    return res;
}

int brute_force_longest_isometric_cycle(const Graph& g, int limit_n) {
    auto dist = all_pairs_distances(g);
    int best = 0;
    for (const auto& c : enumerate_chordless_cycles(g, limit_n)) {
        const int L = static_cast<int>(c.size());
        if (L <= best) continue;
        bool isometric = true;
        for (int i = 0; i < L && isometric; ++i)
            for (int j = i + 1; j < L && isometric; ++j) {
                int along = std::min(j - i, L - (j - i));
                isometric = dist[c[i]][c[j]] == along;
            }
        if (isometric) best = L;
    }
    return best;
}

HeuristicCycle multi_start_heuristic(const Graph& g) {
    HeuristicCycle best;
    std::vector<char> on_path(g.vertex_count() + 1, 0);
    for (int start = 0; start < g.edge_count(); ++start) {
        auto [a, b] = g.edge(start);
        std::deque<int> path{a, b};
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[a] = on_path[b] = 1;

        while (true) {
            if (path.size() >= 3 && g.has_edge(path.front(), path.back())) {
                std::vector<int> cycle = canonical_cycle({path.begin(), path.end()});
                int len = static_cast<int>(cycle.size());
                if (len > best.length || (len == best.length && cycle < best.cycle)) {
                    best.length = len;
                    best.cycle = cycle;
                }
                break;
            }
            int pick = 0;
            bool at_front = false;
            for (int v = 1; v <= g.vertex_count() && !pick; ++v) {
                if (on_path[v]) continue;
                bool front_ok = g.has_edge(v, path.front());
                bool back_ok = g.has_edge(v, path.back());
                if (!front_ok && !back_ok) continue;
                bool interior = false;
                for (auto it = path.begin() + 1; it + 1 != path.end() && !interior; ++it)
                    interior = g.has_edge(v, *it);
                if (interior) continue;
                pick = v;
                at_front = front_ok;
            }
            if (!pick) break;  // stuck, no cycle from this start edge
            if (at_front)
                path.push_front(pick);
            else
                path.push_back(pick);
            on_path[pick] = 1;
        }
    }
    return best;
}

}  // namespace chordless
