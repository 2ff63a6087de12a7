#include "chordless/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace chordless {

VertexSet VertexSet::of(int n, const std::vector<int>& vertices) {
    VertexSet s(n);
    for (int v : vertices) s.add(v);
    return s;
}

int VertexSet::count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const {
    for (auto w : words_) {
        if (w) return false;
    }
    return true;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v = 1; v <= n_; ++v) {
        if (contains(v)) out.push_back(v);
    }
    return out;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_input) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (auto [i, j] : edge_input) {
        check_vertex(i);
        check_vertex(j);
        if (i == j) {
            ++dropped_;
            continue;
        }
        if (i > j) std::swap(i, j);
        if (!seen.insert({i, j}).second) {
            ++dropped_;
            continue;
        }
    }
    edges_.assign(seen.begin(), seen.end());
    adj_.assign(n_ + 1, {});
    inc_.assign(n_ + 1, {});
    for (int k = 0; k < static_cast<int>(edges_.size()); ++k) {
        auto [i, j] = edges_[k];
        adj_[i].push_back(j);
        adj_[j].push_back(i);
        inc_[i].push_back(k);
        inc_[j].push_back(k);
    }
    for (int v = 1; v <= n_; ++v) std::sort(adj_[v].begin(), adj_[v].end());
}

bool Graph::has_edge(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_ || i == j) return false;
    const auto& a = adj_[i];
    return std::binary_search(a.begin(), a.end(), j);
}

int Graph::edge_id(int i, int j) const {
    if (!has_edge(i, j)) return -1;
    if (i > j) std::swap(i, j);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(i, j));
    return static_cast<int>(it - edges_.begin());
}

std::vector<Arc> symmetric_arcs(const Graph& g) {
    std::vector<Arc> arcs;
    arcs.reserve(2 * g.edge_count());
    for (int k = 0; k < g.edge_count(); ++k) {
        auto [i, j] = g.edge(k);
        arcs.push_back({i, j, 2 * k});
        arcs.push_back({j, i, 2 * k + 1});
    }
    return arcs;
}

Arc arc_by_id(const Graph& g, int arc_id) {
    if (arc_id < 0 || arc_id >= 2 * g.edge_count())
        throw std::out_of_range("arc id " + std::to_string(arc_id));
    auto [i, j] = g.edge(arc_id / 2);
    if (arc_id % 2 == 0) return {i, j, arc_id};
    return {j, i, arc_id};
}

namespace {

int arc_out_of(const Graph& g, int v, int edge_id) {
    auto [i, j] = g.edge(edge_id);
    return v == i ? 2 * edge_id : 2 * edge_id + 1;
}

}  // namespace

std::vector<int> delta_vertex(const Graph& g, int v, Direction dir) {
    g.check_vertex(v);
    std::vector<int> out;
    for (int e : g.incident_edges(v)) {
        int a = arc_out_of(g, v, e);
        switch (dir) {
            case Direction::Out: out.push_back(a); break;
            case Direction::In: out.push_back(reverse_arc(a)); break;
            case Direction::Both:
                out.push_back(a);
                out.push_back(reverse_arc(a));
                break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> delta_arc(const Graph& g, int arc_id, Direction dir) {
    Arc e = arc_by_id(g, arc_id);
    std::vector<int> out;
    auto collect = [&](Direction d) {
        for (int v : {e.tail, e.head}) {
            for (int a : delta_vertex(g, v, d)) {
                if (a / 2 == arc_id / 2) continue;  // skip e and its reverse
                out.push_back(a);
            }
        }
    };
    if (dir == Direction::Both) {
        collect(Direction::Out);
        collect(Direction::In);
    } else {
        collect(dir);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> delta_cut(const Graph& g, const VertexSet& c, Direction dir) {
    if (c.universe_size() != g.vertex_count())
        throw std::invalid_argument("delta_cut: subset universe mismatch");
    if (c.empty() || c.full()) throw std::invalid_argument("delta_cut: subset must be proper and nonempty");
    std::vector<int> out;
    for (int k = 0; k < g.edge_count(); ++k) {
        auto [i, j] = g.edge(k);
        bool ci = c.contains(i), cj = c.contains(j);
        if (ci == cj) continue;
        int outgoing = ci ? 2 * k : 2 * k + 1;  // tail inside the cut
        switch (dir) {
            case Direction::Out: out.push_back(outgoing); break;
            case Direction::In: out.push_back(reverse_arc(outgoing)); break;
            case Direction::Both:
                out.push_back(2 * k);
                out.push_back(2 * k + 1);
                break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w) {
    if (w.universe_size() != g.vertex_count())
        throw std::invalid_argument("induced_subgraph: subset universe mismatch");
    std::vector<int> verts = w.members();
    std::vector<int> new_id(g.vertex_count() + 1, 0);
    for (int idx = 0; idx < static_cast<int>(verts.size()); ++idx) new_id[verts[idx]] = idx + 1;
    std::vector<std::pair<int, int>> edges;
    for (auto [i, j] : g.edges()) {
        if (new_id[i] && new_id[j]) edges.push_back({new_id[i], new_id[j]});
    }
    InducedSubgraph out;
    out.graph = Graph(static_cast<int>(verts.size()), edges);
    out.original_vertex.assign(verts.size() + 1, 0);
    for (int idx = 0; idx < static_cast<int>(verts.size()); ++idx)
        out.original_vertex[idx + 1] = verts[idx];
    return out;
}

std::vector<std::vector<int>> cycle_components(const Graph& g, const std::vector<char>& selected) {
    if (static_cast<int>(selected.size()) != g.edge_count())
        throw std::invalid_argument("cycle_components: selection size mismatch");
    int n = g.vertex_count();
    std::vector<std::vector<int>> sel_neighbors(n + 1);
    for (int k = 0; k < g.edge_count(); ++k) {
        if (!selected[k]) continue;
        auto [i, j] = g.edge(k);
        sel_neighbors[i].push_back(j);
        sel_neighbors[j].push_back(i);
    }
    for (int v = 1; v <= n; ++v) {
        auto& nb = sel_neighbors[v];
        std::sort(nb.begin(), nb.end());
        if (!nb.empty() && nb.size() != 2)
            throw MalformedSolutionError("vertex " + std::to_string(v) + " has selected degree " +
                                         std::to_string(nb.size()));
    }
    std::vector<char> visited(n + 1, 0);
    std::vector<std::vector<int>> components;
    for (int s = 1; s <= n; ++s) {
        if (visited[s] || sel_neighbors[s].empty()) continue;
        std::vector<int> cycle{s};
        visited[s] = 1;
        int prev = s;
        int cur = sel_neighbors[s][0];  // toward the smaller neighbor
        while (cur != s) {
            if (visited[cur]) throw MalformedSolutionError("selected edges do not form disjoint cycles");
            visited[cur] = 1;
            cycle.push_back(cur);
            const auto& nb = sel_neighbors[cur];
            int next = (nb[0] == prev) ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
        components.push_back(std::move(cycle));
    }
    return components;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    int n = g.vertex_count();
    const int inf = n;  // larger than any realizable path length
    std::vector<std::vector<int>> d(n + 1, std::vector<int>(n + 1, inf));
    for (int v = 1; v <= n; ++v) {
        d[v][v] = 0;
        for (int u : g.neighbors(v)) d[v][u] = 1;
    }
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= n; ++i) {
            if (d[i][k] >= inf) continue;
            const int dik = d[i][k];
            for (int j = 1; j <= n; ++j) {
                int via = dik + d[k][j];
                if (via < d[i][j]) d[i][j] = via;
            }
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (d[i][j] > inf) d[i][j] = inf;
    return d;
}

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    // Returns false if already joined.
    bool join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

bool is_acyclic(const Graph& g) {
    DisjointSets ds(g.vertex_count());
    for (auto [i, j] : g.edges())
        if (!ds.join(i, j)) return false;
    return true;
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    DisjointSets ds(n);
    int parts = n;
    for (auto [i, j] : g.edges())
        if (ds.join(i, j)) --parts;
    return parts == 1;
}

bool is_tree(const Graph& g) { return is_acyclic(g) && is_connected(g); }

namespace {

void bron_kerbosch(const Graph& g, VertexSet& r, std::vector<int> p, std::vector<int> x,
                   int min_size, std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        if (r.count() >= min_size) out.push_back(r);
        return;
    }
    // Pivot: vertex of p ∪ x with the most neighbors inside p.
    int pivot = -1, best = -1;
    auto consider = [&](int u) {
        int cnt = 0;
        for (int v : p)
            if (g.has_edge(u, v)) ++cnt;
        if (cnt > best) {
            best = cnt;
            pivot = u;
        }
    };
    for (int u : p) consider(u);
    for (int u : x) consider(u);

    std::vector<int> candidates;
    for (int v : p)
        if (!g.has_edge(pivot, v)) candidates.push_back(v);

    for (int v : candidates) {
        std::vector<int> p2, x2;
        for (int u : p)
            if (g.has_edge(v, u)) p2.push_back(u);
        for (int u : x)
            if (g.has_edge(v, u)) x2.push_back(u);
        r.add(v);
        bron_kerbosch(g, r, std::move(p2), std::move(x2), min_size, out);
        r.remove(v);
        p.erase(std::find(p.begin(), p.end(), v));
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g, int min_size) {
    if (min_size < 3) throw std::invalid_argument("maximal_cliques: min_size must be >= 3");
    std::vector<int> p(g.vertex_count());
    std::iota(p.begin(), p.end(), 1);
    VertexSet r(g.vertex_count());
    std::vector<VertexSet> out;
    bron_kerbosch(g, r, std::move(p), {}, min_size, out);
    std::sort(out.begin(), out.end());
    return out;
}

double density(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("density: needs at least two vertices");
    return static_cast<double>(g.edge_count()) / (static_cast<double>(n) * (n - 1) / 2.0);
}

}  // namespace chordless
