#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chordless {

/// Fixed-capacity bitset over vertices 1..n. Used for cycle vertex sets and
/// cliques; membership tests are O(1).
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

    static VertexSet of(int n, const std::vector<int>& vertices);

    int universe_size() const { return n_; }

    void add(int v) {
        check(v);
        words_[(v - 1) >> 6] |= (std::uint64_t{1} << ((v - 1) & 63));
    }
    void remove(int v) {
        check(v);
        words_[(v - 1) >> 6] &= ~(std::uint64_t{1} << ((v - 1) & 63));
    }
    bool contains(int v) const {
        if (v < 1 || v > n_) return false;
        return (words_[(v - 1) >> 6] >> ((v - 1) & 63)) & 1;
    }

    int count() const;
    bool empty() const;
    bool full() const { return count() == n_; }

    /// Members in increasing order.
    std::vector<int> members() const;

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }
    friend bool operator<(const VertexSet& a, const VertexSet& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.members() < b.members();
    }

private:
    void check(int v) const {
        if (v < 1 || v > n_) throw std::out_of_range("VertexSet: vertex " + std::to_string(v));
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// One orientation of an undirected edge. Edge k of the graph owns the two
/// arcs 2k (as stored, tail < head) and 2k+1 (reversed); reverse_arc is an
/// involution on arc ids.
struct Arc {
    int tail = 0;
    int head = 0;
    int id = -1;

    friend bool operator==(const Arc& a, const Arc& b) {
        return a.tail == b.tail && a.head == b.head && a.id == b.id;
    }
};

inline int reverse_arc(int arc_id) { return arc_id ^ 1; }

enum class Direction { Out, In, Both };

/// Simple undirected graph with 1-based vertices. Self-loops and duplicate
/// edges in the input are dropped (counted in dropped_inputs); adjacency
/// lists are kept sorted so every derived ordering is reproducible.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edge_input);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Endpoints of edge k, tail < head.
    std::pair<int, int> edge(int k) const { return edges_.at(k); }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    /// Edge ids incident to v, increasing.
    const std::vector<int>& incident_edges(int v) const {
        check_vertex(v);
        return inc_[v];
    }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int i, int j) const;
    /// Edge id joining i and j, or -1.
    int edge_id(int i, int j) const;

    /// Number of self-loops / duplicate edges dropped while loading.
    int dropped_inputs() const { return dropped_; }

    void check_vertex(int v) const {
        if (v < 1 || v > n_)
            throw std::out_of_range("Graph: vertex " + std::to_string(v) + " not in 1.." +
                                    std::to_string(n_));
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> inc_;
    int dropped_ = 0;
};

/// Both orientations of every edge; arcs 2k and 2k+1 belong to edge k.
std::vector<Arc> symmetric_arcs(const Graph& g);

/// The arc with the given id.
Arc arc_by_id(const Graph& g, int arc_id);

/// Arc ids leaving / entering / touching vertex v, increasing.
std::vector<int> delta_vertex(const Graph& g, int v, Direction dir);

/// Neighbour arcs of arc e: arcs incident to either endpoint of e in the
/// requested direction, with e and its reverse excluded.
std::vector<int> delta_arc(const Graph& g, int arc_id, Direction dir);

/// Arc ids crossing the cut (c, V\c). Out means tail inside, In means head
/// inside, Both is their union. c must be a proper nonempty subset.
std::vector<int> delta_cut(const Graph& g, const VertexSet& c, Direction dir);

struct InducedSubgraph {
    Graph graph;
    /// original_vertex[w] = vertex of the parent graph mapped to w (1-based).
    std::vector<int> original_vertex;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w);

/// Raised when a purported solution does not decompose into vertex-disjoint
/// cycles; indicates a bug in the model or the engine, never user input.
class MalformedSolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decompose the subgraph picked out by selected (indexed by edge id) into
/// cycles. Requires every touched vertex to have exactly two selected
/// incident edges. Components are ordered by their smallest vertex; each
/// cycle starts at its smallest vertex and proceeds toward the
/// smaller-indexed of its two neighbors.
std::vector<std::vector<int>> cycle_components(const Graph& g, const std::vector<char>& selected);

/// Hop distances between all vertex pairs (Floyd-Warshall). Entry [i][j] for
/// 1-based i, j; unreachable pairs are reported as n, which exceeds every
/// realizable path length. Row/column 0 unused.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

bool is_acyclic(const Graph& g);
bool is_tree(const Graph& g);
bool is_connected(const Graph& g);

/// All maximal cliques with at least min_size vertices (min_size >= 3),
/// each sorted, the list in lexicographic order. Bron-Kerbosch with pivoting.
std::vector<VertexSet> maximal_cliques(const Graph& g, int min_size);

/// Edge count over the maximum possible; requires n >= 2.
double density(const Graph& g);

}  // namespace chordless
