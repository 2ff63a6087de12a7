#pragma once

#include <iosfwd>
#include <set>
#include <vector>

#include "chordless/formulations.hpp"
#include "chordless/graph.hpp"
#include "chordless/milp.hpp"

namespace chordless {

/// Shared state of one lazy-cut solve. The recorded incumbent length only
/// ever grows; best_cycles holds every distinct cycle achieving it, in
/// canonical form (starting at the smallest vertex, toward its smaller
/// neighbor), so alternate optima can be reported.
struct CutPoolState {
    int longest_induced_cycle = 0;
    std::vector<std::vector<int>> best_cycles;
    long cuts_added = 0;
    /// Components shorter than this are always cut and never recorded
    /// (4 for the hole model, otherwise 3, raised by a min-length search).
    int min_record_length = 3;
    std::set<std::vector<int>> emitted_keys;  // dedup per solve

    void record(const std::vector<int>& cycle);
};

enum class Strategy { Direct, Soft, Tough };

std::string to_string(Strategy s);
Strategy strategy_from_string(const std::string& s);

struct SeparationOptions {
    /// Also emit the strengthened crossing-edge form of the hole-model cut.
    bool ccp_strengthened = false;
    /// When set, one line per emitted cut is written here.
    std::ostream* cut_log = nullptr;
};

/// One row per cycle of the arc model: the selected arcs at the cycle's
/// smallest vertex may not exceed the selected arcs crossing the cycle's
/// boundary.
milp::LinearConstraint subtour_cut_ilpcut(const Graph& g, const FormulationHandles& h,
                                          const std::vector<int>& cycle);

/// Vertex form for the cec model: the cycle's vertices may not all be
/// selected again.
milp::LinearConstraint subtour_cut_cec(const FormulationHandles& h, const std::vector<int>& cycle);

/// Hole-model connectivity cut: at least two edges must cross the boundary
/// of c when vertex i inside and vertex j outside are both selected.
milp::LinearConstraint subtour_cut_ccp_basic(const Graph& g, const FormulationHandles& h,
                                             const VertexSet& c, int i, int j);

/// Strengthened form anchored on a crossing edge: selecting the edge forces
/// at least two selected crossing edges.
milp::LinearConstraint subtour_cut_ccp_strengthened(const Graph& g, const FormulationHandles& h,
                                                    const VertexSet& c, int edge);

/// Algorithm: accept a strictly improving single cycle uncut, cut everything
/// else; equal-length cycles are cut but recorded as alternate optima.
milp::LazyHandler make_soft_handler(const Graph& g, const FormulationHandles& h, CutPoolState& state,
                                    const SeparationOptions& opts = {});

/// Algorithm: cut every component, record the best length, and keep raising
/// the engine cutoff to incumbent+1; the solve ends by cutoff exhaustion and
/// the recorded length is the answer.
milp::LazyHandler make_tough_handler(const Graph& g, const FormulationHandles& h, CutPoolState& state,
                                     const SeparationOptions& opts = {});

}  // namespace chordless
