#pragma once

#include <string>
#include <vector>

#include "chordless/graph.hpp"
#include "chordless/milp.hpp"

namespace chordless {

enum class ModelKind { LIC, LIC2, IlpCut, Cec, Ccp };

std::string to_string(ModelKind k);
ModelKind model_kind_from_string(const std::string& s);

/// A built model plus the map from graph objects to variable ids.
///
/// LIC / LIC2 / IlpCut select directed arcs: x has one id per arc of the
/// symmetric arc list (2M entries, arc 2k and 2k+1 are the orientations of
/// edge k). Cec / Ccp select undirected edges: x has one id per edge (M
/// entries). y/u/w are per-vertex (entry v-1 for vertex v); y is absent for
/// IlpCut and u/w exist only for the LIC family.
struct FormulationHandles {
    ModelKind kind = ModelKind::Cec;
    int n = 0;
    int m = 0;
    std::vector<int> x;
    std::vector<int> y;
    std::vector<int> u;
    std::vector<int> w;
    milp::Model model;
};

/// Order-based model: per-arc selection, degree equalities, one marked
/// wrap-around vertex, position variables with modified MTZ rows, and an
/// index-based symmetry-breaking row that forces the marked vertex to carry
/// the smallest index on the cycle.
FormulationHandles build_lic(const Graph& g);

/// LIC with the per-arc outgoing-limit family replaced by
/// x_e + x_rev >= y_i + y_j - 1 per edge.
FormulationHandles build_lic2(const Graph& g);

/// Symmetric arc model maximizing half the selected arcs; the subtour family
/// is not materialized here, it is supplied lazily during the solve.
FormulationHandles build_ilp_cut(const Graph& g);

/// Vertex/edge model with degree-two rows; cycle-elimination rows supplied
/// lazily.
FormulationHandles build_cec(const Graph& g);

/// Hole model: requires at least four selected vertices and equal selected
/// vertex/edge counts; connectivity cuts supplied lazily. Needs n >= 4.
FormulationHandles build_ccp(const Graph& g);

/// Static clique strengthening for Ccp: at most two vertices and, jointly,
/// at most one edge of each clique can lie on a hole. Returns rows added.
/// Every input set must be a clique of size >= 3.
int add_clique_cuts(FormulationHandles& h, const Graph& g, const std::vector<VertexSet>& cliques);

/// The row "objective >= lb" for this formulation.
milp::LinearConstraint objective_bound_row(const FormulationHandles& h, int lb);

/// Append objective >= lb to the model (explicit-row warm start).
void warm_start_bound(FormulationHandles& h, int lb);

/// Append objective >= min_length (the hole-only / long-cycle search option).
void add_min_length_row(FormulationHandles& h, int min_length);

/// Edge-indexed selection vector recovered from a solution.
std::vector<char> selected_edges(const FormulationHandles& h, const std::vector<double>& x);

enum class CycleOutcome { FoundCycle, NoCycle, NoHole, Unsolved };

std::string to_string(CycleOutcome o);

/// Final outcome of one solve.
struct CycleResult {
    int length = 0;
    std::vector<std::vector<int>> cycles;  // every optimal cycle found
    milp::SolveStatus status = milp::SolveStatus::Infeasible;
    CycleOutcome outcome = CycleOutcome::Unsolved;
    double best_bound = 0.0;
    long nodes = 0;
    long cuts = 0;
    double seconds = 0.0;
};

/// Map an integral solution back to its cycle and check it: one component,
/// no chords, length equal to the objective. Throws MalformedSolutionError
/// when the solution does not encode a single induced cycle.
CycleResult extract_cycle(const Graph& g, const FormulationHandles& h,
                          const std::vector<double>& solution);

}  // namespace chordless
