#include "chordless/formulations.hpp"

#include <algorithm>
#include <cmath>

namespace chordless {

using milp::LinearConstraint;
using milp::RowSense;

std::string to_string(ModelKind k) {
    switch (k) {
        case ModelKind::LIC: return "lic";
        case ModelKind::LIC2: return "lic2";
        case ModelKind::IlpCut: return "ilpcut";
        case ModelKind::Cec: return "cec";
        case ModelKind::Ccp: return "ccp";
    }
    return "?";
}

ModelKind model_kind_from_string(const std::string& s) {
    if (s == "lic") return ModelKind::LIC;
    if (s == "lic2") return ModelKind::LIC2;
    if (s == "ilpcut") return ModelKind::IlpCut;
    if (s == "cec") return ModelKind::Cec;
    if (s == "ccp") return ModelKind::Ccp;
    throw std::invalid_argument("unknown model '" + s + "'");
}

namespace {

std::string arc_name(const Graph& g, int arc_id) {
    Arc a = arc_by_id(g, arc_id);
    return "x_" + std::to_string(a.tail) + "_" + std::to_string(a.head);
}

void add_arc_vars(const Graph& g, FormulationHandles& h) {
    h.x.resize(2 * h.m);
    for (int a = 0; a < 2 * h.m; ++a) h.x[a] = h.model.add_binary(arc_name(g, a));
}

void add_edge_vars(const Graph& g, FormulationHandles& h) {
    h.x.resize(h.m);
    for (int k = 0; k < h.m; ++k) {
        auto [i, j] = g.edge(k);
        h.x[k] = h.model.add_binary("x_" + std::to_string(i) + "_" + std::to_string(j));
    }
}

void add_vertex_objective_vars(FormulationHandles& h, bool binary) {
    h.y.resize(h.n);
    for (int v = 1; v <= h.n; ++v) {
        int id = binary ? h.model.add_binary("y_" + std::to_string(v))
                        : h.model.add_continuous(0.0, milp::kInfinity, "y_" + std::to_string(v));
        h.model.set_objective(id, 1.0);
        h.y[v - 1] = id;
    }
}

/// Everything of LIC except the per-arc outgoing-limit family, which differs
/// between LIC and LIC2.
FormulationHandles build_lic_common(const Graph& g, bool lic2) {
    FormulationHandles h;
    h.kind = lic2 ? ModelKind::LIC2 : ModelKind::LIC;
    h.n = g.vertex_count();
    h.m = g.edge_count();
    h.model.name = to_string(h.kind);
    const int n = h.n;

    add_arc_vars(g, h);
    add_vertex_objective_vars(h, /*binary=*/false);
    h.u.resize(n);
    h.w.resize(n);
    for (int v = 1; v <= n; ++v)
        h.u[v - 1] = h.model.add_continuous(0.0, n, "u_" + std::to_string(v));
    for (int v = 1; v <= n; ++v) h.w[v - 1] = h.model.add_binary("w_" + std::to_string(v));

    // Anti-parallel exclusion: at most one orientation of each edge.
    for (int k = 0; k < h.m; ++k)
        h.model.add_row({{{h.x[2 * k], 1.0}, {h.x[2 * k + 1], 1.0}}, RowSense::LE, 1.0, {}});

    if (!lic2) {
        // At most one selected arc leaving either endpoint of any arc.
        for (int a = 0; a < 2 * h.m; ++a) {
            LinearConstraint row;
            for (int gid : delta_arc(g, a, Direction::Out)) row.terms.push_back({h.x[gid], 1.0});
            row.sense = RowSense::LE;
            row.rhs = 1.0;
            if (!row.terms.empty()) h.model.add_row(std::move(row));
        }
    } else {
        // Both endpoints selected forces one orientation of the edge.
        for (int k = 0; k < h.m; ++k) {
            auto [i, j] = g.edge(k);
            h.model.add_row({{{h.x[2 * k], 1.0},
                              {h.x[2 * k + 1], 1.0},
                              {h.y[i - 1], -1.0},
                              {h.y[j - 1], -1.0}},
                             RowSense::GE,
                             -1.0,
                             {}});
        }
    }

    // Vertex degree ties y to the selected arcs, one out and one in.
    for (int v = 1; v <= n; ++v) {
        LinearConstraint out_row, in_row;
        out_row.terms.push_back({h.y[v - 1], 1.0});
        in_row.terms.push_back({h.y[v - 1], 1.0});
        for (int a : delta_vertex(g, v, Direction::Out)) out_row.terms.push_back({h.x[a], -1.0});
        for (int a : delta_vertex(g, v, Direction::In)) in_row.terms.push_back({h.x[a], -1.0});
        out_row.sense = in_row.sense = RowSense::EQ;
        out_row.rhs = in_row.rhs = 0.0;
        h.model.add_row(std::move(out_row));
        h.model.add_row(std::move(in_row));
    }

    // Exactly one wrap-around marker, and only on a selected vertex.
    {
        LinearConstraint row;
        for (int v = 1; v <= n; ++v) row.terms.push_back({h.w[v - 1], 1.0});
        row.sense = RowSense::EQ;
        row.rhs = 1.0;
        h.model.add_row(std::move(row));
    }
    for (int v = 1; v <= n; ++v)
        h.model.add_row({{{h.w[v - 1], 1.0}, {h.y[v - 1], -1.0}}, RowSense::LE, 0.0, {}});

    // Modified MTZ ordering: u_i - u_j <= n(1 - x_e) - 1 + n w_i per arc.
    for (int a = 0; a < 2 * h.m; ++a) {
        Arc e = arc_by_id(g, a);
        h.model.add_row({{{h.u[e.tail - 1], 1.0},
                          {h.u[e.head - 1], -1.0},
                          {h.x[a], static_cast<double>(n)},
                          {h.w[e.tail - 1], -static_cast<double>(n)}},
                         RowSense::LE,
                         static_cast<double>(n) - 1.0,
                         {}});
    }

    // Symmetry breaking: the marked vertex has the smallest selected index.
    for (int j = 1; j <= n; ++j) {
        LinearConstraint row;
        for (int v = 1; v <= n; ++v) row.terms.push_back({h.w[v - 1], static_cast<double>(v)});
        row.terms.push_back({h.y[j - 1], static_cast<double>(n - j)});
        row.sense = RowSense::LE;
        row.rhs = n;
        h.model.add_row(std::move(row));
    }
    return h;
}

}  // namespace

FormulationHandles build_lic(const Graph& g) { return build_lic_common(g, false); }

FormulationHandles build_lic2(const Graph& g) { return build_lic_common(g, true); }

FormulationHandles build_ilp_cut(const Graph& g) {
    FormulationHandles h;
    h.kind = ModelKind::IlpCut;
    h.n = g.vertex_count();
    h.m = g.edge_count();
    h.model.name = "ilpcut";

    add_arc_vars(g, h);
    for (int a = 0; a < 2 * h.m; ++a) h.model.set_objective(h.x[a], 0.5);

    // Selection is orientation-symmetric.
    for (int k = 0; k < h.m; ++k)
        h.model.add_row({{{h.x[2 * k], 1.0}, {h.x[2 * k + 1], -1.0}}, RowSense::EQ, 0.0, {}});

    // The anti-parallel arc is left out of both neighborhood sums below;
    // with it the predecessor row is vacuous and the two-neighbor row cuts
    // off every cycle.
    for (int a = 0; a < 2 * h.m; ++a) {
        Arc e = arc_by_id(g, a);
        const int rev = reverse_arc(a);

        LinearConstraint pred;  // a selected arc needs a selected predecessor at its tail
        pred.terms.push_back({h.x[a], 1.0});
        for (int gid : delta_vertex(g, e.tail, Direction::In)) {
            if (gid == rev) continue;
            pred.terms.push_back({h.x[gid], -1.0});
        }
        pred.sense = RowSense::LE;
        pred.rhs = 0.0;
        h.model.add_row(std::move(pred));

        LinearConstraint two;  // at most two selected neighbors around the arc
        for (int gid : delta_vertex(g, e.tail, Direction::In)) {
            if (gid == rev) continue;
            two.terms.push_back({h.x[gid], 1.0});
        }
        for (int gid : delta_vertex(g, e.head, Direction::Out)) {
            if (gid == rev) continue;
            two.terms.push_back({h.x[gid], 1.0});
        }
        two.sense = RowSense::LE;
        two.rhs = 2.0;
        if (!two.terms.empty()) h.model.add_row(std::move(two));
    }
    return h;
}

namespace {

FormulationHandles build_vertex_edge_common(const Graph& g, ModelKind kind) {
    FormulationHandles h;
    h.kind = kind;
    h.n = g.vertex_count();
    h.m = g.edge_count();
    h.model.name = to_string(kind);

    add_vertex_objective_vars(h, /*binary=*/true);
    add_edge_vars(g, h);

    // Each selected vertex touches exactly two selected edges.
    for (int v = 1; v <= h.n; ++v) {
        LinearConstraint row;
        for (int k : g.incident_edges(v)) row.terms.push_back({h.x[k], 1.0});
        row.terms.push_back({h.y[v - 1], -2.0});
        row.sense = RowSense::EQ;
        row.rhs = 0.0;
        h.model.add_row(std::move(row));
    }
    // Selected edges need selected endpoints; selected endpoints force the edge.
    for (int k = 0; k < h.m; ++k) {
        auto [i, j] = g.edge(k);
        h.model.add_row({{{h.x[k], 1.0}, {h.y[i - 1], -1.0}}, RowSense::LE, 0.0, {}});
        h.model.add_row({{{h.x[k], 1.0}, {h.y[j - 1], -1.0}}, RowSense::LE, 0.0, {}});
        h.model.add_row(
            {{{h.x[k], 1.0}, {h.y[i - 1], -1.0}, {h.y[j - 1], -1.0}}, RowSense::GE, -1.0, {}});
    }
    return h;
}

}  // namespace

FormulationHandles build_cec(const Graph& g) {
    return build_vertex_edge_common(g, ModelKind::Cec);
}

FormulationHandles build_ccp(const Graph& g) {
    if (g.vertex_count() < 4) throw std::invalid_argument("ccp needs at least four vertices");
    FormulationHandles h = build_vertex_edge_common(g, ModelKind::Ccp);

    LinearConstraint balance;  // as many selected edges as selected vertices
    for (int k = 0; k < h.m; ++k) balance.terms.push_back({h.x[k], 1.0});
    for (int v = 1; v <= h.n; ++v) balance.terms.push_back({h.y[v - 1], -1.0});
    balance.sense = RowSense::EQ;
    balance.rhs = 0.0;
    h.model.add_row(std::move(balance));

    LinearConstraint hole;  // holes have at least four vertices
    for (int v = 1; v <= h.n; ++v) hole.terms.push_back({h.y[v - 1], 1.0});
    hole.sense = RowSense::GE;
    hole.rhs = 4.0;
    h.model.add_row(std::move(hole));
    return h;
}

int add_clique_cuts(FormulationHandles& h, const Graph& g, const std::vector<VertexSet>& cliques) {
    if (h.kind != ModelKind::Ccp) throw std::invalid_argument("clique cuts only apply to ccp");
    int added = 0;
    for (const auto& q : cliques) {
        std::vector<int> verts = q.members();
        if (verts.size() < 3) throw std::invalid_argument("clique cut needs at least 3 vertices");
        for (std::size_t a = 0; a < verts.size(); ++a)
            for (std::size_t b = a + 1; b < verts.size(); ++b)
                if (!g.has_edge(verts[a], verts[b]))
                    throw std::invalid_argument("clique cut input is not a clique");

        LinearConstraint at_most_two;
        for (int v : verts) at_most_two.terms.push_back({h.y[v - 1], 1.0});
        at_most_two.sense = RowSense::LE;
        at_most_two.rhs = 2.0;
        h.model.add_row(std::move(at_most_two));

        LinearConstraint edge_bound;  // clique edges >= clique vertices - 1
        for (std::size_t a = 0; a < verts.size(); ++a)
            for (std::size_t b = a + 1; b < verts.size(); ++b)
                edge_bound.terms.push_back({h.x[g.edge_id(verts[a], verts[b])], 1.0});
        for (int v : verts) edge_bound.terms.push_back({h.y[v - 1], -1.0});
        edge_bound.sense = RowSense::GE;
        edge_bound.rhs = -1.0;
        h.model.add_row(std::move(edge_bound));
        added += 2;
    }
    return added;
}

milp::LinearConstraint objective_bound_row(const FormulationHandles& h, int lb) {
    LinearConstraint row;
    for (int j = 0; j < h.model.var_count(); ++j)
        if (h.model.objective[j] != 0.0) row.terms.push_back({j, h.model.objective[j]});
    row.sense = RowSense::GE;
    row.rhs = lb;
    row.name = "objective_bound";
    return row;
}

void warm_start_bound(FormulationHandles& h, int lb) {
    if (lb < 0) throw std::invalid_argument("warm start bound must be nonnegative");
    h.model.add_row(objective_bound_row(h, lb));
}

void add_min_length_row(FormulationHandles& h, int min_length) {
    if (min_length < 1) return;
    auto row = objective_bound_row(h, min_length);
    row.name = "min_length";
    h.model.add_row(std::move(row));
}

std::vector<char> selected_edges(const FormulationHandles& h, const std::vector<double>& x) {
    std::vector<char> sel(h.m, 0);
    if (h.kind == ModelKind::Cec || h.kind == ModelKind::Ccp) {
        for (int k = 0; k < h.m; ++k) sel[k] = x[h.x[k]] > 0.5;
    } else {
        for (int k = 0; k < h.m; ++k) sel[k] = x[h.x[2 * k]] + x[h.x[2 * k + 1]] > 0.5;
    }
    return sel;
}

std::string to_string(CycleOutcome o) {
    switch (o) {
        case CycleOutcome::FoundCycle: return "cycle";
        case CycleOutcome::NoCycle: return "no_cycle";
        case CycleOutcome::NoHole: return "no_hole";
        case CycleOutcome::Unsolved: return "unsolved";
    }
    return "?";
}

CycleResult extract_cycle(const Graph& g, const FormulationHandles& h,
                          const std::vector<double>& solution) {
    double obj = 0.0;
    for (int j = 0; j < h.model.var_count(); ++j) obj += h.model.objective[j] * solution[j];
    auto comps = cycle_components(g, selected_edges(h, solution));

    CycleResult out;
    if (comps.empty()) {
        if (std::lround(obj) != 0) throw MalformedSolutionError("nonzero objective without a cycle");
        out.length = 0;
        out.outcome = CycleOutcome::NoCycle;
        return out;
    }
    if (comps.size() > 1) throw MalformedSolutionError("solution contains multiple cycles");
    const auto& cycle = comps[0];
    for (std::size_t a = 0; a < cycle.size(); ++a)
        for (std::size_t b = a + 1; b < cycle.size(); ++b) {
            bool consecutive = (b == a + 1) || (a == 0 && b == cycle.size() - 1);
            if (!consecutive && g.has_edge(cycle[a], cycle[b]))
                throw MalformedSolutionError("cycle has a chord");
        }
    if (std::lround(obj) != static_cast<long>(cycle.size()))
        throw MalformedSolutionError("objective does not match cycle length");
    out.length = static_cast<int>(cycle.size());
    out.cycles = {cycle};
    out.outcome = CycleOutcome::FoundCycle;
    return out;
}

}  // namespace chordless
