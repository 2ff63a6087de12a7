#include "chordless/separation.hpp"

#include <algorithm>
#include <ostream>

namespace chordless {

using milp::LinearConstraint;
using milp::RowSense;

void CutPoolState::record(const std::vector<int>& cycle) {
    if (std::find(best_cycles.begin(), best_cycles.end(), cycle) == best_cycles.end())
        best_cycles.push_back(cycle);
}

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::Direct: return "direct";
        case Strategy::Soft: return "soft";
        case Strategy::Tough: return "tough";
    }
    return "?";
}

Strategy strategy_from_string(const std::string& s) {
    if (s == "direct") return Strategy::Direct;
    if (s == "soft") return Strategy::Soft;
    if (s == "tough") return Strategy::Tough;
    throw std::invalid_argument("unknown strategy '" + s + "'");
}

milp::LinearConstraint subtour_cut_ilpcut(const Graph& g, const FormulationHandles& h,
                                          const std::vector<int>& cycle) {
    if (h.kind != ModelKind::IlpCut) throw std::invalid_argument("cut requires the ilpcut model");
    if (cycle.empty()) throw std::invalid_argument("empty cycle");
    int i = *std::min_element(cycle.begin(), cycle.end());
    VertexSet c = VertexSet::of(g.vertex_count(), cycle);

    // delta(i) and delta(C) overlap on the arcs at i that cross the
    // boundary; merge coefficients so no variable repeats. A spanning cycle
    // has no crossing arcs at all.
    std::vector<double> coef(2 * h.m, 0.0);
    for (int a : delta_vertex(g, i, Direction::Both)) coef[a] += 1.0;
    if (!c.full())
        for (int a : delta_cut(g, c, Direction::Both)) coef[a] -= 1.0;

    LinearConstraint row;
    for (int a = 0; a < 2 * h.m; ++a)
        if (coef[a] != 0.0) row.terms.push_back({h.x[a], coef[a]});
    row.sense = RowSense::LE;
    row.rhs = 0.0;
    return row;
}

milp::LinearConstraint subtour_cut_cec(const FormulationHandles& h, const std::vector<int>& cycle) {
    if (h.kind != ModelKind::Cec && h.kind != ModelKind::Ccp)
        throw std::invalid_argument("cut requires a vertex-selection model");
    if (cycle.empty()) throw std::invalid_argument("empty cycle");
    LinearConstraint row;
    for (int v : cycle) row.terms.push_back({h.y[v - 1], 1.0});
    std::sort(row.terms.begin(), row.terms.end());
    row.sense = RowSense::LE;
    row.rhs = static_cast<double>(cycle.size()) - 1.0;
    return row;
}

namespace {

std::vector<int> crossing_edge_ids(const Graph& g, const VertexSet& c) {
    std::vector<int> out;
    if (c.full()) return out;
    for (int a : delta_cut(g, c, Direction::Out)) out.push_back(a / 2);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

milp::LinearConstraint subtour_cut_ccp_basic(const Graph& g, const FormulationHandles& h,
                                             const VertexSet& c, int i, int j) {
    if (h.kind != ModelKind::Ccp) throw std::invalid_argument("cut requires the ccp model");
    if (!c.contains(i) || c.contains(j)) throw std::invalid_argument("witness does not cross the cut");
    LinearConstraint row;
    for (int k : crossing_edge_ids(g, c)) row.terms.push_back({h.x[k], 1.0});
    row.terms.push_back({h.y[i - 1], -2.0});
    row.terms.push_back({h.y[j - 1], -2.0});
    row.sense = RowSense::GE;
    row.rhs = -2.0;
    return row;
}

milp::LinearConstraint subtour_cut_ccp_strengthened(const Graph& g, const FormulationHandles& h,
                                                    const VertexSet& c, int edge) {
    if (h.kind != ModelKind::Ccp) throw std::invalid_argument("cut requires the ccp model");
    auto [i, j] = g.edge(edge);
    if (c.contains(i) == c.contains(j))
        throw std::invalid_argument("witness edge does not cross the cut");
    LinearConstraint row;
    for (int k : crossing_edge_ids(g, c)) row.terms.push_back({h.x[k], k == edge ? -1.0 : 1.0});
    row.sense = RowSense::GE;
    row.rhs = 0.0;
    return row;
}

namespace {

double violation(const LinearConstraint& row, const std::vector<double>& x) {
    double act = 0.0;
    for (auto [v, a] : row.terms) act += a * x[v];
    switch (row.sense) {
        case RowSense::LE: return act - row.rhs;
        case RowSense::GE: return row.rhs - act;
        case RowSense::EQ: return std::abs(act - row.rhs);
    }
    return 0.0;
}

struct HandlerCore {
    const Graph& g;
    const FormulationHandles& h;
    CutPoolState& state;
    SeparationOptions opts;

    std::vector<std::vector<int>> components(const std::vector<double>& x) const {
        auto comps = cycle_components(g, selected_edges(h, x));
        std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a < b;
        });
        return comps;
    }

    /// Emits the formulation's subtour cut(s) for one component, deduplicated
    /// by the component's sorted vertex set (plus the outside witness for the
    /// hole model, whose basic cut binds only while that witness is
    /// selected). Returns the number of rows added.
    int emit_cut(const std::vector<int>& comp, const std::vector<double>& x,
                 milp::CallbackContext& ctx) {
        std::vector<int> key = comp;
        std::sort(key.begin(), key.end());
        const int smallest = key.front();

        std::vector<LinearConstraint> rows;
        switch (h.kind) {
            case ModelKind::IlpCut:
                if (!state.emitted_keys.insert(key).second) return 0;
                rows.push_back(subtour_cut_ilpcut(g, h, comp));
                break;
            case ModelKind::Cec:
                if (!state.emitted_keys.insert(key).second) return 0;
                rows.push_back(subtour_cut_cec(h, comp));
                break;
            case ModelKind::Ccp: {
                VertexSet c = VertexSet::of(g.vertex_count(), comp);
                int outside = 0;  // smallest selected vertex outside the component
                for (int v = 1; v <= g.vertex_count() && !outside; ++v)
                    if (!c.contains(v) && x[h.y[v - 1]] > 0.5) outside = v;
                key.push_back(-outside);
                if (!state.emitted_keys.insert(key).second) return 0;
                if (outside) {
                    rows.push_back(subtour_cut_ccp_basic(g, h, c, smallest, outside));
                } else {
                    // A spanning single cycle has no selected outside witness;
                    // the crossing-edge family cannot separate it, the vertex
                    // form can (no hole contains all of this cycle's vertices).
                    rows.push_back(subtour_cut_cec(h, comp));
                }
                if (opts.ccp_strengthened) {
                    auto crossing = crossing_edge_ids(g, c);
                    if (!crossing.empty())
                        rows.push_back(subtour_cut_ccp_strengthened(g, h, c, crossing.front()));
                }
                break;
            }
            default: throw std::logic_error("no lazy cuts for this model");
        }
        for (auto& row : rows) {
            if (opts.cut_log) {
                *opts.cut_log << "cut " << to_string(h.kind) << " cycle=[";
                for (std::size_t i = 0; i < comp.size(); ++i)
                    *opts.cut_log << (i ? "," : "") << comp[i];
                *opts.cut_log << "] violation=" << violation(row, x) << "\n";
            }
            ctx.add_lazy(std::move(row));
            ++state.cuts_added;
        }
        return static_cast<int>(rows.size());
    }
};

}  // namespace

milp::LazyHandler make_soft_handler(const Graph& g, const FormulationHandles& h,
                                    CutPoolState& state, const SeparationOptions& opts) {
    HandlerCore core{g, h, state, opts};
    return [core](const std::vector<double>& x, milp::CallbackContext& ctx) mutable {
        auto comps = core.components(x);
        if (comps.empty()) return true;  // nothing selected, feasible as-is
        int rejected = 0;
        auto& state = core.state;
        for (const auto& comp : comps) {
            int len = static_cast<int>(comp.size());
            if (len < state.min_record_length) {
                ++rejected;
                core.emit_cut(comp, x, ctx);
            } else if (len > state.longest_induced_cycle) {
                // Potentially the optimum: record it and leave it uncut.
                state.longest_induced_cycle = len;
                state.best_cycles.clear();
                state.record(comp);
                ctx.raise_cutoff(len);
            } else {
                if (len == state.longest_induced_cycle) state.record(comp);
                ++rejected;
                core.emit_cut(comp, x, ctx);
            }
        }
        return rejected == 0;
    };
}

milp::LazyHandler make_tough_handler(const Graph& g, const FormulationHandles& h,
                                     CutPoolState& state, const SeparationOptions& opts) {
    HandlerCore core{g, h, state, opts};
    return [core](const std::vector<double>& x, milp::CallbackContext& ctx) mutable {
        auto comps = core.components(x);
        auto& state = core.state;
        for (const auto& comp : comps) {
            int len = static_cast<int>(comp.size());
            if (len >= state.min_record_length) {
                if (len > state.longest_induced_cycle) {
                    state.longest_induced_cycle = len;
                    state.best_cycles.clear();
                    state.record(comp);
                } else if (len == state.longest_induced_cycle) {
                    state.record(comp);
                }
            }
            core.emit_cut(comp, x, ctx);
        }
        ctx.raise_cutoff(state.longest_induced_cycle + 1);
        return false;
    };
}

}  // namespace chordless
