#include "chordless/milp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <queue>
#include <set>

#include "simplex.hpp"

namespace chordless::milp {

int Model::add_binary(std::string name) {
    vars.push_back({0.0, 1.0, VarType::Binary, std::move(name)});
    objective.push_back(0.0);
    return var_count() - 1;
}

int Model::add_continuous(double lb, double ub, std::string name) {
    if (std::isnan(lb) || std::isnan(ub) || lb > ub)
        throw std::invalid_argument("Model: bad continuous bounds");
    vars.push_back({lb, ub, VarType::Continuous, std::move(name)});
    objective.push_back(0.0);
    return var_count() - 1;
}

void Model::set_objective(int var, double coef) {
    if (var < 0 || var >= var_count()) throw std::invalid_argument("Model: unknown variable");
    if (!std::isfinite(coef)) throw std::invalid_argument("Model: non-finite objective");
    objective[var] = coef;
}

void validate_constraint(const Model& m, const LinearConstraint& c) {
    std::set<int> seen;
    for (auto [v, a] : c.terms) {
        if (v < 0 || v >= m.var_count())
            throw std::invalid_argument("constraint references unknown variable " + std::to_string(v));
        if (!std::isfinite(a)) throw std::invalid_argument("constraint has non-finite coefficient");
        if (!seen.insert(v).second)
            throw std::invalid_argument("constraint repeats variable " + std::to_string(v));
    }
    if (!std::isfinite(c.rhs)) throw std::invalid_argument("constraint has non-finite rhs");
}

void Model::add_row(LinearConstraint row) {
    validate_constraint(*this, row);
    rows.push_back(std::move(row));
}

namespace {

std::string var_name(const Model& m, int j) {
    if (!m.vars[j].name.empty()) return m.vars[j].name;
    return "v" + std::to_string(j);
}

void write_terms(std::ostream& os, const Model& m, const std::vector<std::pair<int, double>>& terms) {
    for (auto [v, a] : terms) {
        os << (a < 0 ? " - " : " + ");
        double mag = std::fabs(a);
        if (mag != 1.0) os << mag << " ";
        os << var_name(m, v);
    }
}

}  // namespace

void Model::write_lp(std::ostream& os) const {
    os << "\\ " << name << "\n";
    os << "Maximize\n obj:";
    bool any = false;
    for (int j = 0; j < var_count(); ++j) {
        if (objective[j] == 0.0) continue;
        os << (objective[j] < 0 ? " - " : " + ");
        double mag = std::fabs(objective[j]);
        if (mag != 1.0) os << mag << " ";
        os << var_name(*this, j);
        any = true;
    }
    if (!any) os << " 0" << (var_count() ? " " + var_name(*this, 0) : "");
    os << "\nSubject To\n";
    for (int r = 0; r < row_count(); ++r) {
        const auto& row = rows[r];
        os << " " << (row.name.empty() ? "c" + std::to_string(r) : row.name) << ":";
        write_terms(os, *this, row.terms);
        switch (row.sense) {
            case RowSense::LE: os << " <= "; break;
            case RowSense::GE: os << " >= "; break;
            case RowSense::EQ: os << " = "; break;
        }
        os << row.rhs << "\n";
    }
    os << "Bounds\n";
    for (int j = 0; j < var_count(); ++j) {
        if (vars[j].type == VarType::Binary) continue;
        if (std::isinf(vars[j].ub))
            os << " " << var_name(*this, j) << " >= " << vars[j].lb << "\n";
        else
            os << " " << vars[j].lb << " <= " << var_name(*this, j) << " <= " << vars[j].ub << "\n";
    }
    bool any_bin = false;
    for (int j = 0; j < var_count(); ++j) any_bin = any_bin || vars[j].type == VarType::Binary;
    if (any_bin) {
        os << "Binaries\n";
        for (int j = 0; j < var_count(); ++j)
            if (vars[j].type == VarType::Binary) os << " " << var_name(*this, j) << "\n";
    }
    os << "End\n";
}

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::CutoffExhausted: return "cutoff_exhausted";
        case SolveStatus::TimeLimit: return "time_limit";
    }
    return "?";
}

namespace {

void validate_model(const Model& m) {
    for (int j = 0; j < m.var_count(); ++j) {
        const auto& v = m.vars[j];
        if (v.type == VarType::Binary && (v.lb != 0.0 || v.ub != 1.0))
            throw std::invalid_argument("binary variable with non-unit bounds");
        if (!std::isfinite(m.objective[j])) throw std::invalid_argument("non-finite objective");
    }
    for (const auto& r : m.rows) validate_constraint(m, r);
}

double row_activity(const LinearConstraint& row, const std::vector<double>& x) {
    double acc = 0.0;
    for (auto [v, a] : row.terms) acc += a * x[v];
    return acc;
}

bool satisfies(const LinearConstraint& row, const std::vector<double>& x, double tol) {
    double act = row_activity(row, x);
    switch (row.sense) {
        case RowSense::LE: return act <= row.rhs + tol;
        case RowSense::GE: return act >= row.rhs - tol;
        case RowSense::EQ: return std::fabs(act - row.rhs) <= tol;
    }
    return false;
}

double objective_value(const Model& m, const std::vector<double>& x) {
    double acc = 0.0;
    for (int j = 0; j < m.var_count(); ++j) acc += m.objective[j] * x[j];
    return acc;
}

LinearConstraint objective_bound_row(const Model& m, double lb) {
    LinearConstraint row;
    for (int j = 0; j < m.var_count(); ++j)
        if (m.objective[j] != 0.0) row.terms.push_back({j, m.objective[j]});
    row.sense = RowSense::GE;
    row.rhs = lb;
    row.name = "objective_bound";
    return row;
}

struct Node {
    long id = 0;
    int depth = 0;
    double bound = kInfinity;
    std::vector<std::pair<int, int>> fixings;  // (binary var, value)
};

struct NodeOrder {
    // Best bound first, then deepest, then most recently created.
    bool operator()(const Node& a, const Node& b) const {
        if (a.bound != b.bound) return a.bound < b.bound;
        if (a.depth != b.depth) return a.depth < b.depth;
        return a.id < b.id;
    }
};

}  // namespace

SolveOutcome branch_and_bound(const Model& model, const LazyHandler& handler,
                              const SolveConfig& cfg) {
    validate_model(model);
    const auto t_start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    };

    detail::Simplex sx(model);
    std::vector<LinearConstraint> all_rows = model.rows;

    SolveOutcome out;
    std::optional<double> cutoff = cfg.objective_cutoff;
    bool cutoff_active = cutoff.has_value();

    if (cfg.initial_solution) {
        const auto& x0 = *cfg.initial_solution;
        if (static_cast<int>(x0.size()) != model.var_count())
            throw std::invalid_argument("initial solution size mismatch");
        for (int j = 0; j < model.var_count(); ++j) {
            const auto& v = model.vars[j];
            if (x0[j] < v.lb - cfg.feas_tol || x0[j] > v.ub + cfg.feas_tol ||
                (v.type == VarType::Binary && std::fabs(x0[j] - std::round(x0[j])) > cfg.int_tol))
                throw std::invalid_argument("initial solution violates variable domain");
        }
        for (const auto& r : model.rows)
            if (!satisfies(r, x0, 1e-6)) throw std::invalid_argument("initial solution infeasible");
        out.has_incumbent = true;
        out.incumbent = x0;
        out.incumbent_obj = objective_value(model, x0);
    }

    std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
    long next_id = 0;
    open.push(Node{next_id++, 0, kInfinity, {}});

    bool hit_limit = false;
    auto prune_threshold = [&] {
        double t = -kInfinity;
        if (cutoff) t = std::max(t, *cutoff);
        if (out.has_incumbent)
            t = std::max(t, out.incumbent_obj + (cfg.integral_objective ? 1.0 : 0.0));
        return t - cfg.int_tol;
    };

    while (!open.empty()) {
        if (elapsed() > cfg.time_limit || (cfg.node_limit && out.nodes >= *cfg.node_limit)) {
            hit_limit = true;
            break;
        }
        Node node = open.top();
        open.pop();
        if (node.bound < prune_threshold()) continue;

        ++out.nodes;
        sx.reset_structural_bounds();
        for (auto [v, val] : node.fixings) sx.set_var_bounds(v, val, val);

        bool node_done = false;
        std::vector<double> last_accepted;
        while (!node_done) {
            if (elapsed() > cfg.time_limit) {
                hit_limit = true;
                break;
            }
            auto lp = sx.optimize();
            if (lp == detail::LpStatus::IterationLimit)
                throw std::runtime_error("LP iteration limit exceeded");
            if (lp == detail::LpStatus::Unbounded)
                throw std::runtime_error("LP relaxation unbounded; the model is malformed");
            if (lp == detail::LpStatus::Infeasible) break;

            double obj = sx.objective();
            if (obj < prune_threshold()) break;

            std::vector<double> x = sx.structural_values();
            int branch_var = -1;
            double branch_score = cfg.int_tol;
            for (int j = 0; j < model.var_count(); ++j) {
                if (model.vars[j].type != VarType::Binary) continue;
                double frac = std::min(x[j], 1.0 - x[j]);
                if (frac > branch_score) {
                    branch_score = frac;
                    branch_var = j;
                }
            }

            if (branch_var < 0) {
                // Integral point: round the binaries and consult the handler.
                for (int j = 0; j < model.var_count(); ++j)
                    if (model.vars[j].type == VarType::Binary) x[j] = std::round(x[j]);

                CallbackContext ctx;
                bool accept = handler ? handler(x, ctx) : true;

                if (accept && !ctx.cuts().empty())
                    throw std::logic_error("lazy handler accepted a point while adding cuts");

                if (!ctx.cuts().empty() || ctx.cutoff_raise()) {
                    bool progress = false;
                    for (const auto& c : ctx.cuts()) {
                        validate_constraint(model, c);
                        all_rows.push_back(c);
                        sx.add_row(c);
                        ++out.lazy_cuts;
                        progress = true;
                    }
                    if (ctx.cutoff_raise()) {
                        double r = *ctx.cutoff_raise();
                        if (!cutoff || r > *cutoff) {
                            cutoff = r;
                            cutoff_active = true;
                            progress = true;
                            if (cfg.cutoff_as_rows) {
                                auto row = objective_bound_row(model, r);
                                all_rows.push_back(row);
                                sx.add_row(row);
                            }
                        }
                    }
                    if (!accept) {
                        if (!progress) throw std::logic_error("lazy handler made no progress");
                        continue;  // re-solve this node with the new cuts / cutoff
                    }
                } else if (!accept) {
                    throw std::logic_error(
                        "lazy handler rejected a point without adding cuts or raising the cutoff");
                }

                if (accept) {
                    double xobj = objective_value(model, x);
                    bool meets_cutoff = !cutoff || xobj >= *cutoff - cfg.int_tol;
                    if (meets_cutoff && (!out.has_incumbent || xobj > out.incumbent_obj + 1e-9)) {
                        for (const auto& r : all_rows)
                            if (!satisfies(r, x, 1e-6))
                                throw std::logic_error("accepted point violates a model row");
                        out.has_incumbent = true;
                        out.incumbent = x;
                        out.incumbent_obj = xobj;
                    }
                    // Re-solve once more: a handler that enumerates alternate
                    // optima will cut the point it just recorded when it sees
                    // it again, exposing the next optimum in this region. A
                    // repeat acceptance of the same point ends the node.
                    if (!handler || x == last_accepted) {
                        node_done = true;
                    } else {
                        last_accepted = x;
                    }
                }
            } else {
                for (int val : {0, 1}) {
                    Node child;
                    child.id = next_id++;
                    child.depth = node.depth + 1;
                    child.bound = obj;
                    child.fixings = node.fixings;
                    child.fixings.push_back({branch_var, val});
                    open.push(std::move(child));
                }
                node_done = true;
            }
        }
        if (hit_limit) break;
    }

    out.lp_iterations = sx.iterations();
    out.seconds = elapsed();
    if (hit_limit) {
        out.status = SolveStatus::TimeLimit;
        double bb = out.has_incumbent ? out.incumbent_obj : -kInfinity;
        while (!open.empty()) {
            bb = std::max(bb, open.top().bound);
            open.pop();
        }
        out.best_bound = bb;
    } else if (out.has_incumbent) {
        out.status = SolveStatus::Optimal;
        out.best_bound = out.incumbent_obj;
    } else if (cutoff_active) {
        out.status = SolveStatus::CutoffExhausted;
        out.best_bound = -kInfinity;
    } else {
        out.status = SolveStatus::Infeasible;
        out.best_bound = -kInfinity;
    }
    return out;
}

SolveOutcome branch_and_bound(const Model& m, const SolveConfig& cfg) {
    return branch_and_bound(m, LazyHandler{}, cfg);
}

LpResult lp_relax_solve(const Model& m) {
    validate_model(m);
    detail::Simplex sx(m);
    auto st = sx.optimize();
    LpResult out;
    out.iterations = sx.iterations();
    switch (st) {
        case detail::LpStatus::Optimal:
            out.status = LpResult::Status::Optimal;
            out.objective = sx.objective();
            out.x = sx.structural_values();
            break;
        case detail::LpStatus::Infeasible: out.status = LpResult::Status::Infeasible; break;
        case detail::LpStatus::Unbounded: out.status = LpResult::Status::Unbounded; break;
        case detail::LpStatus::IterationLimit:
            throw std::runtime_error("LP iteration limit exceeded");
    }
    return out;
}

}  // namespace chordless::milp
