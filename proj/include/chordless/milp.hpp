#pragma once

#include <functional>
#include <iosfwd>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chordless::milp {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class VarType { Continuous, Binary };

struct Variable {
    double lb = 0.0;
    double ub = 1.0;
    VarType type = VarType::Binary;
    std::string name;
};

enum class RowSense { LE, GE, EQ };

/// Sparse row a·x {<=,>=,==} rhs. Variable ids must be distinct within one
/// constraint and coefficients finite.
struct LinearConstraint {
    std::vector<std::pair<int, double>> terms;
    RowSense sense = RowSense::LE;
    double rhs = 0.0;
    std::string name;
};

/// Binary MILP in maximization form. Variable ids are dense 0..V-1.
class Model {
public:
    int add_binary(std::string name = {});
    int add_continuous(double lb, double ub, std::string name = {});
    void set_objective(int var, double coef);

    void add_row(LinearConstraint row);

    int var_count() const { return static_cast<int>(vars.size()); }
    int row_count() const { return static_cast<int>(rows.size()); }

    /// Plain-text LP-format dump (Maximize / Subject To / Bounds / Binaries).
    void write_lp(std::ostream& os) const;

    std::vector<Variable> vars;
    std::vector<double> objective;  // maximize objective · x
    std::vector<LinearConstraint> rows;
    std::string name = "model";
};

/// Throws std::invalid_argument on repeated ids, unknown ids, or non-finite
/// data.
void validate_constraint(const Model& m, const LinearConstraint& c);

struct SolveConfig {
    double time_limit = 3600.0;
    double int_tol = 1e-6;
    double feas_tol = 1e-7;
    /// Accepted solutions must reach this objective; nodes whose LP bound
    /// falls strictly below are pruned.
    std::optional<double> objective_cutoff;
    std::optional<long> node_limit;
    /// Fidelity mode: cutoff raises from callbacks are also materialized as
    /// explicit objective-bound rows instead of pruning only.
    bool cutoff_as_rows = false;
    /// The objective takes integer values at integral points, so nodes whose
    /// bound cannot beat the incumbent by a full unit are pruned. Leave off
    /// to keep equal-bound nodes alive (needed to enumerate alternate optima).
    bool integral_objective = false;
    /// Known-feasible starting incumbent (checked against the base model).
    std::optional<std::vector<double>> initial_solution;
};

enum class SolveStatus { Optimal, Infeasible, CutoffExhausted, TimeLimit };

std::string to_string(SolveStatus s);

struct SolveOutcome {
    SolveStatus status = SolveStatus::Infeasible;
    bool has_incumbent = false;
    std::vector<double> incumbent;
    double incumbent_obj = -kInfinity;
    /// Largest LP bound among unexplored nodes when the search stopped early.
    double best_bound = kInfinity;
    long nodes = 0;
    long lazy_cuts = 0;
    long lp_iterations = 0;
    double seconds = 0.0;
};

/// Handed to the lazy handler at every integral node solution. Cuts are
/// appended globally; the cutoff only ever increases.
class CallbackContext {
public:
    void add_lazy(LinearConstraint c) { cuts_.push_back(std::move(c)); }
    void raise_cutoff(double value) {
        if (!raise_ || value > *raise_) raise_ = value;
    }

    const std::vector<LinearConstraint>& cuts() const { return cuts_; }
    std::optional<double> cutoff_raise() const { return raise_; }

private:
    std::vector<LinearConstraint> cuts_;
    std::optional<double> raise_;
};

/// Return true to accept the point as an incumbent candidate (then no cuts
/// may have been added), false to reject it; rejection must add at least one
/// cut or raise the cutoff, otherwise the search cannot make progress.
using LazyHandler = std::function<bool(const std::vector<double>& x, CallbackContext& ctx)>;

struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    double objective = 0.0;  // maximization value
    std::vector<double> x;
    long iterations = 0;
};

/// Solve the continuous relaxation (integrality dropped) with the bundled
/// bounded-variable primal simplex.
LpResult lp_relax_solve(const Model& m);

/// Best-bound branch and bound over the binary variables, invoking handler
/// at every integral node solution. Deterministic: identical model and
/// config give identical node counts and incumbents.
SolveOutcome branch_and_bound(const Model& m, const LazyHandler& handler, const SolveConfig& cfg);

/// Accept-always variant.
SolveOutcome branch_and_bound(const Model& m, const SolveConfig& cfg);

}  // namespace chordless::milp
