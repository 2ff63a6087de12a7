#pragma once

#include <vector>

#include "chordless/milp.hpp"

namespace chordless::milp::detail {

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

/// Bounded-variable primal simplex over the rows of a Model. Each row gets a
/// logical variable holding the row activity, so a basis of logicals is
/// always available and the solver can restart cheaply after bound changes
/// or row additions (the basis and its inverse are kept between solves).
///
/// Phase 1 minimizes the total bound violation of the basic variables with a
/// composite cost vector and Dantzig pricing; phase 2 minimizes the negated
/// model objective with devex pricing over incrementally maintained reduced
/// costs. Both switch to Bland's rule after a run of degenerate pivots.
class Simplex {
public:
    explicit Simplex(const Model& base);

    /// Append a row; its terms may only reference structural variables. The
    /// new logical enters the basis, so no refactorization is needed.
    void add_row(const LinearConstraint& row);

    void set_var_bounds(int var, double lo, double hi);
    void reset_structural_bounds();

    LpStatus optimize();

    /// Maximization objective value of the current point.
    double objective() const;
    std::vector<double> structural_values() const;

    long iterations() const { return iters_total_; }
    int structural_count() const { return ns_; }
    int row_count() const { return m_; }

private:
    enum class VState : char { Basic, AtLower, AtUpper, Free };

    void append_row_internal(const LinearConstraint& row);
    void snap_nonbasic();
    void recompute_basic_values();
    void refactorize();
    int count_infeasible() const;
    void compute_phase1_costs(std::vector<double>& d) const;
    void refresh_reduced_costs();
    int choose_entering(const std::vector<double>& d, bool devex, int* direction) const;
    void ftran(int j);
    void pivot_row(int r, std::vector<double>& alpha) const;

    int ns_ = 0;  // structural variables
    int m_ = 0;   // rows == logical variables
    int nv_ = 0;  // ns_ + m_

    std::vector<std::vector<std::pair<int, double>>> cols_;  // structural columns
    std::vector<double> base_lb_, base_ub_;
    std::vector<double> lb_, ub_;
    std::vector<double> cost_;  // minimization costs (phase 2)
    std::vector<double> value_;
    std::vector<VState> state_;
    std::vector<int> basis_;         // var id per row position
    std::vector<int> pos_in_basis_;  // var id -> row position or -1
    std::vector<double> binv_;       // column-major m_ x m_
    std::vector<double> w_;          // entering column in basis coordinates
    std::vector<double> d_;          // maintained phase-2 reduced costs
    std::vector<double> devex_;      // devex reference weights
    bool d_valid_ = false;

    long iters_total_ = 0;
    int pivots_since_refactor_ = 0;
    int degenerate_streak_ = 0;
    bool bland_ = false;
};

}  // namespace chordless::milp::detail
