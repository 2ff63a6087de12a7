#include "simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chordless::milp::detail {

namespace {

constexpr double kFeasTol = 1e-7;
constexpr double kCostTol = 1e-7;
constexpr double kRatioZero = 1e-11;
constexpr double kPivotMin = 1e-9;
constexpr int kBlandTrigger = 40;
constexpr int kRefactorInterval = 128;

double row_lower(const LinearConstraint& r) {
    return r.sense == RowSense::LE ? -kInfinity : r.rhs;
}
double row_upper(const LinearConstraint& r) {
    return r.sense == RowSense::GE ? kInfinity : r.rhs;
}

}  // namespace

Simplex::Simplex(const Model& base) {
    ns_ = base.var_count();
    nv_ = ns_;
    cols_.assign(ns_, {});
    base_lb_.resize(ns_);
    base_ub_.resize(ns_);
    lb_.resize(ns_);
    ub_.resize(ns_);
    cost_.resize(ns_);
    value_.resize(ns_);
    state_.resize(ns_);
    pos_in_basis_.assign(ns_, -1);
    for (int j = 0; j < ns_; ++j) {
        base_lb_[j] = lb_[j] = base.vars[j].lb;
        base_ub_[j] = ub_[j] = base.vars[j].ub;
        cost_[j] = -base.objective[j];  // minimize the negated objective
        if (std::isfinite(lb_[j])) {
            state_[j] = VState::AtLower;
            value_[j] = lb_[j];
        } else if (std::isfinite(ub_[j])) {
            state_[j] = VState::AtUpper;
            value_[j] = ub_[j];
        } else {
            state_[j] = VState::Free;
            value_[j] = 0.0;
        }
    }
    for (const auto& row : base.rows) append_row_internal(row);
    refactorize();
}

void Simplex::append_row_internal(const LinearConstraint& row) {
    int r = m_;
    for (auto [v, a] : row.terms) {
        if (v < 0 || v >= ns_)
            throw std::invalid_argument("simplex row references non-structural variable");
        cols_[v].push_back({r, a});
    }
    int logical = nv_;
    ++m_;
    ++nv_;
    lb_.push_back(row_lower(row));
    ub_.push_back(row_upper(row));
    cost_.push_back(0.0);
    state_.push_back(VState::Basic);
    pos_in_basis_.push_back(r);
    basis_.push_back(logical);
    double activity = 0.0;
    for (auto [v, a] : row.terms) activity += a * value_[v];
    value_.push_back(activity);
}

void Simplex::add_row(const LinearConstraint& row) {
    int old_m = m_;
    append_row_internal(row);
    // B' = [[B,0],[C,-1]] so the new inverse gains the row [C B^-1, -1].
    std::vector<double> extended(static_cast<std::size_t>(m_) * m_, 0.0);
    std::vector<double> crow(old_m, 0.0);
    for (auto [v, a] : row.terms) {
        int p = pos_in_basis_[v];
        if (p >= 0 && p < old_m) crow[p] = a;
    }
    for (int c = 0; c < old_m; ++c) {
        const double* src = &binv_[static_cast<std::size_t>(c) * old_m];
        double* dst = &extended[static_cast<std::size_t>(c) * m_];
        std::copy(src, src + old_m, dst);
        double acc = 0.0;
        for (int p = 0; p < old_m; ++p) acc += crow[p] * src[p];
        dst[old_m] = acc;
    }
    extended[static_cast<std::size_t>(old_m) * m_ + old_m] = -1.0;
    binv_.swap(extended);
    w_.assign(m_, 0.0);
    d_valid_ = false;
}

void Simplex::set_var_bounds(int var, double lo, double hi) {
    lb_[var] = lo;
    ub_[var] = hi;
}

void Simplex::reset_structural_bounds() {
    std::copy(base_lb_.begin(), base_lb_.end(), lb_.begin());
    std::copy(base_ub_.begin(), base_ub_.end(), ub_.begin());
}

void Simplex::snap_nonbasic() {
    for (int j = 0; j < nv_; ++j) {
        switch (state_[j]) {
            case VState::Basic: break;
            case VState::AtLower:
                if (std::isfinite(lb_[j])) {
                    value_[j] = lb_[j];
                } else if (std::isfinite(ub_[j])) {
                    state_[j] = VState::AtUpper;
                    value_[j] = ub_[j];
                } else {
                    state_[j] = VState::Free;
                    value_[j] = 0.0;
                }
                break;
            case VState::AtUpper:
                if (std::isfinite(ub_[j])) {
                    value_[j] = ub_[j];
                } else if (std::isfinite(lb_[j])) {
                    state_[j] = VState::AtLower;
                    value_[j] = lb_[j];
                } else {
                    state_[j] = VState::Free;
                    value_[j] = 0.0;
                }
                break;
            case VState::Free: value_[j] = 0.0; break;
        }
    }
}

void Simplex::recompute_basic_values() {
    snap_nonbasic();
    std::vector<double> rhs(m_, 0.0);
    for (int j = 0; j < ns_; ++j) {
        if (state_[j] == VState::Basic || value_[j] == 0.0) continue;
        for (auto [r, a] : cols_[j]) rhs[r] += a * value_[j];
    }
    for (int j = ns_; j < nv_; ++j) {
        if (state_[j] == VState::Basic || value_[j] == 0.0) continue;
        rhs[j - ns_] -= value_[j];
    }
    std::vector<double> xb(m_, 0.0);
    for (int c = 0; c < m_; ++c) {
        if (rhs[c] == 0.0) continue;
        const double* col = &binv_[static_cast<std::size_t>(c) * m_];
        const double f = rhs[c];
        for (int i = 0; i < m_; ++i) xb[i] -= f * col[i];
    }
    for (int p = 0; p < m_; ++p) value_[basis_[p]] = xb[p];
}

void Simplex::refactorize() {
    // Dense Gauss-Jordan inversion of the basis matrix.
    std::vector<double> a(static_cast<std::size_t>(m_) * m_, 0.0);  // column-major
    for (int p = 0; p < m_; ++p) {
        int v = basis_[p];
        if (v < ns_) {
            for (auto [r, coef] : cols_[v]) a[static_cast<std::size_t>(p) * m_ + r] = coef;
        } else {
            a[static_cast<std::size_t>(p) * m_ + (v - ns_)] = -1.0;
        }
    }
    std::vector<double> inv(static_cast<std::size_t>(m_) * m_, 0.0);
    for (int i = 0; i < m_; ++i) inv[static_cast<std::size_t>(i) * m_ + i] = 1.0;

    for (int k = 0; k < m_; ++k) {
        int piv = -1;
        double best = 0.0;
        for (int i = k; i < m_; ++i) {
            double mag = std::fabs(a[static_cast<std::size_t>(k) * m_ + i]);
            if (mag > best) {
                best = mag;
                piv = i;
            }
        }
        if (piv < 0 || best < 1e-12) throw std::runtime_error("simplex: singular basis");
        if (piv != k) {
            for (int c = 0; c < m_; ++c) {
                std::swap(a[static_cast<std::size_t>(c) * m_ + k], a[static_cast<std::size_t>(c) * m_ + piv]);
                std::swap(inv[static_cast<std::size_t>(c) * m_ + k],
                          inv[static_cast<std::size_t>(c) * m_ + piv]);
            }
        }
        double dk = a[static_cast<std::size_t>(k) * m_ + k];
        for (int c = 0; c < m_; ++c) {
            a[static_cast<std::size_t>(c) * m_ + k] /= dk;
            inv[static_cast<std::size_t>(c) * m_ + k] /= dk;
        }
        for (int i = 0; i < m_; ++i) {
            if (i == k) continue;
            double f = a[static_cast<std::size_t>(k) * m_ + i];
            if (f == 0.0) continue;
            for (int c = 0; c < m_; ++c) {
                a[static_cast<std::size_t>(c) * m_ + i] -= f * a[static_cast<std::size_t>(c) * m_ + k];
                inv[static_cast<std::size_t>(c) * m_ + i] -= f * inv[static_cast<std::size_t>(c) * m_ + k];
            }
        }
    }
    binv_.swap(inv);
    w_.assign(m_, 0.0);
    pivots_since_refactor_ = 0;
    d_valid_ = false;
    recompute_basic_values();
}

int Simplex::count_infeasible() const {
    int n = 0;
    for (int p = 0; p < m_; ++p) {
        int v = basis_[p];
        if (value_[v] < lb_[v] - kFeasTol || value_[v] > ub_[v] + kFeasTol) ++n;
    }
    return n;
}

/// Reduced costs of the composite infeasibility objective (recomputed from
/// scratch every phase-1 iteration; the cost vector changes as basics cross
/// their bounds).
void Simplex::compute_phase1_costs(std::vector<double>& d) const {
    // The composite cost vector is nonzero only on infeasible basics, so the
    // dual computation loops over those few entries.
    std::vector<std::pair<int, double>> cb;
    for (int p = 0; p < m_; ++p) {
        int v = basis_[p];
        if (value_[v] > ub_[v] + kFeasTol)
            cb.push_back({p, 1.0});
        else if (value_[v] < lb_[v] - kFeasTol)
            cb.push_back({p, -1.0});
    }
    d.assign(nv_, 0.0);
    if (cb.empty()) return;
    std::vector<double> y(m_);
    for (int c = 0; c < m_; ++c) {
        const double* col = &binv_[static_cast<std::size_t>(c) * m_];
        double acc = 0.0;
        for (auto [p, s] : cb) acc += s * col[p];
        y[c] = acc;
    }
    for (int j = 0; j < ns_; ++j) {
        if (state_[j] == VState::Basic) continue;
        double acc = 0.0;
        for (auto [r, a] : cols_[j]) acc -= y[r] * a;
        d[j] = acc;
    }
    for (int j = ns_; j < nv_; ++j) {
        if (state_[j] == VState::Basic) continue;
        d[j] = y[j - ns_];
    }
}

/// Full recompute of the maintained phase-2 reduced costs and a devex reset.
void Simplex::refresh_reduced_costs() {
    std::vector<double> cb(m_);
    bool any = false;
    for (int p = 0; p < m_; ++p) {
        cb[p] = cost_[basis_[p]];
        any = any || cb[p] != 0.0;
    }
    std::vector<double> y(m_, 0.0);
    if (any) {
        for (int c = 0; c < m_; ++c) {
            const double* col = &binv_[static_cast<std::size_t>(c) * m_];
            double acc = 0.0;
            for (int p = 0; p < m_; ++p) acc += cb[p] * col[p];
            y[c] = acc;
        }
    }
    d_.assign(nv_, 0.0);
    for (int j = 0; j < ns_; ++j) {
        if (state_[j] == VState::Basic) continue;
        double acc = cost_[j];
        for (auto [r, a] : cols_[j]) acc -= y[r] * a;
        d_[j] = acc;
    }
    for (int j = ns_; j < nv_; ++j) {
        if (state_[j] == VState::Basic) continue;
        d_[j] = cost_[j] + y[j - ns_];
    }
    devex_.assign(nv_, 1.0);
    d_valid_ = true;
}

int Simplex::choose_entering(const std::vector<double>& d, bool devex, int* direction) const {
    int best = -1, best_dir = 0;
    double best_score = 0.0;
    for (int j = 0; j < nv_; ++j) {
        VState st = state_[j];
        if (st == VState::Basic) continue;
        if (ub_[j] - lb_[j] < 1e-12) continue;  // fixed, cannot move
        double dj = d[j];
        int dir = 0;
        if (st == VState::AtLower) {
            if (dj < -kCostTol) dir = 1;
        } else if (st == VState::AtUpper) {
            if (dj > kCostTol) dir = -1;
        } else {  // Free
            if (dj < -kCostTol)
                dir = 1;
            else if (dj > kCostTol)
                dir = -1;
        }
        if (dir == 0) continue;
        if (bland_) {
            *direction = dir;
            return j;
        }
        double score = devex ? dj * dj / devex_[j] : std::fabs(dj);
        if (score > best_score) {
            best_score = score;
            best = j;
            best_dir = dir;
        }
    }
    *direction = best_dir;
    return best;
}

void Simplex::ftran(int j) {
    std::fill(w_.begin(), w_.end(), 0.0);
    if (j < ns_) {
        for (auto [r, a] : cols_[j]) {
            const double* col = &binv_[static_cast<std::size_t>(r) * m_];
            for (int i = 0; i < m_; ++i) w_[i] += a * col[i];
        }
    } else {
        const double* col = &binv_[static_cast<std::size_t>(j - ns_) * m_];
        for (int i = 0; i < m_; ++i) w_[i] = -col[i];
    }
}

/// alpha[j] = (row r of B^-1 A) entry for every variable j.
void Simplex::pivot_row(int r, std::vector<double>& alpha) const {
    std::vector<double> rho(m_);
    for (int c = 0; c < m_; ++c) rho[c] = binv_[static_cast<std::size_t>(c) * m_ + r];
    alpha.assign(nv_, 0.0);
    for (int j = 0; j < ns_; ++j) {
        double acc = 0.0;
        for (auto [rr, a] : cols_[j]) acc += rho[rr] * a;
        alpha[j] = acc;
    }
    for (int j = ns_; j < nv_; ++j) alpha[j] = -rho[j - ns_];
}

LpStatus Simplex::optimize() {
    recompute_basic_values();
    const long budget = 20000 + 200L * m_;
    long iters = 0;
    int optimal_rechecks = 0;
    std::vector<double> phase1_d;
    std::vector<double> alpha;

    while (true) {
        if (++iters > budget) return LpStatus::IterationLimit;
        ++iters_total_;

        bool phase1 = count_infeasible() > 0;
        const std::vector<double>* dptr;
        if (phase1) {
            compute_phase1_costs(phase1_d);
            dptr = &phase1_d;
            d_valid_ = false;
        } else {
            if (!d_valid_) refresh_reduced_costs();
            dptr = &d_;
        }

        int dir = 0;
        int j = choose_entering(*dptr, !phase1, &dir);
        if (j < 0) {
            if (phase1) {
                // No improving direction left: locally (hence globally)
                // minimal infeasibility that is still positive.
                if (pivots_since_refactor_ > 0) {
                    refactorize();
                    if (count_infeasible() > 0) return LpStatus::Infeasible;
                    continue;
                }
                return LpStatus::Infeasible;
            }
            // Guard against drift before declaring optimality.
            if (optimal_rechecks++ < 2 && pivots_since_refactor_ > 0) {
                refactorize();
                continue;
            }
            return LpStatus::Optimal;
        }

        ftran(j);

        // Ratio test: how far can the entering variable move?
        double own_limit = kInfinity;
        if (std::isfinite(lb_[j]) && std::isfinite(ub_[j])) own_limit = ub_[j] - lb_[j];
        double best_t = own_limit;
        int leave_pos = -1;
        double leave_target = 0.0;
        double best_pivot_mag = 0.0;

        if (phase1 && !bland_) {
            // Long-step phase 1: keep moving past bound crossings while the
            // total infeasibility still decreases. Every crossing in the
            // movement direction raises the slope by |rate|; stop at the
            // crossing where it turns nonnegative and pivot there.
            struct Event {
                double t;
                int pos;      // -1 for the entering variable's own range
                double target;
                double mag;
            };
            std::vector<Event> events;
            double slope = 0.0;
            for (int p = 0; p < m_; ++p) {
                double wp = w_[p];
                if (std::fabs(wp) < kPivotMin) continue;
                double rate = -dir * wp;
                int v = basis_[p];
                double val = value_[v], lo = lb_[v], hi = ub_[v];
                if (val < lo - kFeasTol)
                    slope -= rate;  // contribution of (lo - x)' = -rate
                else if (val > hi + kFeasTol)
                    slope += rate;
                if (rate > kRatioZero) {
                    if (std::isfinite(lo) && val < lo - kFeasTol)
                        events.push_back({(lo - val) / rate, p, lo, std::fabs(wp)});
                    if (std::isfinite(hi) && val <= hi + kFeasTol)
                        events.push_back({std::max(0.0, (hi - val) / rate), p, hi, std::fabs(wp)});
                } else if (rate < -kRatioZero) {
                    if (std::isfinite(hi) && val > hi + kFeasTol)
                        events.push_back({(hi - val) / rate, p, hi, std::fabs(wp)});
                    if (std::isfinite(lo) && val >= lo - kFeasTol)
                        events.push_back({std::max(0.0, (lo - val) / rate), p, lo, std::fabs(wp)});
                }
            }
            std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
                if (a.t != b.t) return a.t < b.t;
                return a.mag > b.mag;
            });
            std::size_t stop = 0;
            for (; stop < events.size(); ++stop) {
                if (std::isfinite(own_limit) && own_limit < events[stop].t - 1e-12) break;
                slope += std::fabs(-dir * w_[events[stop].pos]);
                if (slope >= -1e-9) break;
            }
            if (stop < events.size() &&
                !(std::isfinite(own_limit) && own_limit < events[stop].t - 1e-12)) {
                best_t = events[stop].t;
                leave_pos = events[stop].pos;
                leave_target = events[stop].target;
                best_pivot_mag = events[stop].mag;
            } else if (std::isfinite(own_limit)) {
                best_t = own_limit;  // bound flip
                leave_pos = -1;
            } else {
                throw std::logic_error("simplex: unbounded infeasibility descent");
            }
        } else
        for (int p = 0; p < m_; ++p) {
            double wp = w_[p];
            if (std::fabs(wp) < kPivotMin) continue;
            double rate = -dir * wp;  // basic value change per unit step
            int v = basis_[p];
            double val = value_[v], lo = lb_[v], hi = ub_[v];
            double t, target;
            if (phase1 && val < lo - kFeasTol) {
                if (rate <= kRatioZero) continue;
                t = (lo - val) / rate;
                target = lo;
            } else if (phase1 && val > hi + kFeasTol) {
                if (rate >= -kRatioZero) continue;
                t = (hi - val) / rate;
                target = hi;
            } else if (rate > kRatioZero) {
                if (!std::isfinite(hi)) continue;
                t = (hi - val) / rate;
                target = hi;
            } else if (rate < -kRatioZero) {
                if (!std::isfinite(lo)) continue;
                t = (lo - val) / rate;
                target = lo;
            } else {
                continue;
            }
            if (t < 0.0) t = 0.0;
            bool take;
            if (t < best_t - 1e-10) {
                take = true;
            } else if (t > best_t + 1e-10) {
                take = false;
            } else if (leave_pos < 0) {
                take = true;  // prefer a pivot over a bound flip on ties
            } else if (bland_) {
                take = basis_[p] < basis_[leave_pos];
            } else {
                take = std::fabs(wp) > best_pivot_mag;
            }
            if (take) {
                best_t = t;
                leave_pos = p;
                leave_target = target;
                best_pivot_mag = std::fabs(wp);
            }
        }

        if (!std::isfinite(best_t)) {
            if (phase1) throw std::logic_error("simplex: unbounded infeasibility descent");
            return LpStatus::Unbounded;
        }

        if (best_t < 1e-9) {
            if (++degenerate_streak_ >= kBlandTrigger) bland_ = true;
        } else {
            degenerate_streak_ = 0;
            bland_ = false;
        }

        if (leave_pos < 0) {
            // The entering variable hits its own opposite bound: bound flip
            // (reduced costs are unaffected).
            for (int p = 0; p < m_; ++p) {
                if (w_[p] != 0.0) value_[basis_[p]] -= dir * best_t * w_[p];
            }
            if (dir > 0) {
                state_[j] = VState::AtUpper;
                value_[j] = ub_[j];
            } else {
                state_[j] = VState::AtLower;
                value_[j] = lb_[j];
            }
            continue;
        }

        if (best_pivot_mag < kPivotMin) {
            refactorize();
            continue;
        }

        // Pivot: update values, basis, the inverse, and the maintained
        // reduced costs / devex weights.
        for (int p = 0; p < m_; ++p) {
            if (w_[p] != 0.0) value_[basis_[p]] -= dir * best_t * w_[p];
        }
        value_[j] += dir * best_t;

        const double piv = w_[leave_pos];
        const bool maintain = !phase1 && d_valid_;
        if (maintain) {
            pivot_row(leave_pos, alpha);
            const double dq = d_[j];
            const double ratio = dq / piv;
            const double gamma_q = std::max(devex_[j], 1.0);
            for (int jj = 0; jj < nv_; ++jj) {
                if (state_[jj] == VState::Basic || alpha[jj] == 0.0) continue;
                d_[jj] -= ratio * alpha[jj];
                double cand = (alpha[jj] / piv) * (alpha[jj] / piv) * gamma_q;
                if (cand > devex_[jj]) devex_[jj] = cand;
            }
            int lv = basis_[leave_pos];
            d_[lv] = -ratio;  // alpha of the leaving basic is 1
            devex_[lv] = std::max(gamma_q / (piv * piv), 1.0);
            d_[j] = 0.0;
        }

        int lv = basis_[leave_pos];
        value_[lv] = leave_target;
        state_[lv] = (leave_target == lb_[lv]) ? VState::AtLower : VState::AtUpper;
        pos_in_basis_[lv] = -1;
        basis_[leave_pos] = j;
        state_[j] = VState::Basic;
        pos_in_basis_[j] = leave_pos;

        for (int c = 0; c < m_; ++c) {
            double* col = &binv_[static_cast<std::size_t>(c) * m_];
            double pr = col[leave_pos] / piv;
            if (pr == 0.0) continue;
            for (int i = 0; i < m_; ++i) col[i] -= w_[i] * pr;
            col[leave_pos] = pr;
        }

        if (++pivots_since_refactor_ >= kRefactorInterval) refactorize();
    }
}

double Simplex::objective() const {
    double acc = 0.0;
    for (int j = 0; j < ns_; ++j) acc += cost_[j] * value_[j];
    return -acc;
}

std::vector<double> Simplex::structural_values() const {
    return std::vector<double>(value_.begin(), value_.begin() + ns_);
}

}  // namespace chordless::milp::detail
