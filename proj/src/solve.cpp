#include "chordless/solve.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>

#include "chordless/isometric.hpp"
#include "chordless/oracle.hpp"

namespace chordless {

std::string to_string(WarmStart w) {
    switch (w) {
        case WarmStart::None: return "none";
        case WarmStart::Lisc: return "lisc";
        case WarmStart::Heuristic: return "heuristic";
    }
    return "?";
}

WarmStart warm_start_from_string(const std::string& s) {
    if (s == "none") return WarmStart::None;
    if (s == "lisc") return WarmStart::Lisc;
    if (s == "heuristic") return WarmStart::Heuristic;
    throw std::invalid_argument("unknown warm start '" + s + "'");
}

namespace {

FormulationHandles build(const Graph& g, ModelKind kind) {
    switch (kind) {
        case ModelKind::LIC: return build_lic(g);
        case ModelKind::LIC2: return build_lic2(g);
        case ModelKind::IlpCut: return build_ilp_cut(g);
        case ModelKind::Cec: return build_cec(g);
        case ModelKind::Ccp: return build_ccp(g);
    }
    throw std::logic_error("bad model kind");
}

bool lic_family(ModelKind k) { return k == ModelKind::LIC || k == ModelKind::LIC2; }

}  // namespace

SolveReport run_solve(const Graph& g, const SolveSpec& spec) {
    if (lic_family(spec.model) != (spec.strategy == Strategy::Direct))
        throw UsageError("strategy '" + to_string(spec.strategy) + "' does not apply to model '" +
                         to_string(spec.model) + "'");
    if (spec.clique_cuts && spec.model != ModelKind::Ccp)
        throw UsageError("--clique-cuts applies to the ccp model only");

    SolveReport report;
    const auto t0 = std::chrono::steady_clock::now();

    if (spec.warm_bound_override) {
        report.warm_bound = *spec.warm_bound_override;
    } else if (spec.warm == WarmStart::Lisc) {
        report.warm_bound = longest_isometric_cycle(g).length;
        report.warm_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    } else if (spec.warm == WarmStart::Heuristic) {
        report.warm_bound = multi_start_heuristic(g).length;
        report.warm_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }

    FormulationHandles h = build(g, spec.model);
    if (spec.min_length > 0) add_min_length_row(h, spec.min_length);
    if (spec.clique_cuts) add_clique_cuts(h, g, maximal_cliques(g, 3));

    milp::SolveConfig cfg;
    cfg.time_limit = spec.time_limit;
    cfg.node_limit = spec.node_limit;
    cfg.cutoff_as_rows = spec.explicit_cutoff_rows;
    if (report.warm_bound >= 1) {
        if (spec.explicit_cutoff_rows)
            warm_start_bound(h, report.warm_bound);
        else
            cfg.objective_cutoff = report.warm_bound;
    }

    if (spec.export_lp_path) {
        std::ofstream lp(*spec.export_lp_path);
        if (!lp) throw std::runtime_error("cannot write " + *spec.export_lp_path);
        h.model.write_lp(lp);
    }

    CutPoolState state;
    state.min_record_length = std::max(spec.model == ModelKind::Ccp ? 4 : 3, spec.min_length);
    SeparationOptions sep_opts;
    sep_opts.ccp_strengthened = spec.ccp_strengthened;
    sep_opts.cut_log = spec.cut_log;

    milp::SolveOutcome outcome;
    CycleResult& res = report.result;

    if (spec.strategy == Strategy::Direct) {
        cfg.integral_objective = true;  // one optimum is enough here
        outcome = milp::branch_and_bound(h.model, cfg);
        if (outcome.has_incumbent) {
            res = extract_cycle(g, h, outcome.incumbent);
        } else {
            res.length = 0;
            res.outcome = CycleOutcome::NoCycle;
        }
    } else {
        auto handler = spec.strategy == Strategy::Soft ? make_soft_handler(g, h, state, sep_opts)
                                                       : make_tough_handler(g, h, state, sep_opts);
        if (spec.strategy == Strategy::Soft && spec.model != ModelKind::Ccp &&
            spec.min_length <= 0 && !(spec.explicit_cutoff_rows && report.warm_bound >= 1)) {
            // The all-zero point is feasible here; seeding it keeps the engine
            // terminating with a proper incumbent even when every optimal
            // cycle was cut while enumerating alternates.
            cfg.initial_solution = std::vector<double>(h.model.var_count(), 0.0);
        }
        outcome = milp::branch_and_bound(h.model, handler, cfg);
        res.length = state.longest_induced_cycle;
        res.cycles = state.best_cycles;
        std::sort(res.cycles.begin(), res.cycles.end());
        if (outcome.status == milp::SolveStatus::TimeLimit) {
            res.outcome = CycleOutcome::Unsolved;
        } else if (spec.model == ModelKind::Ccp && res.length < 4) {
            res.outcome = CycleOutcome::NoHole;
        } else if (res.length == 0) {
            res.outcome = CycleOutcome::NoCycle;
        } else {
            res.outcome = CycleOutcome::FoundCycle;
        }
    }

    res.status = outcome.status;
    res.best_bound = outcome.best_bound;
    res.nodes = outcome.nodes;
    res.cuts = outcome.lazy_cuts;
    res.seconds = outcome.seconds;
    return report;
}

}  // namespace chordless
