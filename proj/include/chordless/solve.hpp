#pragma once

#include <optional>
#include <string>

#include "chordless/formulations.hpp"
#include "chordless/separation.hpp"

namespace chordless {

enum class WarmStart { None, Lisc, Heuristic };

std::string to_string(WarmStart w);
WarmStart warm_start_from_string(const std::string& s);

/// Raised for invalid option combinations (maps to the usage exit code).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SolveSpec {
    ModelKind model = ModelKind::Cec;
    Strategy strategy = Strategy::Tough;
    WarmStart warm = WarmStart::None;
    /// Use this lower bound directly instead of computing one (for callers
    /// that already know a bound, e.g. harnesses replaying known optima).
    std::optional<int> warm_bound_override;
    int min_length = 0;
    double time_limit = 3600.0;
    bool clique_cuts = false;
    bool ccp_strengthened = false;
    /// Fidelity mode: warm start and tough cutoffs as explicit rows.
    bool explicit_cutoff_rows = false;
    std::optional<long> node_limit;
    std::ostream* cut_log = nullptr;
    /// Dump the built model (before solving) in LP text format.
    std::optional<std::string> export_lp_path;
};

struct SolveReport {
    CycleResult result;
    /// Lower bound supplied by the warm start (0 when none).
    int warm_bound = 0;
    /// Time spent computing the warm start, reported separately.
    double warm_seconds = 0.0;
};

/// End-to-end solve of one instance: build the requested formulation, wire
/// the cut strategy, run the engine, and map the outcome back to a cycle.
/// Direct solves are only defined for the LIC family, soft/tough only for
/// the lazily separated models (UsageError otherwise).
SolveReport run_solve(const Graph& g, const SolveSpec& spec);

}  // namespace chordless
