// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria that need externally fetched instance files are skipped
// (and say so) when the files are absent.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chordless/instances.hpp"
#include "chordless/isometric.hpp"
#include "chordless/oracle.hpp"
#include "chordless/solve.hpp"

using namespace chordless;
namespace fs = std::filesystem;

namespace {

struct Config {
    ModelKind model;
    Strategy strategy;
    std::string name() const { return to_string(model) + "-" + to_string(strategy); }
};

const std::vector<Config> kConfigs = {
    {ModelKind::LIC, Strategy::Direct},   {ModelKind::LIC2, Strategy::Direct},
    {ModelKind::IlpCut, Strategy::Soft},  {ModelKind::IlpCut, Strategy::Tough},
    {ModelKind::Cec, Strategy::Soft},     {ModelKind::Cec, Strategy::Tough},
};

struct SuiteGraph {
    Graph graph;
    int n;
    double density;
    std::uint64_t seed;
    int oracle_length = 0;
};

struct RunRecord {
    int length = 0;
    milp::SolveStatus status = milp::SolveStatus::Infeasible;
    long nodes = 0;
    long cuts = 0;
};

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("CRITERION %2d: %s  %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

void report_skip(int criterion, const std::string& detail) {
    std::printf("CRITERION %2d: SKIP  %s\n", criterion, detail.c_str());
    std::fflush(stdout);
}

RunRecord run_config(const Graph& g, const Config& cfg, double time_limit = 600.0) {
    SolveSpec spec;
    spec.model = cfg.model;
    spec.strategy = cfg.strategy;
    spec.time_limit = time_limit;
    auto rep = run_solve(g, spec);
    return {rep.result.length, rep.result.status, rep.result.nodes, rep.result.cuts};
}

std::vector<SuiteGraph> make_suite() {
    const double densities[3] = {0.2, 0.3, 0.5};
    std::vector<SuiteGraph> suite;
    suite.reserve(200);
    for (int t = 0; t < 200; ++t) {
        SuiteGraph sg;
        sg.n = 5 + t % 10;
        sg.density = densities[t % 3];
        sg.seed = 1000 + t;
        sg.graph = gen_random(sg.n, sg.density, sg.seed);
        sg.oracle_length = brute_force_longest_induced_cycle(sg.graph).length;
        suite.push_back(std::move(sg));
    }
    return suite;
}

std::string instance_path(const std::string& name) {
    const char* env = std::getenv("CHORDLESS_DATA_DIR");
    if (!env) return {};
    for (const char* ext : {"", ".txt", ".col", ".edges", ".dimacs", ".mtx.rnd"}) {
        fs::path p = fs::path(env) / (name + ext);
        if (fs::exists(p)) return p.string();
    }
    return {};
}

Graph make_forest() {
    return Graph(9, {{1, 2}, {2, 3}, {3, 4}, {2, 5}, {6, 7}, {7, 8}});
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    auto since_start = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    std::fprintf(stderr, "building the 200-graph suite and oracle values...\n");
    auto suite = make_suite();

    // ---- Criteria 1, 6, 9: every configuration vs the oracle, run twice ----
    std::vector<std::vector<RunRecord>> first(kConfigs.size()), second(kConfigs.size());
    bool c1_ok = true, c6_ok = true, c9_ok = true;
    std::string c1_detail, c6_detail, c9_detail;
    for (std::size_t ci = 0; ci < kConfigs.size(); ++ci) {
        for (std::size_t gi = 0; gi < suite.size(); ++gi) {
            first[ci].push_back(run_config(suite[gi].graph, kConfigs[ci]));
            const RunRecord& r = first[ci].back();
            if (r.length != suite[gi].oracle_length && c1_ok) {
                c1_ok = false;
                std::ostringstream os;
                os << kConfigs[ci].name() << " on n=" << suite[gi].n << " seed=" << suite[gi].seed
                   << " got " << r.length << ", oracle " << suite[gi].oracle_length;
                c1_detail = os.str();
            }
            if (kConfigs[ci].strategy == Strategy::Tough &&
                r.status != milp::SolveStatus::CutoffExhausted && c6_ok) {
                c6_ok = false;
                c6_detail = kConfigs[ci].name() + " did not end cutoff_exhausted";
            }
            if (kConfigs[ci].strategy == Strategy::Soft &&
                r.status != milp::SolveStatus::Optimal && c6_ok) {
                c6_ok = false;
                c6_detail = kConfigs[ci].name() + " did not end optimal";
            }
        }
        std::fprintf(stderr, "  %s: first pass done (%.0fs)\n", kConfigs[ci].name().c_str(),
                     since_start());
    }
    for (std::size_t ci = 0; ci < kConfigs.size(); ++ci) {
        for (std::size_t gi = 0; gi < suite.size(); ++gi) {
            second[ci].push_back(run_config(suite[gi].graph, kConfigs[ci]));
            const RunRecord &a = first[ci][gi], &b = second[ci].back();
            if ((a.nodes != b.nodes || a.cuts != b.cuts || a.length != b.length) && c9_ok) {
                c9_ok = false;
                std::ostringstream os;
                os << kConfigs[ci].name() << " seed=" << suite[gi].seed << " run1 nodes=" << a.nodes
                   << " cuts=" << a.cuts << " run2 nodes=" << b.nodes << " cuts=" << b.cuts;
                c9_detail = os.str();
            }
        }
        std::fprintf(stderr, "  %s: second pass done (%.0fs)\n", kConfigs[ci].name().c_str(),
                     since_start());
    }
    report(1, c1_ok,
           c1_ok ? "200 random graphs x 6 configurations all match the exhaustive oracle"
                 : c1_detail);

    // ---- Criterion 2: hole model on graphs with optimum >= 4 ----
    {
        bool ok = true;
        std::string detail;
        int tested = 0;
        for (const auto& sg : suite) {
            if (sg.oracle_length < 4) continue;
            ++tested;
            for (bool cliques : {false, true}) {
                for (Strategy strat : {Strategy::Soft, Strategy::Tough}) {
                    SolveSpec spec;
                    spec.model = ModelKind::Ccp;
                    spec.strategy = strat;
                    spec.clique_cuts = cliques;
                    spec.time_limit = 600;
                    auto rep = run_solve(sg.graph, spec);
                    if (rep.result.length != sg.oracle_length && ok) {
                        ok = false;
                        std::ostringstream os;
                        os << "ccp-" << to_string(strat) << (cliques ? "+cliques" : "") << " seed="
                           << sg.seed << " got " << rep.result.length << ", oracle "
                           << sg.oracle_length;
                        detail = os.str();
                    }
                }
            }
        }
        std::ostringstream os;
        os << "ccp with/without clique cuts exact on all " << tested << " graphs with optimum >= 4";
        report(2, ok, ok ? os.str() : detail);
        std::fprintf(stderr, "  criterion 2 done (%.0fs)\n", since_start());
    }

    // ---- Criterion 3: structured families ----
    {
        bool ok = true;
        std::string detail;
        auto expect_all = [&](const Graph& g, int want, const std::string& label) {
            for (const auto& cfg : kConfigs) {
                auto r = run_config(g, cfg);
                if (r.length != want) {
                    ok = false;
                    detail = label + " via " + cfg.name() + " gave " + std::to_string(r.length) +
                             ", want " + std::to_string(want);
                    return;
                }
            }
            if (g.vertex_count() >= 4) {
                SolveSpec spec;
                spec.model = ModelKind::Ccp;
                spec.strategy = Strategy::Tough;
                auto rep = run_solve(g, spec);
                int ccp_want = want >= 4 ? want : 0;  // holes only
                if (rep.result.length != ccp_want ||
                    (want < 4 && rep.result.outcome != CycleOutcome::NoHole &&
                     rep.result.outcome != CycleOutcome::NoCycle)) {
                    ok = false;
                    detail = label + " via ccp gave " + std::to_string(rep.result.length);
                }
            }
        };
        std::vector<std::pair<int, int>> empty;
        for (int n = 3; n <= 12 && ok; ++n) {
            std::vector<std::pair<int, int>> e;
            for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
            e.push_back({n, 1});
            expect_all(Graph(n, e), n, "C_" + std::to_string(n));
        }
        for (int n = 3; n <= 7 && ok; ++n) {
            std::vector<std::pair<int, int>> e;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) e.push_back({i, j});
            expect_all(Graph(n, e), 3, "K_" + std::to_string(n));
        }
        if (ok) {
            std::vector<std::pair<int, int>> e;
            for (int i = 1; i <= 2; ++i)
                for (int j = 3; j <= 5; ++j) e.push_back({i, j});
            expect_all(Graph(5, e), 4, "K_{2,3}");
        }
        if (ok) expect_all(make_forest(), 0, "forest");
        report(3, ok, ok ? "cycles, cliques, K_{2,3} and forests exact under every model" : detail);
        std::fprintf(stderr, "  criterion 3 done (%.0fs)\n", since_start());
    }

    // ---- Criterion 4: published optima (needs user-fetched files) ----
    {
        const std::vector<std::string> names = {"karate", "high-tech", "mexican", "sawmill",
                                                "huck",   "sfi",       "dolphins"};
        std::vector<std::pair<std::string, Graph>> present;
        for (const auto& name : names) {
            std::string path = instance_path(name);
            if (!path.empty()) present.push_back({name, load_graph_file(path)});
        }
        if (present.empty()) {
            report_skip(4, "no RWC instance files found (set CHORDLESS_DATA_DIR to test)");
        } else {
            bool ok = true;
            std::string detail;
            for (const auto& [name, g] : present) {
                auto rec = catalog_lookup(name);
                SolveSpec spec;
                spec.model = ModelKind::Cec;
                spec.strategy = Strategy::Tough;
                spec.time_limit = 600;
                auto rep = run_solve(g, spec);
                if (rep.result.status == milp::SolveStatus::TimeLimit ||
                    rep.result.length != rec->known_opt) {
                    ok = false;
                    detail = name + " gave " + std::to_string(rep.result.length) + " (" +
                             to_string(rep.result.status) + "), published " +
                             std::to_string(*rec->known_opt);
                    break;
                }
            }
            report(4, ok,
                   ok ? std::to_string(present.size()) + " RWC instances match the published optima"
                      : detail);
        }
    }

    // ---- Criterion 5: isometric lower bound ----
    {
        bool ok = true;
        std::string detail;
        for (const auto& sg : suite) {
            int lisc = longest_isometric_cycle(sg.graph).length;
            if (lisc > sg.oracle_length) {
                ok = false;
                detail = "LISC " + std::to_string(lisc) + " exceeds optimum " +
                         std::to_string(sg.oracle_length) + " on seed " + std::to_string(sg.seed);
                break;
            }
            if (sg.n <= 10 && lisc != brute_force_longest_isometric_cycle(sg.graph)) {
                ok = false;
                detail = "LISC mismatch with the exhaustive check on seed " +
                         std::to_string(sg.seed);
                break;
            }
        }
        std::string file_note = "; RWC LISC values skipped (files absent)";
        const std::vector<std::pair<std::string, int>> lisc_expect = {
            {"karate", 5}, {"attiro", 9}, {"sanjuansur", 11}};
        int files_checked = 0;
        for (const auto& [name, want] : lisc_expect) {
            std::string path = instance_path(name);
            if (path.empty()) continue;
            ++files_checked;
            int got = longest_isometric_cycle(load_graph_file(path)).length;
            if (got != want) {
                ok = false;
                detail = name + " LISC " + std::to_string(got) + ", published " +
                         std::to_string(want);
            }
        }
        if (files_checked) file_note = "; " + std::to_string(files_checked) + " RWC LISC values";
        report(5, ok,
               ok ? "bound holds on all 200 graphs, exact match with the exhaustive check (n<=10)" +
                        file_note
                  : detail);
        std::fprintf(stderr, "  criterion 5 done (%.0fs)\n", since_start());
    }

    report(6, c6_ok,
           c6_ok ? "tough always ends cutoff_exhausted, soft always ends optimal, lengths exact"
                 : c6_detail);

    // ---- Criterion 7: alternate optima enumeration ----
    {
        bool ok = true;
        std::string detail;
        Graph twoc5(10, {{1, 2},
                         {2, 3},
                         {3, 4},
                         {4, 5},
                         {1, 5},
                         {6, 7},
                         {7, 8},
                         {8, 9},
                         {9, 10},
                         {6, 10}});
        std::vector<std::pair<int, int>> k4e;
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) k4e.push_back({i, j});
        Graph k4(4, k4e);
        for (ModelKind model : {ModelKind::Cec, ModelKind::IlpCut}) {
            SolveSpec spec;
            spec.model = model;
            spec.strategy = Strategy::Soft;
            auto two = run_solve(twoc5, spec);
            auto four = run_solve(k4, spec);
            if (two.result.cycles.size() != 2 || four.result.cycles.size() != 4) {
                ok = false;
                detail = to_string(model) + "-soft found " +
                         std::to_string(two.result.cycles.size()) + " and " +
                         std::to_string(four.result.cycles.size()) + " optima (want 2 and 4)";
            }
            if (ok) {
                auto oracle = brute_force_longest_induced_cycle(k4);
                if (four.result.cycles != oracle.cycles) {
                    ok = false;
                    detail = "enumerated optima differ from the oracle set";
                }
            }
        }
        report(7, ok, ok ? "soft mode reports exactly 2 and 4 distinct optimal cycles" : detail);
    }

    // ---- Criterion 8: warm start monotonicity ----
    {
        bool ok = true;
        std::string detail;
        int improved_or_tied = 0, total = 0, exhausted_ok = 0;
        for (std::size_t gi = 0; gi < suite.size() && total < 50; gi += 2) {
            const auto& sg = suite[gi];
            if (sg.oracle_length < 3) continue;
            ++total;
            SolveSpec plain;
            plain.model = ModelKind::Cec;
            plain.strategy = Strategy::Tough;
            plain.time_limit = 600;
            auto base = run_solve(sg.graph, plain);

            SolveSpec warm = plain;
            warm.warm_bound_override = sg.oracle_length;
            auto boosted = run_solve(sg.graph, warm);
            if (boosted.result.length != sg.oracle_length) {
                ok = false;
                detail = "warm-started solve lost the optimum on seed " + std::to_string(sg.seed);
            }
            if (boosted.result.nodes <= base.result.nodes) ++improved_or_tied;

            SolveSpec over = plain;
            over.warm_bound_override = sg.oracle_length + 1;
            auto none = run_solve(sg.graph, over);
            if (none.result.status == milp::SolveStatus::CutoffExhausted &&
                none.result.length < sg.oracle_length + 1)
                ++exhausted_ok;
        }
        if (ok && improved_or_tied * 5 < total * 4) {
            ok = false;
            detail = "warm start reduced nodes on only " + std::to_string(improved_or_tied) +
                     " of " + std::to_string(total);
        }
        if (ok && exhausted_ok != total) {
            ok = false;
            detail = "bound above the optimum did not exhaust on every graph";
        }
        std::ostringstream os;
        os << "node count never worse on " << improved_or_tied << "/" << total
           << " graphs; optimum+1 exhausts on all";
        report(8, ok, ok ? os.str() : detail);
        std::fprintf(stderr, "  criterion 8 done (%.0fs)\n", since_start());
    }

    report(9, c9_ok,
           c9_ok ? "both passes produced identical node counts, cut counts and lengths" : c9_detail);

    // ---- Criterion 10: desk-scale performance floor ----
    {
        bool ok = true;
        std::string detail;
        double total_seconds = 0.0;
        std::printf("    n  density  seed  length  status            seconds\n");
        for (std::uint64_t seed : {1, 2, 3}) {
            Graph g = gen_random(30, 0.2, seed);
            SolveSpec spec;
            spec.model = ModelKind::Cec;
            spec.strategy = Strategy::Tough;
            spec.time_limit = 300;
            auto rep = run_solve(g, spec);
            total_seconds += rep.result.seconds;
            std::printf("   30      0.2  %4llu  %6d  %-16s  %7.2f\n",
                        static_cast<unsigned long long>(seed), rep.result.length,
                        to_string(rep.result.status).c_str(), rep.result.seconds);
            if (rep.result.status != milp::SolveStatus::CutoffExhausted ||
                rep.result.seconds > 300.0) {
                ok = false;
                detail = "seed " + std::to_string(seed) + " did not finish within five minutes";
            }
        }
        std::ostringstream os;
        os << "three n=30 instances solved to proven optimality, " << total_seconds
           << "s total";
        report(10, ok, ok ? os.str() : detail);
    }

    std::printf("acceptance total: %.0fs, %d failure(s)\n", since_start(), failures);
    return failures == 0 ? 0 : 1;
}
