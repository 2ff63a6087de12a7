#include <CLI11.hpp>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "chordless/instances.hpp"
#include "chordless/isometric.hpp"
#include "chordless/oracle.hpp"
#include "chordless/solve.hpp"

namespace fs = std::filesystem;
using namespace chordless;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitTimeout = 3;

std::string data_dir() {
    const char* env = std::getenv("CHORDLESS_DATA_DIR");
    return env ? env : "";
}

/// Resolve an instance argument: a path as given, or a name under the data
/// directory (with a few common extensions).
std::string resolve_instance(const std::string& arg) {
    if (fs::exists(arg)) return arg;
    std::string dir = data_dir();
    if (!dir.empty()) {
        for (const char* ext : {"", ".txt", ".col", ".edges", ".dimacs", ".mtx.rnd"}) {
            fs::path p = fs::path(dir) / (arg + ext);
            if (fs::exists(p)) return p.string();
        }
    }
    return arg;  // let the loader report the error
}

std::string cycle_to_string(const std::vector<int>& cycle) {
    std::ostringstream out;
    for (std::size_t i = 0; i < cycle.size(); ++i) out << (i ? " " : "") << cycle[i];
    return out.str();
}

std::string csv_row(const std::string& instance, const SolveSpec& spec, const SolveReport& rep,
                    std::optional<bool> connected = std::nullopt) {
    std::ostringstream out;
    out << instance << ',' << to_string(spec.model) << ',' << to_string(spec.strategy) << ','
        << to_string(spec.warm) << ',' << rep.result.length << ',' << to_string(rep.result.status)
        << ',' << rep.result.nodes << ',' << rep.result.cuts << ',' << std::fixed
        << std::setprecision(3) << rep.result.seconds;
    if (connected) out << ',' << (*connected ? 1 : 0);
    return out.str();
}

struct SolveArgs {
    std::string instance;
    std::string model = "cec";
    std::string strategy = "tough";
    std::string warm = "none";
    int min_length = 0;
    double time_limit = 3600.0;
    bool clique_cuts = false;
    bool ccp_strengthened = false;
    bool explicit_rows = false;
    bool verbose = false;
    std::string output = "text";
    std::string export_lp;
    int gen_n = 0;
    double gen_density = 0.0;
    std::uint64_t gen_seed = 1;
};

int run_solve_command(const SolveArgs& a) {
    Graph g;
    std::string name;
    if (a.gen_n > 0) {
        g = gen_random(a.gen_n, a.gen_density, a.gen_seed);
        std::ostringstream nm;
        nm << "random_n" << a.gen_n << "_d" << a.gen_density << "_s" << a.gen_seed;
        name = nm.str();
    } else if (!a.instance.empty()) {
        g = load_graph_file(resolve_instance(a.instance));
        name = fs::path(a.instance).stem().string();
    } else {
        std::cerr << "error: no instance given (path or --gen-n)\n";
        return kExitUsage;
    }

    SolveSpec spec;
    spec.model = model_kind_from_string(a.model);
    spec.strategy = strategy_from_string(a.strategy);
    spec.warm = warm_start_from_string(a.warm);
    spec.min_length = a.min_length;
    spec.time_limit = a.time_limit;
    spec.clique_cuts = a.clique_cuts;
    spec.ccp_strengthened = a.ccp_strengthened;
    spec.explicit_cutoff_rows = a.explicit_rows;
    if (a.verbose) spec.cut_log = &std::cerr;
    if (!a.export_lp.empty()) spec.export_lp_path = a.export_lp;

    SolveReport rep = run_solve(g, spec);
    const CycleResult& res = rep.result;

    if (a.output == "csv") {
        std::cout << csv_header() << "\n" << csv_row(name, spec, rep) << "\n";
    } else {
        std::cout << "instance: " << name << " (n=" << g.vertex_count() << ", m=" << g.edge_count()
                  << ")\n";
        if (g.dropped_inputs())
            std::cout << "warning: dropped " << g.dropped_inputs() << " duplicate/self-loop inputs\n";
        std::cout << "model: " << to_string(spec.model) << "  strategy: " << to_string(spec.strategy)
                  << "  warm: " << to_string(spec.warm) << "\n";
        if (spec.warm != WarmStart::None)
            std::cout << "warm bound: " << rep.warm_bound << " (computed in " << std::fixed
                      << std::setprecision(3) << rep.warm_seconds << "s)\n";
        std::cout << "result: " << to_string(res.outcome) << "\n";
        std::cout << "length: " << res.length << "\n";
        if (!res.cycles.empty()) {
            std::cout << "cycle: " << cycle_to_string(res.cycles.front()) << "\n";
            if (res.cycles.size() > 1) {
                std::cout << "optimal cycles found: " << res.cycles.size() << "\n";
                for (const auto& c : res.cycles) std::cout << "  " << cycle_to_string(c) << "\n";
            }
        }
        std::cout << "status: " << to_string(res.status) << "\n";
        if (res.status == milp::SolveStatus::TimeLimit)
            std::cout << "best bound: " << res.best_bound << "\n";
        std::cout << "nodes: " << res.nodes << "  cuts: " << res.cuts << "  time: " << std::fixed
                  << std::setprecision(3) << res.seconds << "s\n";
    }
    return res.status == milp::SolveStatus::TimeLimit ? kExitTimeout : 0;
}

struct BenchArgs {
    std::string suite = "random";
    std::string mg_dir;
    std::vector<int> n_list{50, 60, 70, 80, 90, 100};
    std::vector<double> density_list{0.1, 0.3};
    int seeds = 10;
    std::vector<std::string> configs{"lic:direct", "lic2:direct", "ilpcut:soft",
                                     "ilpcut:tough", "cec:soft",   "cec:tough"};
    std::string warm = "none";
    double time_limit = 3600.0;
    std::string csv_path;
    int jobs = 1;
};

struct BenchCell {
    double seconds_sum = 0.0;
    int runs = 0;
    int timeouts = 0;
};

int run_bench_command(const BenchArgs& a) {
    std::vector<std::pair<std::string, Graph>> suite;
    if (a.suite == "rwc") {
        for (const auto& rec : rwc_catalog()) {
            std::string path = resolve_instance(rec.name);
            if (!fs::exists(path)) {
                std::cerr << "skip " << rec.name << " (file not found; set CHORDLESS_DATA_DIR)\n";
                continue;
            }
            suite.push_back({rec.name, load_graph_file(path)});
        }
    } else if (a.suite == "mg") {
        if (a.mg_dir.empty() || !fs::is_directory(a.mg_dir)) {
            std::cerr << "error: --dir must name the MG instance directory\n";
            return kExitUsage;
        }
        std::vector<std::string> files;
        for (const auto& e : fs::directory_iterator(a.mg_dir))
            if (e.is_regular_file()) files.push_back(e.path().string());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) suite.push_back({fs::path(f).stem().string(), load_graph_file(f)});
    } else if (a.suite == "random") {
        for (int n : a.n_list)
            for (double d : a.density_list)
                for (int s = 1; s <= a.seeds; ++s) {
                    std::ostringstream nm;
                    nm << "random_n" << n << "_d" << d << "_s" << s;
                    suite.push_back({nm.str(), gen_random(n, d, static_cast<std::uint64_t>(s))});
                }
    } else {
        std::cerr << "error: unknown suite '" << a.suite << "'\n";
        return kExitUsage;
    }

    std::ostream* csv = &std::cout;
    std::ofstream csv_file;
    if (!a.csv_path.empty()) {
        csv_file.open(a.csv_path);
        if (!csv_file) {
            std::cerr << "error: cannot write " << a.csv_path << "\n";
            return 1;
        }
        csv = &csv_file;
    }
    *csv << csv_header(true) << "\n";

    // MG reporting buckets by edge count, as in the published tables.
    const std::vector<std::pair<int, int>> mg_buckets = {{1, 49},    {50, 74},   {75, 99},
                                                         {100, 124}, {125, 149}, {150, 199},
                                                         {200, 629}};

    struct Job {
        const std::string* name;
        const Graph* graph;
        SolveSpec spec;
        std::string config;
        std::string group;
        bool connected;
    };
    std::vector<Job> jobs;
    for (const auto& [name, g] : suite) {
        bool connected = is_connected(g);
        std::string group = name;
        if (a.suite == "mg") {
            for (auto [lo, hi] : mg_buckets)
                if (g.edge_count() >= lo && g.edge_count() <= hi)
                    group = std::to_string(lo) + "-" + std::to_string(hi);
        } else if (a.suite == "random") {
            group = "n" + std::to_string(g.vertex_count());
        }
        for (const auto& cfgstr : a.configs) {
            auto colon = cfgstr.find(':');
            if (colon == std::string::npos) {
                std::cerr << "error: config '" << cfgstr << "' must look like model:strategy\n";
                return kExitUsage;
            }
            Job job;
            job.name = &name;
            job.graph = &g;
            job.spec.model = model_kind_from_string(cfgstr.substr(0, colon));
            job.spec.strategy = strategy_from_string(cfgstr.substr(colon + 1));
            job.spec.warm = warm_start_from_string(a.warm);
            job.spec.time_limit = a.time_limit;
            job.config = cfgstr;
            job.group = group;
            job.connected = connected;
            jobs.push_back(std::move(job));
        }
    }

    // Each solve is single-threaded; --jobs only spreads independent runs.
    // Results land in a slot per job, so the CSV order is the same for any
    // worker count.
    std::vector<SolveReport> results(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            results[i] = run_solve(*jobs[i].graph, jobs[i].spec);
        }
    };
    int nthreads = std::max(1, std::min<int>(a.jobs, static_cast<int>(jobs.size())));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::map<std::string, std::map<std::string, BenchCell>> table;  // group -> config -> cell
    int mismatches = 0;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const Job& job = jobs[i];
        const SolveReport& rep = results[i];
        *csv << csv_row(*job.name, job.spec, rep, job.connected) << "\n";

        auto& cell = table[job.group][job.config];
        cell.seconds_sum += rep.result.seconds;
        cell.runs += 1;
        if (rep.result.status == milp::SolveStatus::TimeLimit) cell.timeouts += 1;

        if (auto rec = catalog_lookup(*job.name);
            rec && rec->known_opt && rep.result.status != milp::SolveStatus::TimeLimit) {
            int expect = *rec->known_opt;
            bool rel_ok = job.spec.model == ModelKind::Ccp && expect < 4
                              ? rep.result.outcome == CycleOutcome::NoHole
                              : rep.result.length == expect;
            if (!rel_ok) {
                ++mismatches;
                std::cerr << "MISMATCH " << *job.name << " " << job.config << ": got "
                          << rep.result.length << ", published " << expect << "\n";
            }
        }
    }

    // Mean seconds per group and configuration.
    std::cerr << "\n" << std::left << std::setw(14) << "group";
    for (const auto& c : a.configs) std::cerr << std::setw(16) << c;
    std::cerr << "\n";
    for (const auto& [group, cells] : table) {
        std::cerr << std::left << std::setw(14) << group;
        for (const auto& c : a.configs) {
            auto it = cells.find(c);
            std::ostringstream v;
            if (it != cells.end() && it->second.runs) {
                v << std::fixed << std::setprecision(2)
                  << it->second.seconds_sum / it->second.runs;
                if (it->second.timeouts) v << " (" << it->second.timeouts << " TL)";
            } else {
                v << "-";
            }
            std::cerr << std::setw(16) << v.str();
        }
        std::cerr << "\n";
    }
    if (mismatches) {
        std::cerr << mismatches << " runs disagreed with the published optima\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solvers for the longest induced (chordless) cycle problem"};
    app.require_subcommand(1);

    SolveArgs sa;
    auto* solve_cmd = app.add_subcommand("solve", "solve one instance");
    solve_cmd->add_option("instance", sa.instance, "instance file (edge list or DIMACS)");
    solve_cmd->add_option("--model", sa.model, "lic|lic2|ilpcut|cec|ccp")->capture_default_str();
    solve_cmd->add_option("--strategy", sa.strategy, "direct|soft|tough (direct only for lic/lic2)")
        ->capture_default_str();
    solve_cmd->add_option("--warm-start", sa.warm, "none|lisc|heuristic")->capture_default_str();
    solve_cmd->add_option("--min-length", sa.min_length, "require cycles of at least this length");
    solve_cmd->add_option("--time-limit", sa.time_limit, "seconds")->capture_default_str();
    solve_cmd->add_flag("--clique-cuts", sa.clique_cuts, "static maximal-clique cuts (ccp)");
    solve_cmd->add_flag("--ccp-strengthened", sa.ccp_strengthened,
                        "also emit strengthened crossing-edge cuts (ccp)");
    solve_cmd->add_flag("--explicit-cutoff-rows", sa.explicit_rows,
                        "warm start / tough cutoffs as explicit rows");
    solve_cmd->add_flag("--verbose", sa.verbose, "log emitted cuts");
    solve_cmd->add_option("--output", sa.output, "text|csv")->capture_default_str();
    solve_cmd->add_option("--export-lp", sa.export_lp, "dump the built model in LP format");
    solve_cmd->add_option("--gen-n", sa.gen_n, "solve a generated instance with n vertices");
    solve_cmd->add_option("--gen-density", sa.gen_density, "generator density");
    solve_cmd->add_option("--gen-seed,--seed", sa.gen_seed, "generator seed");

    BenchArgs ba;
    auto* bench_cmd = app.add_subcommand("bench", "run a benchmark suite");
    bench_cmd->add_option("--suite", ba.suite, "rwc|mg|random")->capture_default_str();
    bench_cmd->add_option("--dir", ba.mg_dir, "MG instance directory");
    bench_cmd->add_option("--n-list", ba.n_list, "random suite sizes");
    bench_cmd->add_option("--density-list", ba.density_list, "random suite densities");
    bench_cmd->add_option("--seeds", ba.seeds, "random graphs per (n, density)");
    bench_cmd->add_option("--configs", ba.configs, "model:strategy pairs to run");
    bench_cmd->add_option("--warm", ba.warm, "none|lisc|heuristic")->capture_default_str();
    bench_cmd->add_option("--time-limit", ba.time_limit, "seconds per solve")->capture_default_str();
    bench_cmd->add_option("--csv", ba.csv_path, "write rows to this file instead of stdout");
    bench_cmd->add_option("--jobs", ba.jobs, "parallel bench runs (each solve stays single-threaded)")
        ->capture_default_str();

    std::string oracle_path;
    int oracle_limit = 16;
    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive ground truth");
    oracle_cmd->add_option("instance", oracle_path)->required();
    oracle_cmd->add_option("--limit-n", oracle_limit, "refuse larger graphs")->capture_default_str();

    std::string iso_path;
    bool iso_fast = false;
    bool iso_witness = false;
    auto* iso_cmd = app.add_subcommand("isometric", "longest isometric cycle lower bound");
    iso_cmd->add_option("instance", iso_path)->required();
    iso_cmd->add_flag("--fast", iso_fast, "scan k downward, stop at the first success");
    iso_cmd->add_flag("--witness", iso_witness, "print the certifying pair-graph witness");

    int gen_n = 10;
    double gen_d = 0.3;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    auto* gen_cmd = app.add_subcommand("gen", "write a random instance");
    gen_cmd->add_option("-n,--n", gen_n, "vertices")->capture_default_str();
    gen_cmd->add_option("-d,--density", gen_d, "edge probability")->capture_default_str();
    gen_cmd->add_option("--seed", gen_seed, "seed")->capture_default_str();
    gen_cmd->add_option("-o,--output", gen_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return run_solve_command(sa);
        if (bench_cmd->parsed()) return run_bench_command(ba);
        if (oracle_cmd->parsed()) {
            Graph g = load_graph_file(resolve_instance(oracle_path));
            auto res = brute_force_longest_induced_cycle(g, oracle_limit);
            std::cout << "length: " << res.length << "\n";
            std::cout << "optimal cycles: " << res.cycles.size() << "\n";
            for (const auto& c : res.cycles) std::cout << "  " << cycle_to_string(c) << "\n";
            return 0;
        }
        if (iso_cmd->parsed()) {
            Graph g = load_graph_file(resolve_instance(iso_path));
            auto res = longest_isometric_cycle(g, iso_fast);
            std::cout << res.length << "\n";
            if (iso_witness && res.witness) {
                auto [a, b] = *res.witness;
                std::cout << "witness: (" << a.first << "," << a.second << ") -> (" << b.first
                          << "," << b.second << ")\n";
            }
            return 0;
        }
        if (gen_cmd->parsed()) {
            Graph g = gen_random(gen_n, gen_d, gen_seed);
            std::string text = write_edge_list(g);
            if (gen_out.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(gen_out);
                if (!out) {
                    std::cerr << "error: cannot write " << gen_out << "\n";
                    return 1;
                }
                out << text;
            }
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
