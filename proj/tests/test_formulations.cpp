#include <doctest.h>

#include "chordless/formulations.hpp"
#include "chordless/instances.hpp"
#include "chordless/oracle.hpp"
#include "chordless/solve.hpp"
#include "test_graphs.hpp"

using namespace chordless;
using namespace chordless::testing;

namespace {

int solve_length(const Graph& g, ModelKind model, Strategy strategy) {
    SolveSpec spec;
    spec.model = model;
    spec.strategy = strategy;
    return run_solve(g, spec).result.length;
}

}  // namespace

TEST_CASE("model shapes") {
    Graph c5 = cycle_graph(5);
    auto lic = build_lic(c5);
    CHECK(lic.x.size() == 10);  // 2M arc variables
    CHECK(lic.y.size() == 5);
    CHECK(lic.u.size() == 5);
    CHECK(lic.w.size() == 5);
    CHECK(lic.model.var_count() == 25);
    // anti-parallel + outgoing-limit + degree + marker + MTZ + symmetry rows
    CHECK(lic.model.row_count() == 5 + 10 + 10 + 1 + 5 + 10 + 5);

    auto lic2 = build_lic2(c5);
    CHECK(lic2.model.var_count() == 25);
    CHECK(lic2.model.row_count() == 5 + 5 + 10 + 1 + 5 + 10 + 5);

    auto cec = build_cec(c5);
    CHECK(cec.model.var_count() == 5 + 5);  // M + n
    CHECK(cec.model.row_count() == 5 + 3 * 5);

    auto ilp = build_ilp_cut(c5);
    CHECK(ilp.model.var_count() == 10);
    CHECK(ilp.y.empty());

    auto ccp = build_ccp(c5);
    CHECK(ccp.model.row_count() == cec.model.row_count() + 2);
    CHECK_THROWS_AS(build_ccp(complete_graph(3)), std::invalid_argument);
}

TEST_CASE("triangle optima across formulations") {
    Graph tri = complete_graph(3);
    CHECK(solve_length(tri, ModelKind::LIC, Strategy::Direct) == 3);
    CHECK(solve_length(tri, ModelKind::LIC2, Strategy::Direct) == 3);
    CHECK(solve_length(tri, ModelKind::IlpCut, Strategy::Soft) == 3);
    CHECK(solve_length(tri, ModelKind::Cec, Strategy::Tough) == 3);
}

TEST_CASE("acyclic graphs have no cycle") {
    Graph star = star_graph(3);
    SolveSpec spec;
    spec.model = ModelKind::LIC;
    spec.strategy = Strategy::Direct;
    auto rep = run_solve(star, spec);
    CHECK(rep.result.length == 0);
    CHECK(rep.result.outcome == CycleOutcome::NoCycle);
}

TEST_CASE("a chord splits the five-cycle") {
    Graph g(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {1, 3}});
    CHECK(solve_length(g, ModelKind::LIC2, Strategy::Direct) == 4);
    CHECK(solve_length(g, ModelKind::LIC, Strategy::Direct) == 4);
}

TEST_CASE("the subtour family is what forbids multi-cycle solutions") {
    Graph two_tri(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
    // Without lazy cuts the arc model happily selects both triangles.
    auto h = build_ilp_cut(two_tri);
    auto raw = milp::branch_and_bound(h.model, milp::SolveConfig{});
    REQUIRE(raw.status == milp::SolveStatus::Optimal);
    CHECK(raw.incumbent_obj == doctest::Approx(6.0));
    // With them it reports the true optimum.
    CHECK(solve_length(two_tri, ModelKind::IlpCut, Strategy::Soft) == 3);
    CHECK(solve_length(two_tri, ModelKind::IlpCut, Strategy::Tough) == 3);
}

TEST_CASE("four-cycle in the arc model") {
    Graph c4 = cycle_graph(4);
    SolveSpec spec;
    spec.model = ModelKind::IlpCut;
    spec.strategy = Strategy::Soft;
    auto rep = run_solve(c4, spec);
    CHECK(rep.result.length == 4);
    REQUIRE(rep.result.cycles.size() == 1);
    CHECK(rep.result.cycles[0] == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("petersen graph agrees with the oracle") {
    Graph p = petersen_graph();
    int expect = brute_force_longest_induced_cycle(p).length;
    CHECK(solve_length(p, ModelKind::Cec, Strategy::Tough) == expect);
    CHECK(solve_length(p, ModelKind::Cec, Strategy::Soft) == expect);
}

TEST_CASE("hole model") {
    CHECK(solve_length(cycle_graph(4), ModelKind::Ccp, Strategy::Soft) == 4);

    SolveSpec spec;
    spec.model = ModelKind::Ccp;
    spec.strategy = Strategy::Tough;
    auto k4 = run_solve(complete_graph(4), spec);
    CHECK(k4.result.outcome == CycleOutcome::NoHole);  // only triangles exist
    CHECK(k4.result.length == 0);

    CHECK(solve_length(c6_with_chord(), ModelKind::Ccp, Strategy::Tough) == 4);
}

TEST_CASE("clique cuts") {
    Graph k4 = complete_graph(4);
    auto h = build_ccp(k4);
    int before = h.model.row_count();
    CHECK(add_clique_cuts(h, k4, maximal_cliques(k4, 3)) == 2);
    CHECK(h.model.row_count() == before + 2);

    Graph shared(5, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
    auto hs = build_ccp(shared);
    CHECK(add_clique_cuts(hs, shared, maximal_cliques(shared, 3)) == 4);

    Graph c5 = cycle_graph(5);
    auto hc = build_ccp(c5);
    CHECK(add_clique_cuts(hc, c5, maximal_cliques(c5, 3)) == 0);  // triangle-free

    VertexSet not_clique = VertexSet::of(5, {1, 2, 4});
    CHECK_THROWS_AS(add_clique_cuts(hc, c5, {not_clique}), std::invalid_argument);
}

TEST_CASE("warm start bounds") {
    Graph c5 = cycle_graph(5);

    SolveSpec base;
    base.model = ModelKind::Cec;
    base.strategy = Strategy::Soft;
    int opt = run_solve(c5, base).result.length;
    REQUIRE(opt == 5);

    // An explicit zero bound changes nothing.
    auto h = build_cec(c5);
    warm_start_bound(h, 0);
    auto out = milp::branch_and_bound(h.model, milp::SolveConfig{});
    CHECK(out.incumbent_obj == doctest::Approx(5.0));

    // Bound equal to the optimum: same value; above it: exhaustion.
    auto h2 = build_cec(c5);
    milp::SolveConfig cfg;
    cfg.objective_cutoff = opt;
    CHECK(milp::branch_and_bound(h2.model, cfg).incumbent_obj == doctest::Approx(5.0));
    cfg.objective_cutoff = opt + 1;
    CHECK(milp::branch_and_bound(h2.model, cfg).status == milp::SolveStatus::CutoffExhausted);
}

TEST_CASE("min length row") {
    Graph g = c6_with_chord();  // holes of length 4 only, plus no 5+ cycles
    SolveSpec spec;
    spec.model = ModelKind::Cec;
    spec.strategy = Strategy::Tough;
    spec.min_length = 5;
    auto rep = run_solve(g, spec);
    CHECK(rep.result.length == 0);  // nothing of length >= 5 exists
    spec.min_length = 4;
    CHECK(run_solve(g, spec).result.length == 4);
}

TEST_CASE("cycle extraction validates the solution") {
    Graph tri = complete_graph(3);
    auto h = build_lic(tri);
    auto out = milp::branch_and_bound(h.model, milp::SolveConfig{});
    REQUIRE(out.status == milp::SolveStatus::Optimal);
    auto res = extract_cycle(tri, h, out.incumbent);
    CHECK(res.length == 3);
    REQUIRE(res.cycles.size() == 1);
    CHECK(res.cycles[0] == std::vector<int>{1, 2, 3});

    // Arc selection is orientation-symmetric in the arc model and the
    // objective counts each edge twice.
    Graph c4 = cycle_graph(4);
    auto hc = build_ilp_cut(c4);
    CutPoolState ignored;
    auto outc = milp::branch_and_bound(hc.model, milp::SolveConfig{});
    REQUIRE(outc.status == milp::SolveStatus::Optimal);
    for (int k = 0; k < 4; ++k)
        CHECK(outc.incumbent[hc.x[2 * k]] == doctest::Approx(outc.incumbent[hc.x[2 * k + 1]]));
    CHECK(extract_cycle(c4, hc, outc.incumbent).length == 4);

    // A doctored selection with a chord is rejected.
    Graph k4 = complete_graph(4);
    auto hk = build_cec(k4);
    std::vector<double> fake(hk.model.var_count(), 0.0);
    for (int v = 1; v <= 4; ++v) fake[hk.y[v - 1]] = 1.0;
    for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {1, 4}})
        fake[hk.x[k4.edge_id(i, j)]] = 1.0;
    CHECK_THROWS_AS(extract_cycle(k4, hk, fake), MalformedSolutionError);
}

TEST_CASE("wrap marker sits on the smallest cycle vertex") {
    // Pendant vertex 1 attached to the square {2,3,4,5}.
    Graph g(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 5}});
    auto h = build_lic(g);
    auto out = milp::branch_and_bound(h.model, milp::SolveConfig{});
    REQUIRE(out.status == milp::SolveStatus::Optimal);
    CHECK(out.incumbent_obj == doctest::Approx(4.0));
    for (int v = 1; v <= 5; ++v) {
        double expect = v == 2 ? 1.0 : 0.0;  // smallest vertex on the cycle
        CHECK(out.incumbent[h.w[v - 1]] == doctest::Approx(expect));
    }
}

TEST_CASE("formulations agree with each other on random graphs") {
    for (std::uint64_t seed : {3u, 4u, 5u}) {
        Graph g = gen_random(9, 0.35, seed);
        int a = solve_length(g, ModelKind::LIC, Strategy::Direct);
        int b = solve_length(g, ModelKind::LIC2, Strategy::Direct);
        int c = solve_length(g, ModelKind::IlpCut, Strategy::Tough);
        int d = solve_length(g, ModelKind::Cec, Strategy::Soft);
        CHECK(a == b);
        CHECK(a == c);
        CHECK(a == d);
        if (a >= 4) CHECK(solve_length(g, ModelKind::Ccp, Strategy::Soft) == a);
    }
}

TEST_CASE("usage validation") {
    Graph c5 = cycle_graph(5);
    SolveSpec bad;
    bad.model = ModelKind::Cec;
    bad.strategy = Strategy::Direct;
    CHECK_THROWS_AS(run_solve(c5, bad), UsageError);
    bad.model = ModelKind::LIC;
    bad.strategy = Strategy::Soft;
    CHECK_THROWS_AS(run_solve(c5, bad), UsageError);
    bad.model = ModelKind::Cec;
    bad.strategy = Strategy::Tough;
    bad.clique_cuts = true;
    CHECK_THROWS_AS(run_solve(c5, bad), UsageError);
}
