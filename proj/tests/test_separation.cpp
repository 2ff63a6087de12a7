#include <doctest.h>

#include <cmath>
#include <sstream>

#include "chordless/instances.hpp"
#include "chordless/oracle.hpp"
#include "chordless/separation.hpp"
#include "chordless/solve.hpp"
#include "test_graphs.hpp"

using namespace chordless;
using namespace chordless::testing;

namespace {

double row_activity(const milp::LinearConstraint& row, const std::vector<double>& x) {
    double acc = 0.0;
    for (auto [v, a] : row.terms) acc += a * x[v];
    return acc;
}

bool row_satisfied(const milp::LinearConstraint& row, const std::vector<double>& x) {
    double act = row_activity(row, x);
    switch (row.sense) {
        case milp::RowSense::LE: return act <= row.rhs + 1e-9;
        case milp::RowSense::GE: return act >= row.rhs - 1e-9;
        case milp::RowSense::EQ: return std::fabs(act - row.rhs) <= 1e-9;
    }
    return false;
}

/// Feasible assignment selecting the given vertex-disjoint chordless cycles.
std::vector<double> solution_for(const Graph& g, const FormulationHandles& h,
                                 const std::vector<std::vector<int>>& cycles) {
    std::vector<double> x(h.model.var_count(), 0.0);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            int k = g.edge_id(a, b);
            REQUIRE(k >= 0);
            if (h.kind == ModelKind::Cec || h.kind == ModelKind::Ccp) {
                x[h.x[k]] = 1.0;
            } else {
                x[h.x[2 * k]] = 1.0;
                x[h.x[2 * k + 1]] = 1.0;
            }
            if (!h.y.empty()) x[h.y[a - 1]] = 1.0;
        }
    }
    return x;
}

}  // namespace

TEST_CASE("soft handler follows the accept-or-cut rule") {
    // C5 on 1..5 and a triangle on 6..8.
    Graph g(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {6, 7}, {7, 8}, {6, 8}});
    auto h = build_cec(g);

    SUBCASE("a single new-best cycle is accepted uncut") {
        CutPoolState state;
        auto handler = make_soft_handler(g, h, state);
        milp::CallbackContext ctx;
        bool accept = handler(solution_for(g, h, {{1, 2, 3, 4, 5}}), ctx);
        CHECK(accept);
        CHECK(ctx.cuts().empty());
        CHECK(state.longest_induced_cycle == 5);
        REQUIRE(state.best_cycles.size() == 1);
        CHECK(state.best_cycles[0] == std::vector<int>{1, 2, 3, 4, 5});
    }

    SUBCASE("two components: record the longer, cut the shorter") {
        CutPoolState state;
        auto handler = make_soft_handler(g, h, state);
        milp::CallbackContext ctx;
        auto x = solution_for(g, h, {{1, 2, 3, 4, 5}, {6, 7, 8}});
        bool accept = handler(x, ctx);
        CHECK(!accept);
        CHECK(state.longest_induced_cycle == 5);
        REQUIRE(ctx.cuts().size() == 1);
        // The cut is the vertex form over the triangle and the point
        // violates it by exactly one.
        CHECK(row_activity(ctx.cuts()[0], x) == doctest::Approx(3.0));
        CHECK(ctx.cuts()[0].rhs == doctest::Approx(2.0));
    }

    SUBCASE("an old shorter cycle is cut, the incumbent stays") {
        CutPoolState state;
        state.longest_induced_cycle = 6;
        auto handler = make_soft_handler(g, h, state);
        milp::CallbackContext ctx;
        bool accept = handler(solution_for(g, h, {{1, 2, 3, 4, 5}}), ctx);
        CHECK(!accept);
        CHECK(state.longest_induced_cycle == 6);
        CHECK(ctx.cuts().size() == 1);
    }
}

TEST_CASE("tough handler cuts everything and raises the cutoff") {
    Graph c7 = cycle_graph(7);
    auto h = build_cec(c7);
    CutPoolState state;
    auto handler = make_tough_handler(c7, h, state);
    milp::CallbackContext ctx;
    bool accept = handler(solution_for(c7, h, {{1, 2, 3, 4, 5, 6, 7}}), ctx);
    CHECK(!accept);
    CHECK(state.longest_induced_cycle == 7);
    CHECK(ctx.cuts().size() == 1);
    REQUIRE(ctx.cutoff_raise().has_value());
    CHECK(*ctx.cutoff_raise() == doctest::Approx(8.0));
}

TEST_CASE("tough strategy terminates by exhaustion with the right answer") {
    SolveSpec spec;
    spec.model = ModelKind::Cec;
    spec.strategy = Strategy::Tough;
    auto rep = run_solve(cycle_graph(5), spec);
    CHECK(rep.result.status == milp::SolveStatus::CutoffExhausted);
    CHECK(rep.result.length == 5);

    auto none = run_solve(star_graph(4), spec);
    CHECK(none.result.status == milp::SolveStatus::CutoffExhausted);
    CHECK(none.result.length == 0);
}

TEST_CASE("arc-model subtour cut structure") {
    // Two disjoint triangles: no crossing arcs, so the cut pins the smallest
    // vertex's arcs to zero and the current point violates it by four.
    Graph two_tri(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
    auto h = build_ilp_cut(two_tri);
    auto cut = subtour_cut_ilpcut(two_tri, h, {1, 2, 3});
    auto x = solution_for(two_tri, h, {{1, 2, 3}, {4, 5, 6}});
    CHECK(cut.sense == milp::RowSense::LE);
    CHECK(cut.rhs == doctest::Approx(0.0));
    CHECK(row_activity(cut, x) == doctest::Approx(4.0));  // violated

    // Inside K4 the crossing arcs overlap delta(1): those coefficients merge
    // away and only four +1 / four -1 terms remain.
    Graph k4 = complete_graph(4);
    auto hk = build_ilp_cut(k4);
    auto kcut = subtour_cut_ilpcut(k4, hk, {1, 2, 3});
    CHECK(kcut.terms.size() == 8);
    double pos = 0, neg = 0;
    for (auto [v, a] : kcut.terms) (a > 0 ? pos : neg) += a;
    CHECK(pos == doctest::Approx(4.0));
    CHECK(neg == doctest::Approx(-4.0));

    // A single cycle spanning the cut plus outside vertices satisfies it.
    Graph c6 = cycle_graph(6);
    auto h6 = build_ilp_cut(c6);
    auto cut6 = subtour_cut_ilpcut(c6, h6, {1, 2, 3});
    auto full = solution_for(c6, h6, {{1, 2, 3, 4, 5, 6}});
    CHECK(row_satisfied(cut6, full));
}

TEST_CASE("vertex-model subtour cut structure") {
    Graph tri = complete_graph(3);
    auto h = build_cec(tri);
    auto cut = subtour_cut_cec(h, {1, 2, 3});
    CHECK(cut.rhs == doctest::Approx(2.0));
    auto x = solution_for(tri, h, {{1, 2, 3}});
    CHECK(row_activity(cut, x) == doctest::Approx(3.0));  // violates by exactly 1

    // A different cycle sharing all but one vertex stays feasible.
    Graph g = c6_with_chord();
    auto hg = build_cec(g);
    auto c1 = subtour_cut_cec(hg, {1, 2, 3, 4});
    auto other = solution_for(g, hg, {{1, 4, 5, 6}});
    CHECK(row_satisfied(c1, other));
}

TEST_CASE("hole-model cuts") {
    // Two disjoint squares.
    Graph g(8, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {5, 6}, {6, 7}, {7, 8}, {5, 8}});
    auto h = build_ccp(g);
    VertexSet comp = VertexSet::of(8, {1, 2, 3, 4});
    auto x = solution_for(g, h, {{1, 2, 3, 4}, {5, 6, 7, 8}});

    auto basic = subtour_cut_ccp_basic(g, h, comp, 1, 5);
    CHECK(row_activity(basic, x) - basic.rhs == doctest::Approx(-2.0));  // violated by 2
    CHECK_THROWS_AS(subtour_cut_ccp_basic(g, h, comp, 5, 1), std::invalid_argument);

    // Strengthened form needs a crossing edge; none exists here.
    Graph bridged(8, {{1, 2},
                      {2, 3},
                      {3, 4},
                      {1, 4},
                      {5, 6},
                      {6, 7},
                      {7, 8},
                      {5, 8},
                      {4, 5}});
    auto hb = build_ccp(bridged);
    int bridge = bridged.edge_id(4, 5);
    auto strengthened = subtour_cut_ccp_strengthened(bridged, hb, comp, bridge);
    auto xb = solution_for(bridged, hb, {{1, 2, 3, 4}, {5, 6, 7, 8}});
    CHECK(row_satisfied(strengthened, xb));  // slack while the edge is unselected
    CHECK_THROWS_AS(subtour_cut_ccp_strengthened(bridged, hb, comp, bridged.edge_id(1, 2)),
                    std::invalid_argument);

    // Any single spanning cycle satisfies both forms.
    Graph c6 = cycle_graph(6);
    auto h6 = build_ccp(c6);
    VertexSet left = VertexSet::of(6, {1, 2, 3});
    auto full = solution_for(c6, h6, {{1, 2, 3, 4, 5, 6}});
    CHECK(row_satisfied(subtour_cut_ccp_basic(c6, h6, left, 1, 4), full));
    CHECK(row_satisfied(subtour_cut_ccp_strengthened(c6, h6, left, c6.edge_id(3, 4)), full));
}

TEST_CASE("emitted cuts never exclude strictly longer single cycles") {
    // Cuts are emitted for short components; every chordless cycle strictly
    // longer than the component must remain feasible for them.
    for (std::uint64_t seed = 50; seed < 70; ++seed) {
        Graph g = gen_random(9, 0.35, seed);
        auto cycles = enumerate_chordless_cycles(g);
        if (cycles.size() < 2) continue;
        auto hc = build_cec(g);
        auto hi = build_ilp_cut(g);
        for (const auto& shorter : cycles) {
            auto cec_cut = subtour_cut_cec(hc, shorter);
            auto ilp_cut = subtour_cut_ilpcut(g, hi, shorter);
            for (const auto& longer : cycles) {
                if (longer.size() <= shorter.size()) continue;
                CHECK(row_satisfied(cec_cut, solution_for(g, hc, {longer})));
                CHECK(row_satisfied(ilp_cut, solution_for(g, hi, {longer})));
            }
        }
    }
}

TEST_CASE("duplicate components are not re-cut") {
    Graph g(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {6, 7}, {7, 8}, {6, 8}});
    auto h = build_cec(g);
    CutPoolState state;
    state.longest_induced_cycle = 9;  // force the cut branch for everything
    state.min_record_length = 3;
    auto handler = make_soft_handler(g, h, state);
    auto x = solution_for(g, h, {{1, 2, 3, 4, 5}, {6, 7, 8}});
    milp::CallbackContext c1, c2;
    CHECK(!handler(x, c1));
    CHECK(c1.cuts().size() == 2);
    CHECK(!handler(x, c2));     // still rejected,
    CHECK(c2.cuts().empty());   // but the rows are already in the pool
    CHECK(state.cuts_added == 2);
}

TEST_CASE("soft mode enumerates alternate optima") {
    SolveSpec spec;
    spec.model = ModelKind::Cec;
    spec.strategy = Strategy::Soft;
    auto two = run_solve(two_c5(), spec);
    CHECK(two.result.length == 5);
    CHECK(two.result.cycles.size() == 2);

    auto k4 = run_solve(complete_graph(4), spec);
    CHECK(k4.result.length == 3);
    CHECK(k4.result.cycles.size() == 4);

    spec.model = ModelKind::IlpCut;
    auto k4i = run_solve(complete_graph(4), spec);
    CHECK(k4i.result.cycles.size() == 4);
}

TEST_CASE("cut log lines are emitted in verbose mode") {
    std::ostringstream log;
    SolveSpec spec;
    spec.model = ModelKind::Cec;
    spec.strategy = Strategy::Tough;
    spec.cut_log = &log;
    run_solve(cycle_graph(4), spec);
    CHECK(log.str().find("cut cec cycle=[1,2,3,4]") != std::string::npos);
    CHECK(log.str().find("violation=") != std::string::npos);
}
