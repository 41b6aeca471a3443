#include <doctest.h>

#include <metslope/critical.hpp>
#include <metslope/descent.hpp>
#include <metslope/error.hpp>
#include <metslope/instances.hpp>

#include <algorithm>
#include <set>
#include <vector>

using namespace metslope;

namespace {

MetricSpaceGraph unit_path(std::size_t n) {
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
    return build_graph(n, edges);
}

bool subset(const std::vector<PointId>& a, const std::vector<PointId>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST_CASE("critical and sublevel sets on a path") {
    const auto space = unit_path(3);
    const ScalarField f(space, {2.0, 1.0, 0.0});
    const auto crit = critical_set(slope_field(space, f));
    CHECK(crit.members == std::vector<PointId>{PointId{2}});
    CHECK(sublevel_set(f, 1.0).members == std::vector<PointId>{PointId{1}, PointId{2}});
    const ScalarField g(space, {0.0, 0.0, 5.0});
    CHECK(comparison_floor(space, f, g, PointId{0}, crit) == -5.0);
    CHECK_THROWS_AS((void)critical_set(slope_field(space, f), -1.0), Error);
    CHECK(sampled_critical_tolerance(0.001, 1.0) == doctest::Approx(0.002));
}

TEST_CASE("comparison floor is empty without a critical point below") {
    const auto space = unit_path(3);
    const ScalarField f(space, {0.0, 1.0, 2.0});
    const auto crit = critical_set(slope_field(space, f));
    CHECK_FALSE(comparison_floor(space, f, f, PointId{0}, CriticalSet{{PointId{2}}, 0.0}));
    CHECK(comparison_floor(space, f, f, PointId{2}, crit) == 0.0);
}

TEST_CASE("infinite slopes are never critical") {
    const std::vector<EdgeSpec> edges{{0, 1, 1e-9}};
    const auto space = build_graph(2, edges);
    const ScalarField f(space, {1e4, 0.0});
    const auto crit = critical_set(slope_field(space, f), 1e300);
    CHECK(crit.members == std::vector<PointId>{PointId{1}});
}

TEST_CASE("descent step picks the steepest admissible neighbour") {
    const auto space = unit_path(3);
    const ScalarField f(space, {2.0, 1.0, 0.0});
    const ScalarField g(space, {1.0, 0.6, 0.5});
    const auto crit = critical_set(slope_field(space, f));
    const auto step = descent_step(space, f, g, PointId{0}, crit);
    REQUIRE(std::holds_alternative<PointId>(step));
    CHECK(std::get<PointId>(step) == PointId{1});
    CHECK_THROWS_AS((void)descent_step(space, f, g, PointId{2}, crit), Error);

    const auto report = verify_strict_comparison(space, f, g, crit);
    CHECK(report.passed());
    CHECK(report.checked_points == 2);
}

TEST_CASE("descent step ties go to the smallest id") {
    // star: centre 0, leaves 1..3 all one unit lower
    const std::vector<EdgeSpec> edges{{0, 3, 1.0}, {0, 1, 1.0}, {0, 2, 1.0}};
    const auto space = build_graph(4, edges);
    const ScalarField f(space, {1.0, 0.0, 0.0, 0.0});
    const ScalarField g(space, {0.0, 0.0, 0.0, 0.0});
    const auto crit = critical_set(slope_field(space, f));
    CHECK(std::get<PointId>(descent_step(space, f, g, PointId{0}, crit)) == PointId{1});
}

TEST_CASE("descent step refuses when slope dominance fails") {
    const auto space = unit_path(2);
    const ScalarField f(space, {1.0, 0.0});
    const ScalarField g(space, {2.0, 0.0});
    const auto crit = critical_set(slope_field(space, f));
    try {
        (void)descent_step(space, f, g, PointId{0}, crit);
        FAIL("expected SlopeDominanceViolated");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SlopeDominanceViolated);
    }
    const auto report = verify_strict_comparison(space, f, g, crit);
    CHECK_FALSE(report.precondition_holds);
    CHECK(report.precondition_witness == PointId{0});
}

TEST_CASE("descent path on the four-point path") {
    const auto space = unit_path(4);
    const ScalarField f(space, {3.0, 2.0, 1.0, 0.0});
    const ScalarField g(space, {0.0, 0.0, 0.0, 0.0});
    const auto crit = critical_set(slope_field(space, f));
    const auto path = descent_path(space, f, g, PointId{0}, crit, 3);
    CHECK(path.points == std::vector<PointId>{PointId{0}, PointId{1}, PointId{2}, PointId{3}});
    CHECK(path.terminal_critical);
    CHECK_FALSE(path.diagnostic);
    CHECK_THROWS_AS((void)descent_path(space, f, g, PointId{0}, crit, 2), Error);
    const auto trivial = descent_path(space, f, g, PointId{3}, crit, 0);
    CHECK(trivial.points.size() == 1);
    CHECK(trivial.terminal_critical);
}

TEST_CASE("property: critical and sublevel sets are monotone") {
    Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = uniform_index(rng, 2, 30);
        const auto space = random_connected_graph(rng, n);
        const auto f = random_field(rng, space);
        const auto slopes = slope_field(space, f);
        const double t1 = uniform_real(rng, 0.0, 1.0);
        const double t2 = t1 + uniform_real(rng, 0.0, 1.0);
        CHECK(subset(critical_set(slopes, t1).members, critical_set(slopes, t2).members));
        const double a1 = uniform_real(rng, -1.0, 1.0);
        const double a2 = a1 + uniform_real(rng, 0.0, 1.0);
        CHECK(subset(sublevel_set(f, a1).members, sublevel_set(f, a2).members));
        // every global minimiser has slope zero
        const auto crit = critical_set(slopes);
        const auto min = std::min_element(f.values().begin(), f.values().end());
        CHECK(crit.contains(PointId{static_cast<std::size_t>(min - f.values().begin())}));
    }
}

TEST_CASE("property: descent paths are strictly monotone, short and never revisit") {
    Rng rng(32);
    for (int trial = 0; trial < 300; ++trial) {
        const auto n = uniform_index(rng, 2, 40);
        const auto space = random_connected_graph(rng, n);
        const auto f = random_field(rng, space);
        const double c = uniform_real(rng, 0.0, 0.9);
        const auto g = scale_field(f, c == 0.0 ? 0.5 : c);
        const auto crit = critical_set(slope_field(space, f));
        REQUIRE_FALSE(crit.empty());
        for (std::size_t x = 0; x < n; ++x) {
            const auto path = descent_path(space, f, g, PointId{x}, crit, n);
            REQUIRE(path.terminal_critical);
            CHECK(path.points.size() <= n);
            CHECK(crit.contains(path.points.back()));
            std::set<PointId> seen(path.points.begin(), path.points.end());
            CHECK(seen.size() == path.points.size());
            for (std::size_t k = 1; k < path.points.size(); ++k) {
                CHECK(path.f_values[k] < path.f_values[k - 1]);
                CHECK(path.diff_values[k] < path.diff_values[k - 1]);
            }
        }
        CHECK(verify_strict_comparison(space, f, g, crit).passed());
    }
}
