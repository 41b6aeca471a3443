// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <metslope/critical.hpp>
#include <metslope/descent.hpp>
#include <metslope/determination.hpp>
#include <metslope/gallery.hpp>
#include <metslope/instances.hpp>
#include <metslope/reconstruct.hpp>

#include "../support/oracles.hpp"
#include "../support/uniqueness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace metslope;

namespace {

constexpr double pi = std::numbers::pi;
constexpr std::size_t trials = 1000;

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// Random instance family shared by criteria 3 and 4.
struct Instance {
    MetricSpaceGraph space;
    ScalarField f;
    ScalarField g;
};

Instance dominated_instance(Rng& rng) {
    const auto n = uniform_index(rng, 2, 50);
    auto space = random_connected_graph(rng, n);
    auto f = random_field(rng, space);
    double c = 0.0;
    while (c == 0.0) c = uniform_real(rng, 0.0, 0.9);
    auto g = scale_field(f, c);
    return {std::move(space), std::move(f), std::move(g)};
}

Outcome arctan_reproduction() {
    const auto start = Clock::now();
    const auto space = sample_interval(-5.0, 5.0, 10001);
    const auto fn = arctan_pair().first;
    const auto slopes = slope_field(space, sample_field(space, fn));
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < space.size(); ++i) {
        const double t = space.coordinate(PointId{i})[0];
        worst = std::max(worst, std::abs(slopes.values[i].value() - 1.0 / (1.0 + t * t)));
    }
    const double elapsed = seconds_since(start);
    return {worst <= 1e-3 && elapsed < 1.0,
            "max interior error " + fmt(worst) + " (limit 1e-3), " + fmt(elapsed) + " s"};
}

Outcome square_sine_reproduction() {
    const std::size_t n = 6285;
    const auto space = sample_interval(-pi, pi, n);
    const double h = *space.grid_spacing();
    const auto fn = square_sine_pair().first;
    const auto slopes = slope_field(space, sample_field(space, fn));
    const auto analytic = [](double x) {
        return std::abs(x) <= pi / 2 ? std::cos(x) : 2.0 * (std::abs(x) - pi / 2);
    };
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double x = space.coordinate(PointId{i})[0];
        if (std::abs(std::abs(x) - pi / 2) < 1.5 * h) continue;
        worst = std::max(worst, std::abs(slopes.values[i].value() - analytic(x)));
    }
    const double at_left = slopes.values[(n - 1) / 4].value();
    const double at_right = slopes.values[3 * (n - 1) / 4].value();
    const bool pass = h <= 1e-3 && worst <= 5e-3 && at_left <= 5e-3 && at_right <= 5e-3;
    return {pass, "h=" + fmt(h) + ", max error " + fmt(worst) + " (limit 5e-3), slope at -pi/2 " +
                      fmt(at_left) + ", at pi/2 " + fmt(at_right)};
}

Outcome descent_step_existence() {
    Rng rng(3);
    std::size_t checked = 0;
    std::size_t failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto inst = dominated_instance(rng);
        const auto crit = critical_set(slope_field(inst.space, inst.f));
        for (std::size_t i = 0; i < inst.space.size(); ++i) {
            const PointId x{i};
            if (crit.contains(x)) continue;
            ++checked;
            const auto step = descent_step(inst.space, inst.f, inst.g, x, crit);
            const auto* z = std::get_if<PointId>(&step);
            const bool ok = z && inst.f[*z] < inst.f[x] &&
                            inst.f[*z] - inst.g[*z] < inst.f[x] - inst.g[x];
            if (!ok) ++failures;
        }
    }
    return {failures == 0 && checked > 0,
            std::to_string(checked) + " non-critical points, " + std::to_string(failures) +
                " failures"};
}

Outcome termination_and_comparison() {
    Rng rng(3);
    std::size_t paths = 0;
    std::size_t failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto inst = dominated_instance(rng);
        const std::size_t n = inst.space.size();
        const auto crit = critical_set(slope_field(inst.space, inst.f));
        for (std::size_t i = 0; i < n; ++i) {
            const PointId x{i};
            ++paths;
            const auto path = descent_path(inst.space, inst.f, inst.g, x, crit, n);
            if (!path.terminal_critical || path.points.size() - 1 > n ||
                !crit.contains(path.points.back())) {
                ++failures;
            }
            if (crit.contains(x)) continue;
            // m(x) computed directly from its definition
            double floor = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < n; ++j) {
                const PointId z{j};
                if (crit.contains(z) && inst.f[z] <= inst.f[x]) {
                    floor = std::min(floor, inst.f[z] - inst.g[z]);
                }
            }
            if (!(inst.f[x] - inst.g[x] > floor)) ++failures;
        }
        if (!verify_strict_comparison(inst.space, inst.f, inst.g, crit).passed()) ++failures;
    }
    return {failures == 0, std::to_string(paths) + " paths, " + std::to_string(failures) +
                               " failures"};
}

Outcome determination_positive() {
    Rng rng(5);
    std::size_t failures = 0;
    double worst_c = 0.0;
    double worst_residual = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto n = uniform_index(rng, 1, 50);
        const auto space = n == 1 ? build_graph(1, {}) : random_connected_graph(rng, n);
        const auto f = random_field(rng, space);
        const double c = uniform_real(rng, -10.0, 10.0);
        const auto report = determine(space, f, shift_field(f, c), exact_graph_tolerances());
        if (report.verdict != Verdict::EqualUpToConstant || !report.constant) {
            ++failures;
            continue;
        }
        worst_c = std::max(worst_c, std::abs(*report.constant - c));
        worst_residual = std::max(worst_residual, report.residual);
    }
    const bool pass = failures == 0 && worst_c <= 1e-12 && worst_residual <= 1e-12;
    return {pass, std::to_string(failures) + " wrong verdicts, max |c error| " + fmt(worst_c) +
                      ", max residual " + fmt(worst_residual)};
}

Outcome determination_negative() {
    const std::size_t n = 6285;
    const auto space = sample_interval(-pi, pi, n);
    const double h = *space.grid_spacing();
    const auto [fa, ga] = square_sine_pair();
    const auto f = sample_field(space, fa);
    const auto g = sample_field(space, ga);
    const auto report = determine(space, f, g, sampled_tolerances(h, 1.0));
    const bool flagged =
        report.verdict == Verdict::HypothesisViolated &&
        std::find(report.violated.begin(), report.violated.end(),
                  Hypothesis::DiffConstantOnCrit) != report.violated.end();
    bool near_left = false;
    bool near_right = false;
    bool all_near = true;
    for (const auto& w : report.witnesses) {
        if (w.hypothesis != Hypothesis::DiffConstantOnCrit) continue;
        const double x = space.coordinate(w.point)[0];
        const bool left = std::abs(x + pi / 2) <= h;
        const bool right = std::abs(x - pi / 2) <= h;
        near_left = near_left || left;
        near_right = near_right || right;
        all_near = all_near && (left || right);
    }
    const double spread = report.diagnostics ? report.diagnostics->diff_constant_on_crit.spread : 0.0;
    const bool pass = flagged && near_left && near_right && all_near &&
                      std::abs(spread - 4.0) <= 5e-3;
    std::string violated;
    for (const auto hyp : report.violated) violated += (violated.empty() ? "" : ",") + to_string(hyp);
    return {pass, "verdict " + to_string(report.verdict) + "(" + violated + "), spread " +
                      fmt(spread) + ", witnesses near -pi/2: " + (near_left ? "yes" : "no") +
                      ", near pi/2: " + (near_right ? "yes" : "no")};
}

Outcome cantor_blowup() {
    bool pass = true;
    std::ostringstream detail;
    for (int k = 4; k <= 8; ++k) {
        const std::size_t cells = oracle::pow3(k);
        const auto space = sample_interval(0.0, 1.0, cells + 1);
        const auto pair = cantor_pair(k);
        const auto f = sample_field(space, pair.f);
        const auto g = sample_field(space, pair.g);
        const auto sf = slope_field(space, f);
        const auto sg = slope_field(space, g);
        double peak = 0.0;
        for (const auto& s : sf.values) peak = std::max(peak, s.value());
        const double expected = 1.0 + std::pow(1.5, k);
        std::size_t stairs = 0;
        std::size_t differing = 0;
        for (std::size_t i = 0; i < cells; ++i) {
            if (!oracle::cantor_stair_segment(i, k)) continue;
            ++stairs;
            if (std::abs(sf.values[i + 1].value() - sg.values[i + 1].value()) > 1e-9) ++differing;
        }
        const auto report = determine(space, f, g, exact_graph_tolerances());
        const bool slopes_flagged =
            report.verdict == Verdict::HypothesisViolated &&
            std::any_of(report.violated.begin(), report.violated.end(), [](Hypothesis h) {
                return h == Hypothesis::SlopesEqual || h == Hypothesis::SlopesFinite;
            });
        const bool ok = peak >= expected - 1e-9 && stairs == (std::size_t{1} << k) &&
                        differing == stairs && slopes_flagged;
        pass = pass && ok;
        detail << (k == 4 ? "" : "; ") << "k=" << k << " peak " << fmt(peak) << " stairs "
               << differing << "/" << stairs << " " << to_string(report.verdict) << "(";
        for (std::size_t j = 0; j < report.violated.size(); ++j)
            detail << (j ? "," : "") << to_string(report.violated[j]);
        detail << ")";
    }
    return {pass, detail.str()};
}

Outcome homogeneity_audit() {
    Rng rng(8);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const auto n = uniform_index(rng, 2, 50);
        const auto space = random_connected_graph(rng, n);
        const auto f = random_integer_field(rng, space, 1000);
        const auto base = slope_field(space, f);
        for (const double eps : {1.0, 0.1, 0.01}) {
            const auto scaled = slope_field(space, scale_field(f, 1.0 + eps));
            for (std::size_t i = 0; i < n; ++i) {
                const double expected = (1.0 + eps) * base.values[i].value();
                const double got = scaled.values[i].value();
                if (expected == 0.0) {
                    worst = std::max(worst, got == 0.0 ? 0.0 : 1.0);
                } else {
                    worst = std::max(worst, std::abs(got - expected) / expected);
                }
            }
        }
    }
    return {worst <= 1e-12, "max relative deviation " + fmt(worst) + " (limit 1e-12)"};
}

Outcome uniqueness_oracle() {
    const auto start = Clock::now();
    oracle::UniquenessStats stats;
    for (std::size_t n = 1; n <= 5; ++n) oracle::check_uniqueness(n, 4, stats);
    const double elapsed = seconds_since(start);
    const bool pass = stats.collisions == 0 && stats.verdict_mismatches == 0 && elapsed <= 120.0;
    std::string detail = std::to_string(stats.graphs) + " graphs, " + std::to_string(stats.fields) +
                         " fields, " + std::to_string(stats.collisions) + " collisions, " +
                         std::to_string(stats.verdict_mismatches) + " verdict mismatches, " +
                         fmt(elapsed) + " s";
    if (!stats.first_failure.empty()) detail += "; " + stats.first_failure;
    return {pass, detail};
}

Outcome reconstruction_round_trip() {
    Rng rng(10);
    double worst = 0.0;
    std::size_t round_trip_failures = 0;
    std::size_t perturbed = 0;
    std::size_t rejected = 0;
    std::size_t off_crit = 0;
    std::size_t off_crit_admissible = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto n = uniform_index(rng, 2, 50);
        const auto space = random_connected_graph(rng, n);
        const auto f = random_field(rng, space);
        const auto data = extract_slope_data(space, f);
        const auto result = reconstruct(space, data, 1e-9);
        if (const auto* v = std::get_if<ScalarField>(&result)) {
            for (std::size_t i = 0; i < n; ++i) {
                worst = std::max(worst, std::abs(v->values()[i] - f.values()[i]));
            }
        } else {
            ++round_trip_failures;
        }

        // +1 on the slope of one critical point
        const auto& crit = data.crit_values;
        auto it = crit.begin();
        std::advance(it, static_cast<long>(uniform_index(rng, 0, crit.size() - 1)));
        const PointId z = it->first;
        auto bumped = data;
        bumped.slopes.values[z.value] = SlopeValue::finite(data.slopes.values[z.value].value() + 1.0);
        ++perturbed;
        const auto bad = reconstruct(space, bumped, 1e-9);
        if (const auto* rej = std::get_if<Inadmissible>(&bad)) {
            const bool names_z = std::any_of(rej->witnesses.begin(), rej->witnesses.end(),
                                             [z](const auto& w) { return w.point == z; });
            if (names_z) ++rejected;
        }

        // +1 on a non-critical slope: reported, not part of the criterion
        if (crit.size() < n) {
            std::size_t x = uniform_index(rng, 0, n - 1);
            while (crit.count(PointId{x})) x = (x + 1) % n;
            auto moved = data;
            moved.slopes.values[x] = SlopeValue::finite(data.slopes.values[x].value() + 1.0);
            ++off_crit;
            if (admissible(space, moved, 1e-9).admissible) ++off_crit_admissible;
        }
    }
    const bool pass = round_trip_failures == 0 && worst <= 1e-9 && rejected == perturbed;
    return {pass, "max round-trip error " + fmt(worst) + ", critical-slope perturbations rejected " +
                      std::to_string(rejected) + "/" + std::to_string(perturbed) +
                      " (non-critical perturbations admissible " +
                      std::to_string(off_crit_admissible) + "/" + std::to_string(off_crit) + ")"};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"arctan slope reproduction", arctan_reproduction},
        {"square/sine slope reproduction", square_sine_reproduction},
        {"descent step existence", descent_step_existence},
        {"descent termination and strict comparison", termination_and_comparison},
        {"determination on shifted fields", determination_positive},
        {"square/sine pair flagged on the critical set", determination_negative},
        {"Cantor slope blow-up", cantor_blowup},
        {"homogeneity audit", homogeneity_audit},
        {"exhaustive uniqueness n <= 5", uniqueness_oracle},
        {"reconstruction round trip", reconstruction_round_trip},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, fn] : criteria) {
        ++index;
        Outcome outcome;
        try {
            outcome = fn();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        if (!outcome.pass) ++failed;
        std::printf("%s %2d %s: %s\n", outcome.pass ? "PASS" : "FAIL", index, name,
                    outcome.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
