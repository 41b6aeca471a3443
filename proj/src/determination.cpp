#include "metslope/determination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace metslope {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

void require_bound(const MetricSpaceGraph& space, const ScalarField& f, const ScalarField& g) {
    if (!f.bound_to(space) || !g.bound_to(space)) {
        throw Error(ErrorCode::FieldSpaceMismatch, "fields are not bound to this space");
    }
}

void require_tolerances(const Tolerances& tol) {
    if (!(tol.slope >= 0.0) || !(tol.crit >= 0.0) || !(tol.residual >= 0.0)) {
        throw Error(ErrorCode::NegativeTolerance, "tolerances must be >= 0");
    }
}

double slope_gap(const SlopeValue& a, const SlopeValue& b) {
    if (a.is_infinite() && b.is_infinite()) return 0.0;
    if (a.is_infinite() || b.is_infinite()) return inf;
    return std::abs(a.value() - b.value());
}

// Extreme of g - f over the critical set. Values within `tie` of the
// extreme are resolved to the smallest slope of f, then the smallest id,
// so that the witness is the most critical representative.
PointId extreme_point(const CriticalSet& crit, const std::vector<double>& diff,
                      const SlopeField& slopes_f, bool maximum, double tie) {
    double best = maximum ? -inf : inf;
    for (const PointId z : crit.members) {
        best = maximum ? std::max(best, diff[z.value]) : std::min(best, diff[z.value]);
    }
    std::optional<PointId> chosen;
    for (const PointId z : crit.members) {
        if (std::abs(diff[z.value] - best) > tie) continue;
        if (!chosen || slopes_f[z].value() < slopes_f[*chosen].value()) chosen = z;
    }
    return *chosen;
}

// Preconditions of the comparison principle for (f, g, c).
void check_comparison_preconditions(const ScalarField& f, const ScalarField& g,
                                    const SlopeField& sf, const SlopeField& sg,
                                    const CriticalSet& crit_f, double c, const Tolerances& tol) {
    for (std::size_t i = 0; i < sf.size(); ++i) {
        const PointId x{i};
        if (sf[x].is_infinite()) {
            throw PreconditionError(Hypothesis::SlopesFinite, x, "slope of f is infinite");
        }
        if (sg[x].is_infinite() || sg[x].value() > sf[x].value() + tol.slope) {
            throw PreconditionError(Hypothesis::SlopeDominance, x,
                                    "slope of g " + std::to_string(sg[x].value()) +
                                        " exceeds slope of f " + std::to_string(sf[x].value()));
        }
    }
    for (const PointId z : crit_f.members) {
        if (g[z] - f[z] > c + tol.residual) {
            throw PreconditionError(Hypothesis::DiffConstantOnCrit, z,
                                    "g - f = " + std::to_string(g[z] - f[z]) + " exceeds c = " +
                                        std::to_string(c) + " on Crit(f)");
        }
    }
}

}  // namespace

Tolerances exact_graph_tolerances() { return Tolerances{1e-9, 0.0, 1e-9}; }

Tolerances sampled_tolerances(double spacing, double lipschitz) {
    const double crit = sampled_critical_tolerance(spacing, lipschitz);
    return Tolerances{5.0 * spacing * lipschitz, crit, 1e-9 + crit};
}

std::string to_string(Hypothesis h) {
    switch (h) {
        case Hypothesis::SlopesFinite: return "slopes_finite";
        case Hypothesis::SlopesEqual: return "slopes_equal";
        case Hypothesis::CritSetsEqual: return "crit_sets_equal";
        case Hypothesis::DiffConstantOnCrit: return "diff_constant_on_crit";
        case Hypothesis::SlopeDominance: return "slope_dominance";
    }
    return "unknown";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::EqualUpToConstant: return "EqualUpToConstant";
        case Verdict::HypothesisViolated: return "HypothesisViolated";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "unknown";
}

std::vector<Hypothesis> HypothesisDiagnostics::violated() const {
    std::vector<Hypothesis> out;
    if (!slopes_finite.pass) out.push_back(Hypothesis::SlopesFinite);
    if (!slopes_equal.pass) out.push_back(Hypothesis::SlopesEqual);
    if (!diff_constant_on_crit.pass) out.push_back(Hypothesis::DiffConstantOnCrit);
    return out;
}

std::vector<Witness> HypothesisDiagnostics::witnesses(const ScalarField& f, const ScalarField& g,
                                                      std::size_t limit) const {
    std::vector<Witness> out;
    const auto make = [&](PointId x, Hypothesis h) {
        return Witness{x, h, f[x], g[x], slopes_f[x].value(), slopes_g[x].value()};
    };
    if (!slopes_finite.pass) {
        std::size_t count = 0;
        for (std::size_t i = 0; i < slopes_f.size() && count < limit; ++i) {
            const PointId x{i};
            if (slopes_f[x].is_infinite() || slopes_g[x].is_infinite()) {
                out.push_back(make(x, Hypothesis::SlopesFinite));
                ++count;
            }
        }
    }
    if (!slopes_equal.pass) {
        std::vector<std::pair<double, std::size_t>> offenders;
        for (std::size_t i = 0; i < slopes_f.size(); ++i) {
            const double gap = slope_gap(slopes_f.values[i], slopes_g.values[i]);
            if (gap > tolerances.slope) offenders.emplace_back(gap, i);
        }
        std::sort(offenders.begin(), offenders.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        if (offenders.size() > limit) offenders.resize(limit);
        for (const auto& [gap, i] : offenders) out.push_back(make(PointId{i}, Hypothesis::SlopesEqual));
    }
    if (!diff_constant_on_crit.pass) {
        out.push_back(make(diff_constant_on_crit.max_point, Hypothesis::DiffConstantOnCrit));
        out.push_back(make(diff_constant_on_crit.min_point, Hypothesis::DiffConstantOnCrit));
    }
    return out;
}

HypothesisDiagnostics check_hypotheses(const MetricSpaceGraph& space, const ScalarField& f,
                                       const ScalarField& g, const Tolerances& tol,
                                       const SlopeOptions& options) {
    require_bound(space, f, g);
    require_tolerances(tol);

    HypothesisDiagnostics diag;
    diag.tolerances = tol;
    diag.slopes_f = slope_field(space, f, options);
    diag.slopes_g = slope_field(space, g, options);
    const std::size_t n = space.size();

    for (std::size_t i = 0; i < n && diag.slopes_finite.pass; ++i) {
        if (diag.slopes_f.values[i].is_infinite()) {
            diag.slopes_finite = {false, PointId{i}, "f"};
        } else if (diag.slopes_g.values[i].is_infinite()) {
            diag.slopes_finite = {false, PointId{i}, "g"};
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        const double gap = slope_gap(diag.slopes_f.values[i], diag.slopes_g.values[i]);
        if (!diag.slopes_equal.worst_point || gap > diag.slopes_equal.max_gap) {
            diag.slopes_equal.max_gap = gap;
            diag.slopes_equal.worst_point = PointId{i};
        }
    }
    diag.slopes_equal.pass = diag.slopes_equal.max_gap <= tol.slope;

    diag.crit_f = critical_set(diag.slopes_f, tol.crit);
    diag.crit_g = critical_set(diag.slopes_g, tol.crit);
    std::set_difference(diag.crit_f.members.begin(), diag.crit_f.members.end(),
                        diag.crit_g.members.begin(), diag.crit_g.members.end(),
                        std::back_inserter(diag.crit_sets_equal.only_in_f));
    std::set_difference(diag.crit_g.members.begin(), diag.crit_g.members.end(),
                        diag.crit_f.members.begin(), diag.crit_f.members.end(),
                        std::back_inserter(diag.crit_sets_equal.only_in_g));
    diag.crit_sets_equal.pass =
        diag.crit_sets_equal.only_in_f.empty() && diag.crit_sets_equal.only_in_g.empty();

    if (diag.crit_f.empty()) {
        throw Error(ErrorCode::EmptyCriticalSet,
                    "Crit(f) is empty; every minimiser has an infinite slope");
    }

    std::vector<double> diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = g.values()[i] - f.values()[i];
    auto& constancy = diag.diff_constant_on_crit;
    double sum = 0.0;
    for (const PointId z : diag.crit_f.members) sum += diff[z.value];
    constancy.constant = sum / static_cast<double>(diag.crit_f.size());
    constancy.max_point = extreme_point(diag.crit_f, diff, diag.slopes_f, true, tol.residual);
    constancy.min_point = extreme_point(diag.crit_f, diff, diag.slopes_f, false, tol.residual);
    const auto [lo, hi] = std::minmax_element(
        diag.crit_f.members.begin(), diag.crit_f.members.end(),
        [&](PointId a, PointId b) { return diff[a.value] < diff[b.value]; });
    constancy.min_value = diff[lo->value];
    constancy.max_value = diff[hi->value];
    constancy.spread = constancy.max_value - constancy.min_value;
    constancy.pass = constancy.spread <= tol.residual;
    return diag;
}

ComparisonResult comparison_principle(const MetricSpaceGraph& space, const ScalarField& f,
                                      const ScalarField& g, double c, const Tolerances& tol,
                                      const SlopeOptions& options) {
    require_bound(space, f, g);
    require_tolerances(tol);
    const SlopeField sf = slope_field(space, f, options);
    const SlopeField sg = slope_field(space, g, options);
    const CriticalSet crit = critical_set(sf, tol.crit);
    check_comparison_preconditions(f, g, sf, sg, crit, c, tol);

    ComparisonResult result;
    result.worst_excess = -inf;
    for (std::size_t i = 0; i < space.size(); ++i) {
        const double excess = g.values()[i] - f.values()[i] - c;
        if (excess > result.worst_excess) {
            result.worst_excess = excess;
            result.worst_point = PointId{i};
        }
    }
    result.holds = result.worst_excess <= tol.residual;
    return result;
}

bool EpsilonAudit::passed() const {
    if (trivial) return true;
    return !rows.empty() && std::all_of(rows.begin(), rows.end(), [&](const EpsilonAuditRow& r) {
        return r.crit_preserved && r.strict_dominance && r.bound_holds &&
               r.max_bracket <= range * (1.0 + 1e-12);
    });
}

EpsilonAudit epsilon_audit(const MetricSpaceGraph& space, const ScalarField& f,
                           const ScalarField& g, const std::vector<double>& epsilons,
                           const Tolerances& tol, const SlopeOptions& options) {
    require_bound(space, f, g);
    require_tolerances(tol);
    for (std::size_t k = 0; k < epsilons.size(); ++k) {
        if (!(epsilons[k] > 0.0) || (k > 0 && !(epsilons[k] < epsilons[k - 1]))) {
            throw Error(ErrorCode::NonDecreasingDeltas, "epsilons must be positive and decreasing");
        }
    }
    const SlopeField sf = slope_field(space, f, options);
    const SlopeField sg = slope_field(space, g, options);
    const CriticalSet crit = critical_set(sf, tol.crit);
    if (crit.empty()) throw Error(ErrorCode::EmptyCriticalSet, "Crit(f) is empty");

    EpsilonAudit audit;
    audit.constant = -inf;
    for (const PointId z : crit.members) audit.constant = std::max(audit.constant, g[z] - f[z]);
    check_comparison_preconditions(f, g, sf, sg, crit, audit.constant, tol);

    const auto [lo, hi] = std::minmax_element(f.values().begin(), f.values().end());
    audit.range = *hi - *lo;
    audit.trivial = crit.size() == space.size();
    if (audit.trivial) return audit;

    for (const double eps : epsilons) {
        EpsilonAuditRow row;
        row.epsilon = eps;
        const ScalarField fe = scale_field(f, 1.0 + eps);
        const SlopeField sfe = slope_field(space, fe, options);
        row.crit_preserved = critical_set(sfe, tol.crit * (1.0 + eps)).members == crit.members;

        row.strict_dominance = true;
        row.worst_slack = inf;
        row.bound_holds = true;
        for (std::size_t i = 0; i < space.size(); ++i) {
            const PointId x{i};
            if (crit.contains(x)) continue;
            if (!(sfe[x].value() > sg[x].value())) row.strict_dominance = false;

            double lowest = inf;
            for (const PointId z : crit.members) {
                if (fe[z] <= fe[x]) lowest = std::min(lowest, f[z]);
            }
            if (lowest == inf) {
                // No critical point below x: the strict comparison fails here.
                row.bound_holds = false;
                row.worst_point = x;
                row.worst_slack = -inf;
                continue;
            }
            const double bracket = f[x] - lowest;
            row.max_bracket = std::max(row.max_bracket, bracket);
            const double slack = f[x] + eps * bracket + audit.constant - g[x];
            if (slack < row.worst_slack) {
                row.worst_slack = slack;
                row.worst_point = x;
                row.worst_bracket = bracket;
            }
        }
        row.bound_holds = row.bound_holds && row.worst_slack > -tol.residual;
        audit.rows.push_back(row);
    }
    return audit;
}

double residual(const ScalarField& f, const ScalarField& g, double c) {
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        worst = std::max(worst, std::abs(g.values()[i] - f.values()[i] - c));
    }
    return worst;
}

DeterminationReport determine(const MetricSpaceGraph& space, const ScalarField& f,
                              const ScalarField& g, const Tolerances& tol,
                              const SlopeOptions& options) {
    DeterminationReport report;
    report.tolerances = tol;
    report.overflow_cap = options.overflow_cap;
    report.slope_provenance = to_string(SlopeProvenance::ExactGraph);

    try {
        report.diagnostics = check_hypotheses(space, f, g, tol, options);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::EmptyCriticalSet) throw;
        report.verdict = Verdict::Inconclusive;
        report.note = e.what();
        return report;
    }
    const HypothesisDiagnostics& diag = *report.diagnostics;
    const double c = diag.diff_constant_on_crit.constant;
    report.constant = c;
    report.residual = residual(f, g, c);
    report.violated = diag.violated();

    if (!report.violated.empty()) {
        report.verdict = Verdict::HypothesisViolated;
        report.witnesses = diag.witnesses(f, g);
        if (!diag.crit_sets_equal.pass) {
            report.note = "critical sets of f and g differ under the declared tolerances";
        }
        return report;
    }

    try {
        const auto forward = comparison_principle(space, f, g, c, tol, options);
        const auto backward = comparison_principle(space, g, f, -c, tol, options);
        if (forward.holds && backward.holds && report.residual <= tol.residual) {
            report.verdict = Verdict::EqualUpToConstant;
        } else {
            report.verdict = Verdict::Inconclusive;
            report.note = "hypotheses hold but the comparison bounds exceed tol_residual";
        }
    } catch (const PreconditionError& e) {
        report.verdict = Verdict::Inconclusive;
        report.note = e.what();
    }
    return report;
}

}  // namespace metslope
