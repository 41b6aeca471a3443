#include "metslope/gallery.hpp"

#include "metslope/error.hpp"
#include "metslope/io.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

namespace metslope {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double half_pi = std::numbers::pi / 2.0;

double square_sine(double x) {
    if (x < -half_pi) return (x + half_pi) * (x + half_pi) - 1.0;
    if (x <= half_pi) return std::sin(x);
    return (x - half_pi) * (x - half_pi) + 1.0;
}

SlopeValue square_sine_slope(double x) {
    if (std::abs(x) <= half_pi) return SlopeValue::finite(std::max(0.0, std::cos(x)));
    return SlopeValue::finite(2.0 * (std::abs(x) - half_pi));
}

void require_unit_domain(double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw Error(ErrorCode::OutOfDomain, "Cantor approximant defined on [0,1], got " +
                                                std::to_string(t));
    }
}

}  // namespace

AnalyticPair arctan_pair() {
    const auto slope = [](double t) { return SlopeValue::finite(1.0 / (t * t + 1.0)); };
    AnalyticFunction1D f{"arctan", [](double t) { return std::atan(t); }, slope, {-5.0, 5.0}};
    AnalyticFunction1D g{"-arctan", [](double t) { return -std::atan(t); }, slope, {-5.0, 5.0}};
    return {std::move(f), std::move(g)};
}

AnalyticPair square_sine_pair() {
    AnalyticFunction1D f{"square-sine", square_sine, square_sine_slope, {-pi, pi}};
    AnalyticFunction1D g{"square-sine-mirrored", [](double x) { return square_sine(-x); },
                         [](double x) { return square_sine_slope(-x); }, {-pi, pi}};
    return {std::move(f), std::move(g)};
}

double cantor_approx(int level, double t) {
    require_unit_domain(t);
    if (level < 0) throw Error(ErrorCode::OutOfDomain, "level must be >= 0");
    // Unrolled self-similar recursion: accumulate offset and weight.
    double offset = 0.0;
    double weight = 1.0;
    for (int k = 0; k < level; ++k) {
        weight *= 0.5;
        if (t <= 1.0 / 3.0) {
            t = std::min(1.0, 3.0 * t);
        } else if (t < 2.0 / 3.0) {
            return offset + weight;
        } else {
            offset += weight;
            t = std::clamp(3.0 * t - 2.0, 0.0, 1.0);
        }
    }
    return offset + weight * t;
}

double cantor_left_derivative(int level, double t) {
    require_unit_domain(t);
    if (level < 0) throw Error(ErrorCode::OutOfDomain, "level must be >= 0");
    // Breakpoints are compared with a slack in rescaled coordinates, where
    // rounding grows by at most 3^level ulps.
    constexpr double slack = 1e-9;
    if (t <= slack * std::pow(3.0, -level)) return 0.0;
    double scale = 1.0;
    for (int k = 0; k < level; ++k) {
        if (t <= 1.0 / 3.0 + slack) {
            t = 3.0 * t;
        } else if (t <= 2.0 / 3.0 + slack) {
            return 0.0;
        } else {
            t = 3.0 * t - 2.0;
        }
        scale *= 1.5;
    }
    return scale;
}

CantorPair cantor_pair(int level) {
    if (level < 0) throw Error(ErrorCode::OutOfDomain, "level must be >= 0");
    CantorPair pair;
    pair.level = level;
    pair.f = {"cantor+t", [level](double t) { return cantor_approx(level, t) + t; },
              [level](double t) {
                  return SlopeValue::finite(t == 0.0 ? 0.0 : 1.0 + cantor_left_derivative(level, t));
              },
              {0.0, 1.0}};
    pair.g = {"2cantor+t", [level](double t) { return 2.0 * cantor_approx(level, t) + t; },
              [level](double t) {
                  return SlopeValue::finite(t == 0.0 ? 0.0
                                                     : 1.0 + 2.0 * cantor_left_derivative(level, t));
              },
              {0.0, 1.0}};
    pair.limiting_slopes = "|grad f|(0) = |grad g|(0) = 0; |grad f|(t) = |grad g|(t) in {1, +inf} on (0,1]";
    return pair;
}

ScalarField sample_field(const MetricSpaceGraph& space, const AnalyticFunction1D& fn) {
    if (space.dimension() != 1) {
        throw Error(ErrorCode::NoMetricClosure, "sampling needs 1-D point coordinates");
    }
    std::vector<double> values(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) {
        values[i] = fn.value(space.coordinate(PointId{i})[0]);
    }
    return ScalarField(space, std::move(values));
}

Figure parse_figure(const std::string& tag) {
    if (tag == "fig1") return Figure::Arctan;
    if (tag == "fig2") return Figure::SquareSine;
    if (tag == "fig3") return Figure::Cantor;
    throw Error(ErrorCode::UnknownFigure, "unknown figure '" + tag + "' (fig1, fig2, fig3)");
}

void emit_figure_data(Figure which, const FigureGrid& grid, FigureFormat format,
                      std::ostream& out) {
    AnalyticPair pair;
    double lo = 0.0;
    double hi = 0.0;
    std::size_t points = 0;
    std::string caption;
    switch (which) {
        case Figure::Arctan:
            pair = arctan_pair();
            lo = -5.0, hi = 5.0, points = 10001;
            caption = "f(t) = arctan(t), g(t) = -arctan(t)";
            break;
        case Figure::SquareSine:
            pair = square_sine_pair();
            lo = -pi, hi = pi, points = 6285;
            caption = "f piecewise square/sine, g(x) = f(-x)";
            break;
        case Figure::Cantor: {
            auto cantor = cantor_pair(grid.cantor_level);
            pair = {std::move(cantor.f), std::move(cantor.g)};
            lo = 0.0, hi = 1.0;
            points = static_cast<std::size_t>(std::llround(std::pow(3.0, grid.cantor_level))) + 1;
            caption = "f(t) = c(t) + t, g(t) = 2c(t) + t, Cantor level " +
                      std::to_string(grid.cantor_level);
            break;
        }
    }
    lo = grid.lo.value_or(lo);
    hi = grid.hi.value_or(hi);
    points = grid.points.value_or(points);

    const auto space = sample_interval(lo, hi, points);
    const auto f = sample_field(space, pair.first);
    const auto g = sample_field(space, pair.second);
    const auto discrete = slope_field(space, f);

    if (format == FigureFormat::Gnuplot) {
        out << "# " << caption << "\n";
        out << "# grid: [" << format_number(lo) << ", " << format_number(hi) << "], " << points
            << " points\n";
        out << "# t f g slope_f_analytic slope_f_discrete\n";
    } else {
        out << "t,f,g,slope_f_analytic,slope_f_discrete\n";
    }
    const char sep = format == FigureFormat::Gnuplot ? ' ' : ',';
    for (std::size_t i = 0; i < points; ++i) {
        const PointId x{i};
        const double t = space.coordinate(x)[0];
        out << format_number(t) << sep << format_number(f[x]) << sep << format_number(g[x]) << sep
            << format_slope(pair.first.analytic_slope(t)) << sep << format_slope(discrete[x])
            << "\n";
    }
}

}  // namespace metslope
