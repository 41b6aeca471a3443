#pragma once

// Closed-form one-dimensional examples where the determination implication
// fails, each for a different missing hypothesis:
//   arctan pair       no critical points
//   square/sine pair  different values of g - f on the critical set
//   Cantor pair       slope not finite everywhere

#include "metslope/slope.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

namespace metslope {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

struct AnalyticFunction1D {
    std::string name;
    std::function<double(double)> value;
    std::function<SlopeValue(double)> analytic_slope;
    Interval domain;
};

using AnalyticPair = std::pair<AnalyticFunction1D, AnalyticFunction1D>;

/// f = arctan, g = -arctan; both slopes 1/(1+t^2).
AnalyticPair arctan_pair();

/// f = (x+pi/2)^2 - 1 left of -pi/2, sin x on [-pi/2, pi/2],
/// (x-pi/2)^2 + 1 right of pi/2; g(x) = f(-x). Slope cos x inside,
/// 2(|x| - pi/2) outside.
AnalyticPair square_sine_pair();

/// Level-k approximant of the Cantor staircase:
/// c_0(t) = t, c_{k+1}(t) = c_k(3t)/2 on [0,1/3], 1/2 on [1/3,2/3],
/// 1/2 + c_k(3t-2)/2 on [2/3,1].
double cantor_approx(int level, double t);

/// Left derivative of cantor_approx (0 or (3/2)^k away from breakpoints).
double cantor_left_derivative(int level, double t);

struct CantorPair {
    AnalyticFunction1D f;  // c_k + t
    AnalyticFunction1D g;  // 2 c_k + t
    int level = 0;
    /// Slopes of the limiting pair: 0 at t = 0, in {1, +inf} on (0, 1].
    std::string limiting_slopes;
};

/// The analytic slope of each member is the exact metric slope of the
/// level-k approximant (its left derivative, 0 at t = 0).
CantorPair cantor_pair(int level);

/// Samples a function on a space whose points carry 1-D coordinates.
ScalarField sample_field(const MetricSpaceGraph& space, const AnalyticFunction1D& fn);

enum class Figure { Arctan, SquareSine, Cantor };

Figure parse_figure(const std::string& tag);  // "fig1" | "fig2" | "fig3"

struct FigureGrid {
    std::optional<double> lo;
    std::optional<double> hi;
    std::optional<std::size_t> points;
    int cantor_level = 8;
};

enum class FigureFormat { Csv, Gnuplot };

/// Columns t,f,g,slope_f_analytic,slope_f_discrete over a uniform grid.
/// Defaults: fig1 [-5,5] 10001 points, fig2 [-pi,pi] 6285 points,
/// fig3 [0,1] 3^level + 1 points.
void emit_figure_data(Figure which, const FigureGrid& grid, FigureFormat format,
                      std::ostream& out);

}  // namespace metslope
