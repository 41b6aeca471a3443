#include "metslope/cli.hpp"

#include "metslope/determination.hpp"
#include "metslope/error.hpp"
#include "metslope/gallery.hpp"
#include "metslope/instances.hpp"
#include "metslope/io.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace metslope::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const std::string& require(const std::optional<std::string>& value, const char* flag) {
    if (!value) throw UsageError(std::string("missing required option ") + flag);
    return *value;
}

MetricSpaceGraph load_space(const RunConfig& c) {
    if (c.interval) {
        std::vector<std::string> parts;
        std::stringstream ss(*c.interval);
        for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
        if (parts.size() != 3) throw UsageError("--interval expects a,b,n");
        try {
            return sample_interval(std::stod(parts[0]), std::stod(parts[1]),
                                   static_cast<std::size_t>(std::stoull(parts[2])));
        } catch (const std::logic_error&) {
            throw UsageError("--interval expects numbers a,b,n");
        }
    }
    const auto mode = c.closure ? MetricMode::ShortestPathClosure : MetricMode::EdgeLocal;
    std::optional<std::filesystem::path> coords;
    if (c.coords_path) coords = *c.coords_path;
    return read_graph_file(require(c.space_path, "--space or --interval"), mode, coords);
}

SlopeOptions slope_options(const RunConfig& c) { return SlopeOptions{c.cap, c.threads}; }

bool json_output(const RunConfig& c) {
    if (c.format == "json") return true;
    if (c.format == "csv") return false;
    throw UsageError("--format must be csv or json");
}

int run_slope(const RunConfig& c, std::ostream& out) {
    const auto space = load_space(c);
    const auto f = read_field_file(require(c.f_path, "--f"), space);
    if (c.point) {
        if (c.deltas.empty()) throw UsageError("--point needs --deltas");
        const auto profile = delta_slope_profile(space, f, PointId{*c.point}, c.deltas,
                                                 slope_options(c));
        write_profile_csv(out, profile);
        return exit_ok;
    }
    const auto slopes = slope_field(space, f, slope_options(c));
    if (json_output(c)) {
        out << slope_json(slopes).dump(2) << '\n';
    } else {
        write_slope_csv(out, slopes);
    }
    return exit_ok;
}

int run_crit(const RunConfig& c, std::ostream& out) {
    SlopeField slopes;
    if (c.slopes_path) {
        std::size_t n = 0;
        if (c.space_path || c.interval) {
            n = load_space(c).size();
        } else {
            // Without a space the point count comes from the slope file itself.
            std::ifstream probe(*c.slopes_path);
            if (!probe) throw Error(ErrorCode::IoFailure, "cannot open " + *c.slopes_path);
            std::string line;
            while (std::getline(probe, line)) {
                if (line.empty() || line[0] == '#' || line.rfind("point", 0) == 0) continue;
                n = std::max<std::size_t>(n, std::stoull(line.substr(0, line.find(','))) + 1);
            }
        }
        slopes = read_slope_file(*c.slopes_path, n);
    } else {
        const auto space = load_space(c);
        slopes = slope_field(space, read_field_file(require(c.f_path, "--f or --slopes"), space),
                             slope_options(c));
    }
    const auto crit = critical_set(slopes, c.tol_crit.value_or(0.0));
    if (json_output(c)) {
        out << critical_json(crit, slopes).dump(2) << '\n';
    } else {
        write_critical_csv(out, crit, slopes);
    }
    return exit_ok;
}

int run_descend(const RunConfig& c, std::ostream& out) {
    const auto space = load_space(c);
    const auto f = read_field_file(require(c.f_path, "--f"), space);
    const auto g = read_field_file(require(c.g_path, "--g"), space);
    if (!c.start) throw UsageError("missing required option --start");
    const auto crit = critical_set(slope_field(space, f, slope_options(c)), c.tol_crit.value_or(0.0));
    const auto path = descent_path(space, f, g, PointId{*c.start}, crit,
                                   c.max_steps.value_or(space.size()), slope_options(c));
    if (json_output(c)) {
        out << path_json(path).dump(2) << '\n';
    } else {
        write_path_csv(out, path);
    }
    return path.terminal_critical ? exit_ok : exit_inconclusive;
}

Tolerances determine_tolerances(const RunConfig& c, const MetricSpaceGraph& space) {
    Tolerances tol = exact_graph_tolerances();
    if (c.lipschitz) {
        const auto h = space.grid_spacing();
        if (!h) throw UsageError("--lipschitz needs a sampled space (--interval)");
        tol = sampled_tolerances(*h, *c.lipschitz);
    }
    if (c.tol_slope) tol.slope = *c.tol_slope;
    if (c.tol_crit) {
        tol.crit = *c.tol_crit;
        if (!c.tol_residual) tol.residual = 1e-9 + tol.crit;
    }
    if (c.tol_residual) tol.residual = *c.tol_residual;
    return tol;
}

int run_determine(const RunConfig& c, std::ostream& out) {
    const auto space = load_space(c);
    const auto f = read_field_file(require(c.f_path, "--f"), space);
    const auto g = read_field_file(require(c.g_path, "--g"), space);
    const auto report = determine(space, f, g, determine_tolerances(c, space), slope_options(c));
    out << report_json(report).dump(2) << '\n';
    switch (report.verdict) {
        case Verdict::EqualUpToConstant: return exit_ok;
        case Verdict::HypothesisViolated: return exit_hypothesis_violated;
        case Verdict::Inconclusive: return exit_inconclusive;
    }
    return exit_internal;
}

int run_reconstruct(const RunConfig& c, std::ostream& out) {
    const auto space = load_space(c);
    SlopeData data;
    data.slopes = read_slope_file(require(c.slopes_path, "--slopes"), space.size());
    data.crit_values = read_values_file(require(c.crit_values_path, "--crit-values"));
    auto result = reconstruct(space, data, c.tol_reconstruct, slope_options(c));
    if (const auto* field = std::get_if<ScalarField>(&result)) {
        write_field_csv(out, *field);
        return exit_ok;
    }
    out << inadmissible_json(std::get<Inadmissible>(result).witnesses).dump(2) << '\n';
    return exit_hypothesis_violated;
}

int run_gallery(const RunConfig& c, std::ostream& out) {
    FigureFormat format = FigureFormat::Csv;
    if (c.format == "gnuplot") {
        format = FigureFormat::Gnuplot;
    } else if (c.format != "csv") {
        throw UsageError("gallery --format must be csv or gnuplot");
    }
    FigureGrid grid{c.lo, c.hi, c.points, c.level};
    emit_figure_data(parse_figure(c.figure), grid, format, out);
    return exit_ok;
}

// Randomized property driver over seeded instances.
int run_check(const RunConfig& c, std::ostream& out) {
    Rng rng(c.seed);
    std::size_t step_failures = 0;
    std::size_t descent_failures = 0;
    std::size_t determination_failures = 0;
    std::size_t reconstruction_failures = 0;
    for (std::size_t trial = 0; trial < c.trials; ++trial) {
        const std::size_t n = uniform_index(rng, 2, 50);
        const auto space = random_connected_graph(rng, n);
        const auto f = random_field(rng, space);
        const auto g = scale_field(f, uniform_real(rng, 0.01, 0.9));
        const auto crit = critical_set(slope_field(space, f));

        for (std::size_t i = 0; i < n; ++i) {
            const PointId x{i};
            if (crit.contains(x)) continue;
            const auto step = descent_step(space, f, g, x, crit);
            const auto* z = std::get_if<PointId>(&step);
            if (!z || !(f[*z] < f[x]) || !(f[*z] - g[*z] < f[x] - g[x])) ++step_failures;
            const auto path = descent_path(space, f, g, x, crit, n);
            const auto floor = comparison_floor(space, f, g, x, crit);
            if (!path.terminal_critical || path.points.size() > n || !floor ||
                !(f[x] - g[x] > *floor)) {
                ++descent_failures;
            }
        }

        const double shift = uniform_real(rng, -10.0, 10.0);
        const auto report = determine(space, f, shift_field(f, shift), exact_graph_tolerances());
        if (report.verdict != Verdict::EqualUpToConstant || !report.constant ||
            std::abs(*report.constant - shift) > 1e-12 || report.residual > 1e-12) {
            ++determination_failures;
        }

        const auto rebuilt = reconstruct(space, extract_slope_data(space, f), 1e-9);
        const auto* field = std::get_if<ScalarField>(&rebuilt);
        bool ok = field != nullptr;
        for (std::size_t i = 0; ok && i < n; ++i) {
            ok = std::abs(field->values()[i] - f.values()[i]) <= 1e-9;
        }
        if (!ok) ++reconstruction_failures;
    }
    const auto line = [&](const char* name, std::size_t failures) {
        out << (failures == 0 ? "PASS " : "FAIL ") << name << " failures=" << failures << '\n';
    };
    out << "# seed=" << c.seed << " trials=" << c.trials << '\n';
    line("descent_step_exists", step_failures);
    line("descent_path_and_strict_comparison", descent_failures);
    line("determination_shift", determination_failures);
    line("reconstruction_round_trip", reconstruction_failures);
    const bool all = step_failures + descent_failures + determination_failures +
                         reconstruction_failures == 0;
    return all ? exit_ok : exit_check_failed;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidPoint:
        case ErrorCode::NegativeTolerance:
        case ErrorCode::NonPositiveScale:
        case ErrorCode::UnknownFigure:
        case ErrorCode::OutOfDomain:
        case ErrorCode::DegenerateInterval:
        case ErrorCode::TooFewPoints:
        case ErrorCode::NoMetricClosure:
        case ErrorCode::EmptyDeltaList:
        case ErrorCode::NonDecreasingDeltas:
        case ErrorCode::PointIsCritical:
            return exit_usage;
        default:
            return exit_io;
    }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.subcommand == "slope") return run_slope(config, out);
        if (config.subcommand == "crit") return run_crit(config, out);
        if (config.subcommand == "descend") return run_descend(config, out);
        if (config.subcommand == "determine") return run_determine(config, out);
        if (config.subcommand == "reconstruct") return run_reconstruct(config, out);
        if (config.subcommand == "gallery") return run_gallery(config, out);
        if (config.subcommand == "check") return run_check(config, out);
        err << "error: unknown subcommand '" << config.subcommand << "'\n";
        return exit_usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Metric slopes, critical sets, descent paths and determination checks on finite metric spaces"};
    app.require_subcommand(1);
    RunConfig c;

    const auto add_space = [&c](CLI::App* sub) {
        sub->add_option("--space", c.space_path, "graph CSV (u,v,length)");
        sub->add_option("--coords", c.coords_path, "coordinates CSV (point,x[,y])");
        sub->add_option("--interval", c.interval, "sampled interval a,b,n instead of --space");
        sub->add_flag("--closure", c.closure, "use the shortest-path metric");
        sub->add_option("--cap", c.cap, "overflow cap for infinite slopes");
        sub->add_option("--threads", c.threads, "worker threads for slope fields");
    };

    auto* slope = app.add_subcommand("slope", "field -> slope CSV");
    add_space(slope);
    slope->add_option("--f", c.f_path, "field CSV (point,value)");
    slope->add_option("--format", c.format, "csv|json");
    slope->add_option("--point", c.point, "emit the radius profile at this point");
    slope->add_option("--deltas", c.deltas, "strictly decreasing radii")->delimiter(',');

    auto* crit = app.add_subcommand("crit", "slopes -> critical set CSV");
    add_space(crit);
    crit->add_option("--f", c.f_path, "field CSV");
    crit->add_option("--slopes", c.slopes_path, "slope CSV (point,slope[,is_infinite])");
    crit->add_option("--tol-crit", c.tol_crit, "critical tolerance");
    crit->add_option("--format", c.format, "csv|json");

    auto* descend = app.add_subcommand("descend", "f, g, start -> descent path CSV");
    add_space(descend);
    descend->add_option("--f", c.f_path, "field f");
    descend->add_option("--g", c.g_path, "field g");
    descend->add_option("--start", c.start, "starting point");
    descend->add_option("--tol-crit", c.tol_crit, "critical tolerance");
    descend->add_option("--max-steps", c.max_steps, "step limit (default n)");
    descend->add_option("--format", c.format, "csv|json");

    auto* det = app.add_subcommand("determine", "f, g -> JSON determination report");
    add_space(det);
    det->add_option("--f", c.f_path, "field f");
    det->add_option("--g", c.g_path, "field g");
    det->add_option("--tol-slope", c.tol_slope, "slope equality tolerance");
    det->add_option("--tol-crit", c.tol_crit, "critical tolerance");
    det->add_option("--tol-residual", c.tol_residual, "residual tolerance");
    det->add_option("--lipschitz", c.lipschitz, "Lipschitz estimate; sampled-data defaults");
    det->add_option("--format", c.format, "json");

    auto* rec = app.add_subcommand("reconstruct", "slopes + critical values -> field CSV");
    add_space(rec);
    rec->add_option("--slopes", c.slopes_path, "slope CSV");
    rec->add_option("--crit-values", c.crit_values_path, "critical values CSV (point,value)");
    rec->add_option("--tol", c.tol_reconstruct, "critical cutoff and verification tolerance");

    auto* gallery = app.add_subcommand("gallery", "figure data CSV");
    gallery->add_option("figure", c.figure, "fig1|fig2|fig3")->required();
    gallery->add_option("--format", c.format, "csv|gnuplot");
    gallery->add_option("--lo", c.lo, "grid start");
    gallery->add_option("--hi", c.hi, "grid end");
    gallery->add_option("--points", c.points, "grid size");
    gallery->add_option("--level", c.level, "Cantor level for fig3");

    auto* check = app.add_subcommand("check", "seeded randomized property checks");
    check->add_option("--seed", c.seed, "random seed");
    check->add_option("--trials", c.trials, "number of random instances");

    for (auto* sub : {slope, crit, descend, det, rec}) {
        sub->add_option("--seed", c.seed, "random seed");
        sub->add_option("--trials", c.trials, "unused outside check");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }
    c.subcommand = app.get_subcommands().front()->get_name();
    if (c.subcommand == "determine" && c.format != "json") c.format = "json";
    return run(c, out, err);
}

}  // namespace metslope::cli
