#include "metslope/io.hpp"

#include "metslope/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace metslope {

namespace {

struct CsvRow {
    std::size_t line = 0;
    std::vector<std::string> cells;
};

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.push_back(trim(std::string_view(line).substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return cells;
}

// Reads rows after a mandatory header whose leading columns must equal
// `required`; `optional` columns may follow.
std::vector<CsvRow> read_table(std::istream& in, const std::vector<std::string>& required,
                               const std::vector<std::string>& optional,
                               std::size_t* columns = nullptr) {
    std::string line;
    std::size_t number = 0;
    std::optional<std::vector<std::string>> header;
    std::vector<CsvRow> rows;
    while (std::getline(in, line)) {
        ++number;
        const std::string text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        auto cells = split(text);
        if (!header) {
            const bool ok = cells.size() >= required.size() &&
                            cells.size() <= required.size() + optional.size() &&
                            std::equal(required.begin(), required.end(), cells.begin()) &&
                            std::equal(cells.begin() + static_cast<std::ptrdiff_t>(required.size()),
                                       cells.end(), optional.begin());
            if (!ok) {
                std::string expected;
                for (const auto& c : required) expected += (expected.empty() ? "" : ",") + c;
                throw Error(ErrorCode::ParseError,
                            "line " + std::to_string(number) + ": expected header '" + expected +
                                "', got '" + text + "'");
            }
            header = std::move(cells);
            continue;
        }
        if (cells.size() != header->size()) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(number) + ": expected " +
                                                   std::to_string(header->size()) + " columns");
        }
        rows.push_back({number, std::move(cells)});
    }
    if (!header) throw Error(ErrorCode::ParseError, "missing header line");
    if (columns) *columns = header->size();
    return rows;
}

double parse_real(const CsvRow& row, std::size_t col) {
    const std::string& s = row.cells[col];
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(row.line) + ": '" + s + "' is not a number");
}

std::size_t parse_index(const CsvRow& row, std::size_t col) {
    const std::string& s = row.cells[col];
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(row.line) + ": '" + s + "' is not a point index");
    }
    return v;
}

std::ifstream open(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path.string());
    return in;
}

nlohmann::ordered_json number_or_null(double v) {
    return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

std::string format_number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", v);
    return buffer;
}

std::string format_slope(const SlopeValue& s) {
    return s.is_infinite() ? "inf" : format_number(s.value());
}

MetricSpaceGraph read_graph_csv(std::istream& in, MetricMode mode, std::size_t min_points) {
    const auto rows = read_table(in, {"u", "v", "length"}, {});
    std::vector<EdgeSpec> edges;
    std::size_t n = min_points;
    for (const auto& row : rows) {
        EdgeSpec e{parse_index(row, 0), parse_index(row, 1), parse_real(row, 2)};
        n = std::max({n, e.u + 1, e.v + 1});
        edges.push_back(e);
    }
    return build_graph(std::max<std::size_t>(n, 1), edges, mode);
}

MetricSpaceGraph read_coordinates_csv(std::istream& in, const MetricSpaceGraph& space) {
    std::size_t columns = 0;
    const auto rows = read_table(in, {"point", "x"}, {"y"}, &columns);
    const std::size_t dim = columns - 1;
    std::vector<double> coords(space.size() * dim, 0.0);
    std::vector<char> seen(space.size(), 0);
    for (const auto& row : rows) {
        const std::size_t p = parse_index(row, 0);
        if (p >= space.size()) {
            throw Error(ErrorCode::InvalidPoint, "line " + std::to_string(row.line) +
                                                     ": point " + std::to_string(p));
        }
        if (seen[p]) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(row.line) +
                                                   ": repeated point " + std::to_string(p));
        }
        seen[p] = 1;
        for (std::size_t k = 0; k < dim; ++k) coords[p * dim + k] = parse_real(row, k + 1);
    }
    if (std::count(seen.begin(), seen.end(), 0) != 0) {
        throw Error(ErrorCode::ParseError, "coordinates missing for some points");
    }
    return space.with_coordinates(dim, std::move(coords));
}

MetricSpaceGraph read_graph_file(const std::filesystem::path& path, MetricMode mode,
                                 const std::optional<std::filesystem::path>& coords) {
    std::size_t min_points = 0;
    std::string coord_text;
    if (coords) {
        auto in = open(*coords);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        coord_text = buffer.str();
        std::istringstream scan(coord_text);
        for (const auto& row : read_table(scan, {"point", "x"}, {"y"})) {
            min_points = std::max(min_points, parse_index(row, 0) + 1);
        }
    }
    auto in = open(path);
    auto space = read_graph_csv(in, mode, min_points);
    if (!coords) return space;
    std::istringstream coord_in(coord_text);
    return read_coordinates_csv(coord_in, space);
}

ScalarField read_field_csv(std::istream& in, const MetricSpaceGraph& space) {
    const auto values = read_values_csv(in);
    std::vector<double> out(space.size());
    if (values.size() != space.size() ||
        (!values.empty() && values.rbegin()->first.value >= space.size())) {
        throw Error(ErrorCode::FieldSpaceMismatch,
                    "field file must give exactly one value per point (" +
                        std::to_string(space.size()) + " points)");
    }
    for (const auto& [p, v] : values) out[p.value] = v;
    return ScalarField(space, std::move(out));
}

ScalarField read_field_file(const std::filesystem::path& path, const MetricSpaceGraph& space) {
    auto in = open(path);
    return read_field_csv(in, space);
}

SlopeField read_slope_csv(std::istream& in, std::size_t n) {
    std::size_t columns = 0;
    const auto rows = read_table(in, {"point", "slope"}, {"is_infinite"}, &columns);
    std::vector<std::optional<SlopeValue>> values(n);
    for (const auto& row : rows) {
        const std::size_t p = parse_index(row, 0);
        if (p >= n) throw Error(ErrorCode::InvalidPoint, "slope for point " + std::to_string(p));
        if (values[p]) throw Error(ErrorCode::ParseError, "repeated point " + std::to_string(p));
        const bool infinite = (columns == 3 && row.cells[2] == "1") || row.cells[1] == "inf";
        values[p] = infinite ? SlopeValue::infinite() : SlopeValue::finite(parse_real(row, 1));
    }
    SlopeField field;
    for (std::size_t i = 0; i < n; ++i) {
        if (!values[i]) throw Error(ErrorCode::ParseError, "no slope for point " + std::to_string(i));
        field.values.push_back(*values[i]);
    }
    return field;
}

SlopeField read_slope_file(const std::filesystem::path& path, std::size_t n) {
    auto in = open(path);
    return read_slope_csv(in, n);
}

std::map<PointId, double> read_values_csv(std::istream& in) {
    std::map<PointId, double> values;
    for (const auto& row : read_table(in, {"point", "value"}, {})) {
        const PointId p{parse_index(row, 0)};
        if (!values.emplace(p, parse_real(row, 1)).second) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(row.line) +
                                                   ": repeated point " + std::to_string(p.value));
        }
    }
    return values;
}

std::map<PointId, double> read_values_file(const std::filesystem::path& path) {
    auto in = open(path);
    return read_values_csv(in);
}

void write_field_csv(std::ostream& out, const ScalarField& f) {
    out << "point,value\n";
    for (std::size_t i = 0; i < f.size(); ++i) {
        out << i << ',' << format_number(f.values()[i]) << '\n';
    }
}

void write_slope_csv(std::ostream& out, const SlopeField& slopes) {
    out << "point,slope,is_infinite\n";
    for (std::size_t i = 0; i < slopes.size(); ++i) {
        const auto& s = slopes.values[i];
        out << i << ',' << format_slope(s) << ',' << (s.is_infinite() ? 1 : 0) << '\n';
    }
}

void write_critical_csv(std::ostream& out, const CriticalSet& crit, const SlopeField& slopes) {
    out << "# tol=" << format_number(crit.tol) << '\n';
    out << "point,slope\n";
    for (const PointId z : crit.members) out << z.value << ',' << format_slope(slopes[z]) << '\n';
}

void write_path_csv(std::ostream& out, const DescentPath& path) {
    out << "step,point,f,f_minus_g\n";
    for (std::size_t k = 0; k < path.points.size(); ++k) {
        out << k << ',' << path.points[k].value << ',' << format_number(path.f_values[k]) << ','
            << format_number(path.diff_values[k]) << '\n';
    }
    out << "# terminal_critical=" << (path.terminal_critical ? 1 : 0);
    if (path.diagnostic) out << " diagnostic=\"" << *path.diagnostic << '"';
    out << '\n';
}

void write_profile_csv(std::ostream& out, const std::vector<DeltaSlopeEntry>& profile) {
    out << "delta,slope,is_infinite,empty_ball\n";
    for (const auto& e : profile) {
        out << format_number(e.delta) << ',' << format_slope(e.slope) << ','
            << (e.slope.is_infinite() ? 1 : 0) << ',' << (e.empty_ball ? 1 : 0) << '\n';
    }
}

nlohmann::ordered_json slope_json(const SlopeField& slopes) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < slopes.size(); ++i) {
        const auto& s = slopes.values[i];
        rows.push_back({{"point", i}, {"slope", number_or_null(s.value())},
                        {"is_infinite", s.is_infinite()}});
    }
    return {{"provenance", to_string(slopes.provenance)},
            {"overflow_cap", slopes.overflow_cap},
            {"slopes", rows}};
}

nlohmann::ordered_json critical_json(const CriticalSet& crit, const SlopeField& slopes) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const PointId z : crit.members) {
        rows.push_back({{"point", z.value}, {"slope", slopes[z].value()}});
    }
    return {{"tol", crit.tol}, {"critical", rows}};
}

nlohmann::ordered_json path_json(const DescentPath& path) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < path.points.size(); ++k) {
        rows.push_back({{"step", k}, {"point", path.points[k].value}, {"f", path.f_values[k]},
                        {"f_minus_g", path.diff_values[k]}});
    }
    nlohmann::ordered_json out{{"path", rows}, {"terminal_critical", path.terminal_critical}};
    out["diagnostic"] = path.diagnostic ? nlohmann::ordered_json(*path.diagnostic)
                                        : nlohmann::ordered_json(nullptr);
    return out;
}

nlohmann::ordered_json report_json(const DeterminationReport& report) {
    using json = nlohmann::ordered_json;
    json out;
    out["verdict"] = to_string(report.verdict);
    out["constant"] = report.constant ? json(*report.constant) : json(nullptr);
    out["residual"] = number_or_null(report.residual);

    json violated = json::array();
    for (const auto h : report.violated) violated.push_back(to_string(h));
    out["violated"] = violated;

    json diagnostics = json::object();
    if (report.diagnostics) {
        const auto& d = *report.diagnostics;
        const auto point_or_null = [](const std::optional<PointId>& p) {
            return p ? json(p->value) : json(nullptr);
        };
        diagnostics["slopes_finite"] = {{"pass", d.slopes_finite.pass},
                                        {"worst_point", point_or_null(d.slopes_finite.worst_point)},
                                        {"field", d.slopes_finite.field}};
        diagnostics["slopes_equal"] = {{"pass", d.slopes_equal.pass},
                                       {"max_gap", number_or_null(d.slopes_equal.max_gap)},
                                       {"worst_point", point_or_null(d.slopes_equal.worst_point)}};
        json only_f = json::array();
        json only_g = json::array();
        for (const auto p : d.crit_sets_equal.only_in_f) only_f.push_back(p.value);
        for (const auto p : d.crit_sets_equal.only_in_g) only_g.push_back(p.value);
        diagnostics["crit_sets_equal"] = {{"pass", d.crit_sets_equal.pass},
                                          {"only_in_f", only_f},
                                          {"only_in_g", only_g}};
        const auto& c = d.diff_constant_on_crit;
        diagnostics["diff_constant_on_crit"] = {{"pass", c.pass},
                                                {"spread", c.spread},
                                                {"min_point", c.min_point.value},
                                                {"min_value", c.min_value},
                                                {"max_point", c.max_point.value},
                                                {"max_value", c.max_value}};
        diagnostics["critical_points"] = d.crit_f.size();
    }
    out["diagnostics"] = diagnostics;

    json witnesses = json::array();
    for (const auto& w : report.witnesses) {
        witnesses.push_back({{"point", w.point.value},
                             {"hypothesis", to_string(w.hypothesis)},
                             {"f", w.f_value},
                             {"g", w.g_value},
                             {"slope_f", number_or_null(w.slope_f)},
                             {"slope_g", number_or_null(w.slope_g)}});
    }
    out["witnesses"] = witnesses;
    out["tolerances"] = {{"slope", report.tolerances.slope},
                         {"crit", report.tolerances.crit},
                         {"residual", report.tolerances.residual},
                         {"overflow_cap", report.overflow_cap}};
    out["slope_provenance"] = report.slope_provenance;
    out["note"] = report.note;
    return out;
}

nlohmann::ordered_json inadmissible_json(const std::vector<ReconstructionWitness>& witnesses) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& w : witnesses) {
        rows.push_back({{"point", w.point.value},
                        {"expected_slope", w.expected_slope},
                        {"recomputed_slope", w.recomputed_slope},
                        {"value", w.value}});
    }
    return {{"admissible", false}, {"witnesses", rows}};
}

const std::vector<std::string>& report_schema_fields() {
    static const std::vector<std::string> fields{
        "verdict",   "constant",   "residual",         "violated", "diagnostics",
        "witnesses", "tolerances", "slope_provenance", "note"};
    return fields;
}

}  // namespace metslope
