#pragma once

// CSV and JSON file formats.
//
//   graph        u,v,length          (header required, '#' comments)
//   coordinates  point,x[,y]
//   field        point,value
//   slopes       point,slope,is_infinite   (is_infinite optional on input)
//   critical     point,slope          (tolerance in a '# tol=' comment)
//   path         step,point,f,f_minus_g + '# terminal_critical=0|1' trailer
//
// Numbers are printed with 17 significant digits.

#include "metslope/descent.hpp"
#include "metslope/determination.hpp"
#include "metslope/reconstruct.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace metslope {

std::string format_number(double v);
std::string format_slope(const SlopeValue& s);  // "inf" for Infinite

MetricSpaceGraph read_graph_csv(std::istream& in, MetricMode mode = MetricMode::EdgeLocal,
                                std::size_t min_points = 0);
MetricSpaceGraph read_graph_file(const std::filesystem::path& path,
                                 MetricMode mode = MetricMode::EdgeLocal,
                                 const std::optional<std::filesystem::path>& coords = std::nullopt);

/// Attaches coordinates read from `point,x[,y]` rows.
MetricSpaceGraph read_coordinates_csv(std::istream& in, const MetricSpaceGraph& space);

/// Requires exactly one row per point.
ScalarField read_field_csv(std::istream& in, const MetricSpaceGraph& space);
ScalarField read_field_file(const std::filesystem::path& path, const MetricSpaceGraph& space);

SlopeField read_slope_csv(std::istream& in, std::size_t n);
SlopeField read_slope_file(const std::filesystem::path& path, std::size_t n);

std::map<PointId, double> read_values_csv(std::istream& in);
std::map<PointId, double> read_values_file(const std::filesystem::path& path);

void write_field_csv(std::ostream& out, const ScalarField& f);
void write_slope_csv(std::ostream& out, const SlopeField& slopes);
void write_critical_csv(std::ostream& out, const CriticalSet& crit, const SlopeField& slopes);
void write_path_csv(std::ostream& out, const DescentPath& path);
void write_profile_csv(std::ostream& out, const std::vector<DeltaSlopeEntry>& profile);

nlohmann::ordered_json slope_json(const SlopeField& slopes);
nlohmann::ordered_json critical_json(const CriticalSet& crit, const SlopeField& slopes);
nlohmann::ordered_json path_json(const DescentPath& path);
nlohmann::ordered_json report_json(const DeterminationReport& report);
nlohmann::ordered_json inadmissible_json(const std::vector<ReconstructionWitness>& witnesses);

/// Top-level keys every determination report carries.
const std::vector<std::string>& report_schema_fields();

}  // namespace metslope
