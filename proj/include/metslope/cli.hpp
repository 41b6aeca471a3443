#pragma once

#include <iosfwd>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace metslope::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_hypothesis_violated = 2;
inline constexpr int exit_inconclusive = 3;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 64;
inline constexpr int exit_internal = 70;
inline constexpr int exit_io = 74;

struct RunConfig {
    std::string subcommand;

    std::optional<std::string> space_path;
    std::optional<std::string> coords_path;
    std::optional<std::string> interval;  // "a,b,n"
    bool closure = false;

    std::optional<std::string> f_path;
    std::optional<std::string> g_path;
    std::optional<std::string> slopes_path;
    std::optional<std::string> crit_values_path;

    std::optional<double> tol_slope;
    std::optional<double> tol_crit;
    std::optional<double> tol_residual;
    std::optional<double> lipschitz;  // switches determine to sampled-data defaults
    double tol_reconstruct = 1e-9;
    double cap = 1e12;
    std::string format = "csv";
    unsigned threads = 1;

    std::optional<std::size_t> start;
    std::optional<std::size_t> max_steps;
    std::optional<std::size_t> point;
    std::vector<double> deltas;

    std::string figure;
    std::optional<double> lo;
    std::optional<double> hi;
    std::optional<std::size_t> points;
    int level = 8;

    std::uint64_t seed = 0;
    std::size_t trials = 100;
};

/// Executes one subcommand. Output goes to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to run().
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace metslope::cli
