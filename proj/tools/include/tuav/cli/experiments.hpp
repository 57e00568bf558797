#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "tuav/channel_model.hpp"
#include "tuav/cli/config_file.hpp"
#include "tuav/placement_optimizer.hpp"
#include "tuav/theta_min_model.hpp"

namespace tuav::cli {

inline constexpr char const* kToolVersion = "0.1.0";

/// "%.9g": nine significant digits, '.' separator.
std::string format_number(double v);

nlohmann::json solution_to_json(PlacementSolution const& sol, PathLossMode mode);
nlohmann::json closed_form_to_json(SuboptimalClosedForm const& closed);
nlohmann::json bounds_to_json(PlacementConfig const& cfg, OptBounds const& bounds,
                              Environment const& env, PathLossMode mode);

/// Instance for sweep point i, with the swept variable substituted.
PlacementConfig sweep_point_config(RunConfig const& cfg, std::size_t i);

struct SweepRow
{
    double value = 0.0;
    PlacementSolution optimal;
    PlacementSolution sub;
    OptBounds bounds;
    double pl_lower_db = 0.0;  // PL at the lower end of the reduced set
    double pl_upper_db = 0.0;  // PL at the upper end
};

/// Evaluates every sweep point; rows come back in sweep order.
std::vector<SweepRow> run_sweep(RunConfig const& cfg, unsigned threads = 0);
void write_sweep_csv(std::ostream& out, SweepVariable var, std::span<SweepRow const> rows);

struct ThetaMinTable
{
    std::string environment;
    std::vector<double> thetas;  // rad
    std::vector<double> analytic;
    std::optional<std::vector<double>> empirical;
    double mean_rad = 0.0;
};

ThetaMinTable run_theta_min(CityModel const& city, std::string environment,
                            std::size_t grid, std::size_t samples, std::uint64_t seed,
                            unsigned threads = 0);
/// Rows theta_deg,F_analytic[,F_empirical] then a trailing
/// mean_theta_min_deg,<value> record.
void write_theta_min_csv(std::ostream& out, ThetaMinTable const& table);

struct RunManifest
{
    std::string command;
    nlohmann::json config;
    std::vector<std::uint64_t> seeds;
    std::vector<std::string> outputs;
    double wall_clock_s = 0.0;

    nlohmann::json to_json() const;
};

}  // namespace tuav::cli
