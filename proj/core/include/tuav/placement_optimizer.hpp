#pragma once

#include <cstddef>
#include <string_view>

#include "tuav/channel_model.hpp"
#include "tuav/tether_geometry.hpp"

namespace tuav {

/// Stopping tolerances of the 1-D refinement along the reduced search set.
inline constexpr double kSolveTolLength = 1e-6;  // m
inline constexpr double kSolveTolAngle = 1e-8;   // rad
inline constexpr std::size_t kSolveScanPoints = 2001;

enum class FreeVariable
{
    TetherLength,
    InclinationAngle,
};

/**
 * Reduced search set for the optimum: one tether coordinate is pinned to
 * `fixed_value` (theta_min or T_max) and the other ranges over
 * [lower, upper].
 *
 *  - NearField: theta = theta_min, t in [max(0, t*(theta_min)), d / cos(theta_min)]
 *  - MidField:  theta = theta_min, t in [max(0, t*(theta_min)), T_max]
 *  - FarField:  t = T_max, theta in [theta_min, theta*(T_max)]
 */
struct OptBounds
{
    RegimeLabel regime = RegimeLabel::NearField;
    FreeVariable free_variable = FreeVariable::TetherLength;
    double fixed_value = 0.0;
    double lower = 0.0;
    double upper = 0.0;

    /// Tether coordinate for a value of the free variable.
    TetherCoord at(double free_value) const;
    bool contains(TetherCoord const& c, double t_tol, double theta_tol) const;
};

enum class SolutionKind
{
    Optimal,
    Suboptimal,
    BruteForce,
};

std::string_view to_string(SolutionKind kind);
std::string_view to_string(FreeVariable var);

struct PlacementSolution
{
    TetherCoord coord;
    Point3 position;
    double p_los = 0.0;
    double range_r = 0.0;
    double pl_db = 0.0;
    RegimeLabel regime = RegimeLabel::NearField;
    SolutionKind kind = SolutionKind::Optimal;
};

/// Closed-form LoS-maximizing placement and its channel quantities.
struct SuboptimalClosedForm
{
    TetherCoord coord;
    double p_los = 0.0;
    double range_r = 0.0;
    double pl_db = 0.0;
    RegimeLabel regime = RegimeLabel::NearField;
};

/// Tether length minimizing the range for a fixed inclination:
/// d cos(theta) - h_b sin(theta). May be negative.
double critical_t(PlacementConfig const& cfg, double theta);

/// Inclination maximizing z/x (hence P_LoS) for a fixed tether length:
/// asin(d / sqrt(d^2 + h_b^2)) - asin(t / sqrt(d^2 + h_b^2)).
/// Throws std::invalid_argument when t exceeds sqrt(d^2 + h_b^2).
double critical_theta(PlacementConfig const& cfg, double t);

OptBounds opt_bounds(PlacementConfig const& cfg);

/// Channel quantities at a tether coordinate.
PlacementSolution evaluate_placement(PlacementConfig const& cfg, Environment const& env,
                                     PathLossMode mode, TetherCoord const& c,
                                     SolutionKind kind);

/// Exact optimum: uniform pre-scan of the reduced set followed by
/// golden-section refinement around the best scan point.
PlacementSolution solve(PlacementConfig const& cfg, Environment const& env,
                        PathLossMode mode = PathLossMode::LinearEq2);

SuboptimalClosedForm suboptimal_closed_form(PlacementConfig const& cfg, Environment const& env,
                                            PathLossMode mode = PathLossMode::LinearEq2);

/// LoS-maximizing placement. Throws std::logic_error if the closed-form
/// P_LoS or range disagrees with the channel model at the mapped point.
PlacementSolution suboptimal(PlacementConfig const& cfg, Environment const& env,
                             PathLossMode mode = PathLossMode::LinearEq2);

/// Relative tolerance of the closed-form consistency check in suboptimal().
inline constexpr double kClosedFormRelTol = 1e-9;

/// Exhaustive grid over (t, theta) in [0, T_max] x [theta_min, pi/2]
/// restricted to feasible points, then one 10x finer pass over the cells
/// adjacent to the incumbent. Requires grid_n >= 100. Output does not depend
/// on the thread count.
PlacementSolution brute_force(PlacementConfig const& cfg, Environment const& env,
                              PathLossMode mode, std::size_t grid_n, unsigned threads = 0);

/// Coarse grid spacing used by brute_force for (t, theta).
TetherCoord brute_force_cell(PlacementConfig const& cfg, std::size_t grid_n);

/**
 * Whether c lies on the boundary set that must contain the optimum: t = T_max
 * or theta = theta_min when d > T_max cos(theta_min); otherwise on the
 * theta = theta_min segment with t <= d / cos(theta_min).
 */
bool on_optimal_boundary(PlacementConfig const& cfg, TetherCoord const& c, double t_tol,
                         double theta_tol);

}  // namespace tuav
