#pragma once

#include <string_view>

#include "tuav/channel_model.hpp"

namespace tuav {

/// Relative tolerance used by every feasibility comparison.
inline constexpr double kFeasibilityTol = 1e-9;

/**
 * Geometry of one placement instance. The ground station sits on a rooftop
 * at (d, 0, h_b); the receiver is at the origin. theta_min is in radians.
 */
struct PlacementConfig
{
    double h_b = 30.0;
    double d = 100.0;
    double t_max = 150.0;
    double theta_min = 0.0;

    /// Throws std::invalid_argument unless h_b > 0, d >= 0, t_max > 0 and
    /// 0 <= theta_min < pi/2.
    void validate() const;
};

/// Tether length (m) and inclination above the horizontal (rad).
struct TetherCoord
{
    double t = 0.0;
    double theta = 0.0;
};

enum class RegimeLabel
{
    NearField,  ///< d <= T_max cos(theta_min)
    MidField,   ///< T_max cos(theta_min) < d < F
    FarField,   ///< d >= F
};

std::string_view to_string(RegimeLabel regime);

/// (d - t cos(theta), 0, h_b + t sin(theta))
Point3 to_cartesian(PlacementConfig const& cfg, TetherCoord const& c);

/// theta_min <= theta <= pi/2, t cos(theta) <= d, 0 <= t <= T_max.
bool is_feasible(PlacementConfig const& cfg, TetherCoord const& c);

/// Membership in the 3-D hovering region (ball of radius T_max around the
/// rooftop, above the minimum-inclination cone).
bool in_hovering_region(PlacementConfig const& cfg, Point3 const& p);

/// F = T_max / cos(theta_min) + h_b tan(theta_min)
double threshold_f(PlacementConfig const& cfg);

RegimeLabel regime(PlacementConfig const& cfg);

double deg_to_rad(double deg);
double rad_to_deg(double rad);

}  // namespace tuav
