#include "tuav/tether_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tuav {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// a <= b up to a relative slack scaled by the larger magnitude involved.
bool le_tol(double a, double b, double scale)
{
    return a <= b + kFeasibilityTol * std::max(1.0, scale);
}

}  // namespace

void PlacementConfig::validate() const
{
    if (!std::isfinite(h_b) || !std::isfinite(d) || !std::isfinite(t_max)
        || !std::isfinite(theta_min))
        throw std::invalid_argument("placement config: values must be finite");
    if (!(h_b > 0.0))
        throw std::invalid_argument("placement config: h_b must be positive");
    if (!(d >= 0.0))
        throw std::invalid_argument("placement config: d must be non-negative");
    if (!(t_max > 0.0))
        throw std::invalid_argument("placement config: t_max must be positive");
    if (!(theta_min >= 0.0 && theta_min < kHalfPi))
        throw std::invalid_argument("placement config: theta_min must lie in [0, 90) degrees");
}

std::string_view to_string(RegimeLabel regime)
{
    switch (regime)
    {
    case RegimeLabel::NearField:
        return "near";
    case RegimeLabel::MidField:
        return "mid";
    case RegimeLabel::FarField:
        return "far";
    }
    return "near";
}

Point3 to_cartesian(PlacementConfig const& cfg, TetherCoord const& c)
{
    return {cfg.d - c.t * std::cos(c.theta), 0.0, cfg.h_b + c.t * std::sin(c.theta)};
}

bool is_feasible(PlacementConfig const& cfg, TetherCoord const& c)
{
    double const len_scale = std::max({cfg.d, cfg.t_max, std::abs(c.t)});
    if (!le_tol(cfg.theta_min, c.theta, kHalfPi) || !le_tol(c.theta, kHalfPi, kHalfPi))
        return false;
    if (!le_tol(0.0, c.t, len_scale) || !le_tol(c.t, cfg.t_max, len_scale))
        return false;
    return le_tol(c.t * std::cos(c.theta), cfg.d, len_scale);
}

bool in_hovering_region(PlacementConfig const& cfg, Point3 const& p)
{
    double const dx = p.x - cfg.d;
    double const dz = p.z - cfg.h_b;
    double const tether = std::sqrt(dx * dx + p.y * p.y + dz * dz);
    double const scale = std::max(cfg.t_max, tether);
    if (!le_tol(tether, cfg.t_max, scale))
        return false;
    if (tether == 0.0)
        return true;
    double const inclination = std::asin(std::clamp(dz / tether, -1.0, 1.0));
    return le_tol(cfg.theta_min, inclination, kHalfPi);
}

double threshold_f(PlacementConfig const& cfg)
{
    return cfg.t_max / std::cos(cfg.theta_min) + cfg.h_b * std::tan(cfg.theta_min);
}

RegimeLabel regime(PlacementConfig const& cfg)
{
    if (cfg.d <= cfg.t_max * std::cos(cfg.theta_min))
        return RegimeLabel::NearField;
    if (cfg.d < threshold_f(cfg))
        return RegimeLabel::MidField;
    return RegimeLabel::FarField;
}

double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

}  // namespace tuav
