#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tuav/channel_model.hpp"

namespace tuav {

/**
 * Poisson building field around the rooftop. beta is in buildings per km^2
 * and gamma in meters; heights have CDF 1 - exp(-h^2 / gamma^2).
 */
struct CityModel
{
    double beta = 300.0;
    double gamma = 20.0;
    double h_b = 20.0;
    double t_max = 150.0;

    void validate() const;
    /// Density in buildings per m^2.
    double beta_per_m2() const { return beta * 1e-6; }

    /// City built from an environment's (beta, gamma) with the rooftop
    /// height defaulting to gamma.
    static CityModel from_environment(Environment const& env, double t_max);
    static CityModel from_environment(Environment const& env, double t_max, double h_b);
};

struct EmpiricalCdf
{
    std::vector<double> thetas;  // rad, sorted
    std::vector<double> probs;
    std::size_t n_samples = 0;
    std::uint64_t seed = 0;
};

/// Below this inclination the closed form is replaced by its theta -> 0 limit.
inline constexpr double kSmallAngle = 1e-6;

/// sqrt(pi) * erf(sqrt(x)), the lower incomplete gamma function at 1/2.
double lower_incomplete_gamma_half(double x);

/// P(theta_min <= theta). Returns 0 for theta < 0 and 1 for theta >= pi/2.
double cdf_theta_min(CityModel const& city, double theta);

/// E[theta_min] in radians, integrating 1 - F over [0, pi/2].
double mean_theta_min(CityModel const& city, double abs_tol = 1e-6);

/// One building relative to the rooftop: horizontal range and height (m).
struct Building
{
    double range = 0.0;
    double height = 0.0;
};

/// Draws the buildings of sample `index` inside the disk of radius T_max.
/// Deterministic in (seed, index).
std::vector<Building> draw_buildings(CityModel const& city, std::uint64_t seed,
                                     std::uint64_t index);

/**
 * Largest inclination blocked by any building: theta is blocked when some
 * building with range L <= T_max cos(theta) has height >= h_b + L tan(theta).
 * Returns -1 when nothing blocks (every theta >= 0 is safe).
 */
double blocking_angle(CityModel const& city, std::span<Building const> buildings);

/// Literal event check {theta_min <= theta} for a single building field.
bool angle_is_safe(CityModel const& city, std::span<Building const> buildings, double theta);

/// Monte Carlo estimate of the CDF on `thetas`. Output is identical for any
/// thread count. Throws std::invalid_argument for an empty grid or zero samples.
EmpiricalCdf sample_theta_min_cdf(CityModel const& city, std::span<double const> thetas,
                                  std::size_t n_samples, std::uint64_t seed,
                                  unsigned threads = 0);

/// n uniformly spaced angles covering [0, pi/2] inclusive (n >= 2).
std::vector<double> uniform_theta_grid(std::size_t n);

}  // namespace tuav
