#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tuav {

/// Location in meters. The ground receiver sits at the origin.
struct Point3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend bool operator==(Point3 const&, Point3 const&) = default;
};

/**
 * Channel and city parameters.
 *
 * (a, b) shape the LoS probability curve a*(phi - 15)^b with phi the
 * elevation angle in degrees. The eta values are mean excess losses in dB
 * for LoS and non-LoS links. beta (buildings per km^2) and gamma (meters)
 * describe the surrounding building field and are only consumed by
 * theta_min_model.
 */
struct Environment
{
    std::string name;
    double a = 0.37;
    double b = 0.21;
    double eta_los_db = 1.6;
    double eta_nlos_db = 23.0;
    double beta = 300.0;
    double gamma = 20.0;

    /// Throws std::invalid_argument when a parameter is out of range.
    void validate() const;

    static Environment suburban();
    static Environment urban();
    static Environment dense_urban();
    static Environment high_rise_urban();

    /// Looks up a preset by name ("suburban", "urban", "dense-urban",
    /// "high-rise-urban"; '_' and '-' are interchangeable, case-insensitive).
    static Environment preset(std::string_view name);
    static std::vector<Environment> presets();
};

enum class PathLossMode
{
    LinearEq2,   ///< 10*log10(R^2 * (P*eta_L + (1-P)*eta_N)), eta in linear units
    AdditiveDb,  ///< 20*log10(R) + P*eta_L_dB + (1-P)*eta_N_dB
};

std::string_view to_string(PathLossMode mode);
/// Accepts "linear" / "linear-eq2" and "additive-db" / "additive".
PathLossMode parse_path_loss_mode(std::string_view text);

double db_to_linear(double db);
double linear_to_db(double ratio);

/// Elevation angle of p seen from the receiver, in degrees, in [-90, 90].
/// Throws std::invalid_argument for the origin.
double elevation_angle_deg(Point3 const& p);

double distance(Point3 const& p);

/// a*(phi - 15)^b with the base clamped at 0 and the result clamped to [0, 1].
double los_probability(Point3 const& p, Environment const& env);

/// Path-loss in dB for a given range and LoS probability.
double path_loss_db(double range_m, double p_los, Environment const& env,
                    PathLossMode mode);

/// Average path-loss in dB at p.
double path_loss(Point3 const& p, Environment const& env,
                 PathLossMode mode = PathLossMode::LinearEq2);

}  // namespace tuav
