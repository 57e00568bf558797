#include "tuav/channel_model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tuav {
namespace {

constexpr double kLosAngleOffsetDeg = 15.0;

std::string normalize_name(std::string_view name)
{
    std::string out;
    out.reserve(name.size());
    for (char c : name)
    {
        if (c == '_' || c == ' ')
            c = '-';
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

Environment with_city(std::string name, double beta, double gamma)
{
    Environment env;
    env.name = std::move(name);
    env.beta = beta;
    env.gamma = gamma;
    return env;
}

}  // namespace

void Environment::validate() const
{
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("environment: a and b must be positive");
    if (!(eta_los_db < eta_nlos_db))
        throw std::invalid_argument("environment: eta_los_db must be below eta_nlos_db");
    if (!(beta > 0.0) || !(gamma > 0.0))
        throw std::invalid_argument("environment: beta and gamma must be positive");
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(eta_los_db)
        || !std::isfinite(eta_nlos_db) || !std::isfinite(beta) || !std::isfinite(gamma))
        throw std::invalid_argument("environment: parameters must be finite");
}

Environment Environment::suburban() { return with_city("suburban", 750.0, 8.0); }
Environment Environment::urban() { return with_city("urban", 500.0, 15.0); }
Environment Environment::dense_urban() { return with_city("dense-urban", 300.0, 20.0); }
Environment Environment::high_rise_urban() { return with_city("high-rise-urban", 300.0, 50.0); }

std::vector<Environment> Environment::presets()
{
    return {suburban(), urban(), dense_urban(), high_rise_urban()};
}

Environment Environment::preset(std::string_view name)
{
    auto const key = normalize_name(name);
    for (auto& env : presets())
    {
        if (env.name == key)
            return env;
    }
    if (key == "highrise-urban" || key == "high-rise")
        return high_rise_urban();
    throw std::invalid_argument("unknown environment preset: " + std::string(name));
}

std::string_view to_string(PathLossMode mode)
{
    switch (mode)
    {
    case PathLossMode::LinearEq2:
        return "linear";
    case PathLossMode::AdditiveDb:
        return "additive-db";
    }
    return "linear";
}

PathLossMode parse_path_loss_mode(std::string_view text)
{
    auto const key = normalize_name(text);
    if (key == "linear" || key == "linear-eq2" || key == "lineareq2")
        return PathLossMode::LinearEq2;
    if (key == "additive-db" || key == "additive" || key == "additivedb")
        return PathLossMode::AdditiveDb;
    throw std::invalid_argument("unknown path-loss mode: " + std::string(text));
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double ratio) { return 10.0 * std::log10(ratio); }

double elevation_angle_deg(Point3 const& p)
{
    double const horizontal = std::hypot(p.x, p.y);
    if (horizontal == 0.0 && p.z == 0.0)
        throw std::invalid_argument("elevation angle undefined at the receiver location");
    return std::atan2(p.z, horizontal) * 180.0 / std::numbers::pi;
}

double distance(Point3 const& p)
{
    return std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
}

double los_probability(Point3 const& p, Environment const& env)
{
    double const base = elevation_angle_deg(p) - kLosAngleOffsetDeg;
    if (base <= 0.0)
        return 0.0;
    return std::clamp(env.a * std::pow(base, env.b), 0.0, 1.0);
}

double path_loss_db(double range_m, double p_los, Environment const& env,
                    PathLossMode mode)
{
    if (!(range_m > 0.0))
        throw std::invalid_argument("path loss undefined at zero range");
    switch (mode)
    {
    case PathLossMode::AdditiveDb:
        return 20.0 * std::log10(range_m) + p_los * env.eta_los_db
               + (1.0 - p_los) * env.eta_nlos_db;
    case PathLossMode::LinearEq2:
        break;
    }
    double const excess = p_los * db_to_linear(env.eta_los_db)
                          + (1.0 - p_los) * db_to_linear(env.eta_nlos_db);
    return linear_to_db(range_m * range_m * excess);
}

double path_loss(Point3 const& p, Environment const& env, PathLossMode mode)
{
    return path_loss_db(distance(p), los_probability(p, env), env, mode);
}

}  // namespace tuav
