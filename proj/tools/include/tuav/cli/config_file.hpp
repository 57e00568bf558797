#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tuav/channel_model.hpp"
#include "tuav/tether_geometry.hpp"
#include "tuav/theta_min_model.hpp"

namespace tuav::cli {

/// Malformed input (exit status 2).
class ParseError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Well-formed input describing an impossible instance (exit status 3).
class InvariantError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/**
 * `key = value` per line, `#` starts a comment, blank lines ignored, keys
 * case-insensitive. Duplicate keys are an error. Keys are returned
 * lower-cased.
 */
std::map<std::string, std::string> parse_key_values(std::string_view text);

enum class SweepVariable
{
    D,
    ThetaMinDeg,
    TMax,
};

std::string_view to_string(SweepVariable var);

struct SweepSpec
{
    SweepVariable variable = SweepVariable::D;
    double start = 0.0;
    double stop = 0.0;
    std::size_t steps = 0;

    /// Evenly spaced values start..stop inclusive.
    double value(std::size_t i) const;
};

/// Everything a config or sweep-spec file can carry, resolved to defaults.
struct RunConfig
{
    PlacementConfig placement;  // theta_min in radians
    Environment env = Environment::dense_urban();
    PathLossMode mode = PathLossMode::LinearEq2;
    bool all_environments = false;  // `environment = all` (theta-min only)
    bool h_b_given = false;
    std::optional<SweepSpec> sweep;
    std::map<std::string, std::string> raw;  // as read, lower-cased keys

    /// City for the theta_min distribution; rooftop height is h_b when the
    /// file sets it, otherwise gamma.
    CityModel city() const;
    CityModel city(Environment const& e) const;
};

/// Parses and range-checks. Throws ParseError for grammar, unknown keys or
/// bad values and InvariantError for out-of-range but well-formed values.
RunConfig parse_run_config(std::string_view text);

RunConfig load_run_config(std::string const& path);

}  // namespace tuav::cli
