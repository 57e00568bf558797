#include "tuav/cli/config_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace tuav::cli {
namespace {

std::string_view trim(std::string_view s)
{
    auto const is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)); };
    while (!s.empty() && is_space(s.front()))
        s.remove_prefix(1);
    while (!s.empty() && is_space(s.back()))
        s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

double to_number(std::string const& key, std::string const& text)
{
    double v = 0.0;
    auto const* first = text.data();
    auto const* last = text.data() + text.size();
    if (!text.empty() && *first == '+')
        ++first;
    auto const [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || !std::isfinite(v))
        throw ParseError("invalid numeric value for '" + key + "': " + text);
    return v;
}

std::size_t to_count(std::string const& key, std::string const& text)
{
    std::size_t v = 0;
    auto const [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError("invalid integer value for '" + key + "': " + text);
    return v;
}

std::set<std::string> const& known_keys()
{
    static std::set<std::string> const keys{
        "h_b",          "d",           "t_max",      "theta_min_deg", "environment",
        "pathloss_mode", "a",          "b",          "eta_los_db",    "eta_nlos_db",
        "beta",         "gamma",       "sweep_variable", "sweep_start", "sweep_stop",
        "sweep_steps",
    };
    return keys;
}

}  // namespace

std::map<std::string, std::string> parse_key_values(std::string_view text)
{
    std::map<std::string, std::string> out;
    std::size_t line_no = 0;
    while (!text.empty())
    {
        auto const nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (auto const hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        auto const eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'");
        auto key = lower(trim(line.substr(0, eq)));
        auto value = std::string(trim(line.substr(eq + 1)));
        if (key.empty() || value.empty())
            throw ParseError("line " + std::to_string(line_no) + ": empty key or value");
        if (!out.emplace(key, value).second)
            throw ParseError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    return out;
}

std::string_view to_string(SweepVariable var)
{
    switch (var)
    {
    case SweepVariable::D:
        return "d";
    case SweepVariable::ThetaMinDeg:
        return "theta_min_deg";
    case SweepVariable::TMax:
        return "t_max";
    }
    return "d";
}

double SweepSpec::value(std::size_t i) const
{
    if (i + 1 >= steps)
        return stop;
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

CityModel RunConfig::city() const { return city(env); }

CityModel RunConfig::city(Environment const& e) const
{
    return CityModel::from_environment(e, placement.t_max, h_b_given ? placement.h_b : e.gamma);
}

RunConfig parse_run_config(std::string_view text)
{
    RunConfig cfg;
    cfg.raw = parse_key_values(text);
    auto const& kv = cfg.raw;
    for (auto const& [key, value] : kv)
    {
        if (!known_keys().contains(key))
            throw ParseError("unknown key '" + key + "'");
    }
    auto number = [&](char const* key) -> std::optional<double> {
        auto const it = kv.find(key);
        if (it == kv.end())
            return std::nullopt;
        return to_number(key, it->second);
    };

    if (auto it = kv.find("environment"); it != kv.end())
    {
        if (lower(it->second) == "all")
            cfg.all_environments = true;
        else
        {
            try
            {
                cfg.env = Environment::preset(it->second);
            }
            catch (std::invalid_argument const& e)
            {
                throw ParseError(e.what());
            }
        }
    }
    if (auto it = kv.find("pathloss_mode"); it != kv.end())
    {
        try
        {
            cfg.mode = parse_path_loss_mode(it->second);
        }
        catch (std::invalid_argument const& e)
        {
            throw ParseError(e.what());
        }
    }

    if (auto v = number("h_b"))
    {
        cfg.placement.h_b = *v;
        cfg.h_b_given = true;
    }
    if (auto v = number("d"))
        cfg.placement.d = *v;
    if (auto v = number("t_max"))
        cfg.placement.t_max = *v;
    double theta_min_deg = number("theta_min_deg").value_or(0.0);
    cfg.placement.theta_min = deg_to_rad(theta_min_deg);

    if (auto v = number("a"))
        cfg.env.a = *v;
    if (auto v = number("b"))
        cfg.env.b = *v;
    if (auto v = number("eta_los_db"))
        cfg.env.eta_los_db = *v;
    if (auto v = number("eta_nlos_db"))
        cfg.env.eta_nlos_db = *v;
    if (auto v = number("beta"))
        cfg.env.beta = *v;
    if (auto v = number("gamma"))
        cfg.env.gamma = *v;

    bool const any_sweep = kv.contains("sweep_variable") || kv.contains("sweep_start")
                           || kv.contains("sweep_stop") || kv.contains("sweep_steps");
    if (any_sweep)
    {
        for (char const* key : {"sweep_variable", "sweep_start", "sweep_stop", "sweep_steps"})
        {
            if (!kv.contains(key))
                throw ParseError(std::string("sweep spec is missing '") + key + "'");
        }
        SweepSpec spec;
        auto const var = lower(kv.at("sweep_variable"));
        if (var == "d")
            spec.variable = SweepVariable::D;
        else if (var == "theta_min_deg")
            spec.variable = SweepVariable::ThetaMinDeg;
        else if (var == "t_max")
            spec.variable = SweepVariable::TMax;
        else
            throw ParseError("sweep_variable must be one of d, theta_min_deg, t_max");
        spec.start = *number("sweep_start");
        spec.stop = *number("sweep_stop");
        spec.steps = to_count("sweep_steps", kv.at("sweep_steps"));
        if (spec.steps < 2)
            throw InvariantError("sweep_steps must be at least 2");
        if (!(spec.start < spec.stop))
            throw InvariantError("sweep_start must be below sweep_stop");
        cfg.sweep = spec;
    }

    try
    {
        cfg.placement.validate();
        cfg.env.validate();
    }
    catch (std::invalid_argument const& e)
    {
        throw InvariantError(e.what());
    }
    return cfg;
}

RunConfig load_run_config(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_run_config(ss.str());
}

}  // namespace tuav::cli
