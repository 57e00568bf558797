#include "tuav/cli/experiments.hpp"

#include <cstdio>

#include "tuav/parallel.hpp"

namespace tuav::cli {

std::string format_number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

nlohmann::json solution_to_json(PlacementSolution const& sol, PathLossMode mode)
{
    return {
        {"t_m", sol.coord.t},
        {"theta_deg", rad_to_deg(sol.coord.theta)},
        {"x_m", sol.position.x},
        {"y_m", sol.position.y},
        {"z_m", sol.position.z},
        {"p_los", sol.p_los},
        {"r_m", sol.range_r},
        {"pl_db", sol.pl_db},
        {"regime", std::string(to_string(sol.regime))},
        {"kind", std::string(to_string(sol.kind))},
        {"mode", std::string(to_string(mode))},
    };
}

nlohmann::json closed_form_to_json(SuboptimalClosedForm const& closed)
{
    return {
        {"t_m", closed.coord.t},
        {"theta_deg", rad_to_deg(closed.coord.theta)},
        {"p_los", closed.p_los},
        {"r_m", closed.range_r},
        {"pl_db", closed.pl_db},
    };
}

nlohmann::json bounds_to_json(PlacementConfig const& cfg, OptBounds const& bounds,
                              Environment const& env, PathLossMode mode)
{
    auto const pl_at = [&](double v) {
        return path_loss(to_cartesian(cfg, bounds.at(v)), env, mode);
    };
    nlohmann::json j{
        {"regime", std::string(to_string(bounds.regime))},
        {"free_variable", std::string(to_string(bounds.free_variable))},
        {"threshold_f_m", threshold_f(cfg)},
        {"pl_lower_db", pl_at(bounds.lower)},
        {"pl_upper_db", pl_at(bounds.upper)},
        {"mode", std::string(to_string(mode))},
    };
    if (bounds.free_variable == FreeVariable::TetherLength)
    {
        j["fixed_theta_deg"] = rad_to_deg(bounds.fixed_value);
        j["lower_t_m"] = bounds.lower;
        j["upper_t_m"] = bounds.upper;
    }
    else
    {
        j["fixed_t_m"] = bounds.fixed_value;
        j["lower_theta_deg"] = rad_to_deg(bounds.lower);
        j["upper_theta_deg"] = rad_to_deg(bounds.upper);
    }
    return j;
}

PlacementConfig sweep_point_config(RunConfig const& cfg, std::size_t i)
{
    PlacementConfig p = cfg.placement;
    double const v = cfg.sweep->value(i);
    switch (cfg.sweep->variable)
    {
    case SweepVariable::D:
        p.d = v;
        break;
    case SweepVariable::ThetaMinDeg:
        p.theta_min = deg_to_rad(v);
        break;
    case SweepVariable::TMax:
        p.t_max = v;
        break;
    }
    return p;
}

std::vector<SweepRow> run_sweep(RunConfig const& cfg, unsigned threads)
{
    if (!cfg.sweep)
        throw ParseError("sweep spec has no sweep_variable");
    auto const& spec = *cfg.sweep;
    for (std::size_t i = 0; i < spec.steps; ++i)
    {
        try
        {
            sweep_point_config(cfg, i).validate();
        }
        catch (std::invalid_argument const& e)
        {
            throw InvariantError(std::string("sweep point out of range: ") + e.what());
        }
    }

    std::vector<SweepRow> rows(spec.steps);
    parallel_for(
        spec.steps,
        [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i)
            {
                PlacementConfig const p = sweep_point_config(cfg, i);
                SweepRow& row = rows[i];
                row.value = spec.value(i);
                row.optimal = solve(p, cfg.env, cfg.mode);
                row.sub = suboptimal(p, cfg.env, cfg.mode);
                row.bounds = opt_bounds(p);
                row.pl_lower_db
                    = path_loss(to_cartesian(p, row.bounds.at(row.bounds.lower)), cfg.env, cfg.mode);
                row.pl_upper_db
                    = path_loss(to_cartesian(p, row.bounds.at(row.bounds.upper)), cfg.env, cfg.mode);
            }
        },
        threads);
    return rows;
}

void write_sweep_csv(std::ostream& out, SweepVariable var, std::span<SweepRow const> rows)
{
    out << to_string(var)
        << ",regime,opt_t_m,opt_theta_deg,opt_pl_db,sub_t_m,sub_theta_deg,sub_pl_db,gap_db,"
           "lower_t_m,upper_t_m,lower_theta_deg,upper_theta_deg,pl_lower_db,pl_upper_db\n";
    for (auto const& r : rows)
    {
        bool const t_free = r.bounds.free_variable == FreeVariable::TetherLength;
        double const lo_t = t_free ? r.bounds.lower : r.bounds.fixed_value;
        double const hi_t = t_free ? r.bounds.upper : r.bounds.fixed_value;
        double const lo_th = t_free ? r.bounds.fixed_value : r.bounds.lower;
        double const hi_th = t_free ? r.bounds.fixed_value : r.bounds.upper;
        out << format_number(r.value) << ',' << to_string(r.bounds.regime) << ','
            << format_number(r.optimal.coord.t) << ','
            << format_number(rad_to_deg(r.optimal.coord.theta)) << ','
            << format_number(r.optimal.pl_db) << ',' << format_number(r.sub.coord.t) << ','
            << format_number(rad_to_deg(r.sub.coord.theta)) << ',' << format_number(r.sub.pl_db)
            << ',' << format_number(r.sub.pl_db - r.optimal.pl_db) << ','
            << format_number(lo_t) << ',' << format_number(hi_t) << ','
            << format_number(rad_to_deg(lo_th)) << ',' << format_number(rad_to_deg(hi_th)) << ','
            << format_number(r.pl_lower_db) << ',' << format_number(r.pl_upper_db) << '\n';
    }
}

ThetaMinTable run_theta_min(CityModel const& city, std::string environment, std::size_t grid,
                            std::size_t samples, std::uint64_t seed, unsigned threads)
{
    city.validate();
    ThetaMinTable table;
    table.environment = std::move(environment);
    table.thetas = uniform_theta_grid(grid);
    table.analytic.reserve(grid);
    for (double th : table.thetas)
        table.analytic.push_back(cdf_theta_min(city, th));
    if (samples > 0)
        table.empirical = sample_theta_min_cdf(city, table.thetas, samples, seed, threads).probs;
    table.mean_rad = mean_theta_min(city);
    return table;
}

void write_theta_min_csv(std::ostream& out, ThetaMinTable const& table)
{
    out << "theta_deg,F_analytic";
    if (table.empirical)
        out << ",F_empirical";
    out << '\n';
    for (std::size_t k = 0; k < table.thetas.size(); ++k)
    {
        out << format_number(rad_to_deg(table.thetas[k])) << ','
            << format_number(table.analytic[k]);
        if (table.empirical)
            out << ',' << format_number((*table.empirical)[k]);
        out << '\n';
    }
    out << "mean_theta_min_deg," << format_number(rad_to_deg(table.mean_rad)) << '\n';
}

nlohmann::json RunManifest::to_json() const
{
    return {
        {"tool", "tuav-place"},
        {"version", kToolVersion},
        {"command", command},
        {"config", config},
        {"seeds", seeds},
        {"outputs", outputs},
        {"wall_clock_s", wall_clock_s},
    };
}

}  // namespace tuav::cli
