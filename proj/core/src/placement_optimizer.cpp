#include "tuav/placement_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "tuav/parallel.hpp"

namespace tuav {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kTieTolDb = 1e-12;
constexpr std::size_t kRefineFactor = 10;

template <class F>
double golden_section_min(F&& f, double lo, double hi, double tol)
{
    constexpr double kInvPhi = 0.6180339887498948482;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > tol)
    {
        if (f1 <= f2)
        {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = f(x1);
        }
        else
        {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? x1 : x2;
}

bool close_rel(double a, double b, double rel)
{
    double const diff = std::abs(a - b);
    return diff <= rel * std::max(std::abs(a), std::abs(b)) || diff <= 1e-15;
}

double los_from_elevation_deg(double phi_deg, Environment const& env)
{
    double const base = phi_deg - 15.0;
    if (base <= 0.0)
        return 0.0;
    return std::clamp(env.a * std::pow(base, env.b), 0.0, 1.0);
}

}  // namespace

TetherCoord OptBounds::at(double free_value) const
{
    if (free_variable == FreeVariable::TetherLength)
        return {free_value, fixed_value};
    return {fixed_value, free_value};
}

bool OptBounds::contains(TetherCoord const& c, double t_tol, double theta_tol) const
{
    if (free_variable == FreeVariable::TetherLength)
    {
        return std::abs(c.theta - fixed_value) <= theta_tol && c.t >= lower - t_tol
               && c.t <= upper + t_tol;
    }
    return std::abs(c.t - fixed_value) <= t_tol && c.theta >= lower - theta_tol
           && c.theta <= upper + theta_tol;
}

std::string_view to_string(SolutionKind kind)
{
    switch (kind)
    {
    case SolutionKind::Optimal:
        return "optimal";
    case SolutionKind::Suboptimal:
        return "suboptimal";
    case SolutionKind::BruteForce:
        return "brute-force";
    }
    return "optimal";
}

std::string_view to_string(FreeVariable var)
{
    return var == FreeVariable::TetherLength ? "tether_length" : "inclination_angle";
}

double critical_t(PlacementConfig const& cfg, double theta)
{
    return cfg.d * std::cos(theta) - cfg.h_b * std::sin(theta);
}

double critical_theta(PlacementConfig const& cfg, double t)
{
    double const hyp = std::hypot(cfg.d, cfg.h_b);
    if (t < 0.0 || t > hyp * (1.0 + kFeasibilityTol))
        throw std::invalid_argument("critical_theta: tether length exceeds sqrt(d^2 + h_b^2)");
    return std::asin(cfg.d / hyp) - std::asin(std::min(t / hyp, 1.0));
}

OptBounds opt_bounds(PlacementConfig const& cfg)
{
    OptBounds bounds;
    bounds.regime = regime(cfg);
    switch (bounds.regime)
    {
    case RegimeLabel::NearField:
    case RegimeLabel::MidField:
        bounds.free_variable = FreeVariable::TetherLength;
        bounds.fixed_value = cfg.theta_min;
        bounds.upper = bounds.regime == RegimeLabel::NearField
                           ? std::min(cfg.d / std::cos(cfg.theta_min), cfg.t_max)
                           : cfg.t_max;
        bounds.lower = std::clamp(critical_t(cfg, cfg.theta_min), 0.0, bounds.upper);
        break;
    case RegimeLabel::FarField:
        bounds.free_variable = FreeVariable::InclinationAngle;
        bounds.fixed_value = cfg.t_max;
        bounds.lower = cfg.theta_min;
        bounds.upper = std::clamp(critical_theta(cfg, cfg.t_max), cfg.theta_min, kHalfPi);
        break;
    }
    return bounds;
}

PlacementSolution evaluate_placement(PlacementConfig const& cfg, Environment const& env,
                                     PathLossMode mode, TetherCoord const& c,
                                     SolutionKind kind)
{
    PlacementSolution sol;
    sol.coord = c;
    sol.position = to_cartesian(cfg, c);
    sol.p_los = los_probability(sol.position, env);
    sol.range_r = distance(sol.position);
    sol.pl_db = path_loss_db(sol.range_r, sol.p_los, env, mode);
    sol.regime = regime(cfg);
    sol.kind = kind;
    return sol;
}

PlacementSolution solve(PlacementConfig const& cfg, Environment const& env, PathLossMode mode)
{
    cfg.validate();
    env.validate();
    OptBounds const bounds = opt_bounds(cfg);
    auto objective = [&](double v) {
        return path_loss(to_cartesian(cfg, bounds.at(v)), env, mode);
    };

    double best = bounds.lower;
    if (bounds.upper > bounds.lower)
    {
        double const span = bounds.upper - bounds.lower;
        auto grid_point = [&](std::size_t i) {
            if (i + 1 == kSolveScanPoints)
                return bounds.upper;
            return bounds.lower + span * static_cast<double>(i)
                                      / static_cast<double>(kSolveScanPoints - 1);
        };

        std::size_t best_i = 0;
        double best_pl = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < kSolveScanPoints; ++i)
        {
            double const pl = objective(grid_point(i));
            if (pl < best_pl - kTieTolDb)
            {
                best_pl = pl;
                best_i = i;
            }
        }

        double const lo = grid_point(best_i == 0 ? 0 : best_i - 1);
        double const hi = grid_point(std::min(best_i + 1, kSolveScanPoints - 1));
        double const tol = bounds.free_variable == FreeVariable::TetherLength
                               ? kSolveTolLength
                               : kSolveTolAngle;
        double const refined = golden_section_min(objective, lo, hi, tol);
        best = grid_point(best_i);
        if (objective(refined) < best_pl - kTieTolDb)
            best = refined;
    }
    return evaluate_placement(cfg, env, mode, bounds.at(best), SolutionKind::Optimal);
}

SuboptimalClosedForm suboptimal_closed_form(PlacementConfig const& cfg, Environment const& env,
                                            PathLossMode mode)
{
    cfg.validate();
    env.validate();
    double const h = cfg.h_b;
    double const d = cfg.d;
    double const tm = cfg.t_max;
    double const th = cfg.theta_min;

    SuboptimalClosedForm out;
    out.regime = regime(cfg);
    double elevation_deg = 90.0;
    switch (out.regime)
    {
    case RegimeLabel::NearField:
        out.coord = {d / std::cos(th), th};
        elevation_deg = 90.0;
        out.range_r = h + d * std::tan(th);
        break;
    case RegimeLabel::MidField:
        out.coord = {tm, th};
        elevation_deg = rad_to_deg(std::atan2(h + tm * std::sin(th), d - tm * std::cos(th)));
        out.range_r = std::sqrt(h * h + d * d + tm * tm - 2.0 * d * tm * std::cos(th)
                                + 2.0 * h * tm * std::sin(th));
        break;
    case RegimeLabel::FarField: {
        out.coord = {tm, critical_theta(cfg, tm)};
        double const tangent = std::sqrt(h * h + d * d - tm * tm);
        elevation_deg = rad_to_deg(std::atan2(h * tangent + d * tm, d * tangent - h * tm));
        out.range_r = tangent;
        break;
    }
    }
    out.p_los = los_from_elevation_deg(elevation_deg, env);
    out.pl_db = path_loss_db(out.range_r, out.p_los, env, mode);
    return out;
}

PlacementSolution suboptimal(PlacementConfig const& cfg, Environment const& env,
                             PathLossMode mode)
{
    SuboptimalClosedForm const closed = suboptimal_closed_form(cfg, env, mode);
    PlacementSolution sol = evaluate_placement(cfg, env, mode, closed.coord,
                                               SolutionKind::Suboptimal);
    if (!close_rel(closed.p_los, sol.p_los, kClosedFormRelTol)
        || !close_rel(closed.range_r, sol.range_r, kClosedFormRelTol))
        throw std::logic_error("suboptimal: closed form disagrees with channel model");
    return sol;
}

TetherCoord brute_force_cell(PlacementConfig const& cfg, std::size_t grid_n)
{
    double const steps = static_cast<double>(grid_n - 1);
    return {cfg.t_max / steps, (kHalfPi - cfg.theta_min) / steps};
}

PlacementSolution brute_force(PlacementConfig const& cfg, Environment const& env,
                              PathLossMode mode, std::size_t grid_n, unsigned threads)
{
    if (grid_n < 100)
        throw std::invalid_argument("brute_force: grid_n must be at least 100");
    cfg.validate();
    env.validate();

    TetherCoord const cell = brute_force_cell(cfg, grid_n);
    auto coarse = [&](std::size_t i, std::size_t j) {
        double const t = i + 1 == grid_n ? cfg.t_max : static_cast<double>(i) * cell.t;
        double const theta = j + 1 == grid_n ? kHalfPi
                                             : cfg.theta_min + static_cast<double>(j) * cell.theta;
        return TetherCoord{t, theta};
    };
    auto eval = [&](TetherCoord const& c) {
        if (!is_feasible(cfg, c))
            return std::numeric_limits<double>::infinity();
        return path_loss(to_cartesian(cfg, c), env, mode);
    };

    std::vector<double> values(grid_n * grid_n);
    parallel_for(
        grid_n,
        [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i)
                for (std::size_t j = 0; j < grid_n; ++j)
                    values[i * grid_n + j] = eval(coarse(i, j));
        },
        threads);

    // t-major scan with strict improvement keeps the smallest t, then theta, on ties.
    std::size_t best_idx = 0;
    double best_pl = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < values.size(); ++k)
    {
        if (values[k] < best_pl - kTieTolDb)
        {
            best_pl = values[k];
            best_idx = k;
        }
    }
    if (!std::isfinite(best_pl))
        throw std::logic_error("brute_force: no feasible grid point");

    TetherCoord const incumbent = coarse(best_idx / grid_n, best_idx % grid_n);
    TetherCoord best = incumbent;
    best_pl = std::numeric_limits<double>::infinity();
    auto const fine_steps = static_cast<long>(kRefineFactor);
    for (long a = -fine_steps; a <= fine_steps; ++a)
    {
        double const t = incumbent.t + static_cast<double>(a) * cell.t / kRefineFactor;
        if (t < 0.0 || t > cfg.t_max)
            continue;
        for (long b = -fine_steps; b <= fine_steps; ++b)
        {
            double const theta
                = incumbent.theta + static_cast<double>(b) * cell.theta / kRefineFactor;
            if (theta < cfg.theta_min || theta > kHalfPi)
                continue;
            TetherCoord const c{t, theta};
            double const pl = eval(c);
            if (pl < best_pl - kTieTolDb)
            {
                best_pl = pl;
                best = c;
            }
        }
    }
    return evaluate_placement(cfg, env, mode, best, SolutionKind::BruteForce);
}

bool on_optimal_boundary(PlacementConfig const& cfg, TetherCoord const& c, double t_tol,
                         double theta_tol)
{
    bool const on_min_angle = std::abs(c.theta - cfg.theta_min) <= theta_tol;
    if (cfg.d > cfg.t_max * std::cos(cfg.theta_min))
        return on_min_angle || std::abs(c.t - cfg.t_max) <= t_tol;
    return on_min_angle && c.t <= cfg.d / std::cos(cfg.theta_min) + t_tol;
}

}  // namespace tuav
