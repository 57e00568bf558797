#include "tuav/placement_optimizer.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace tuav {
namespace {

constexpr double kHalfPi = oracle::kPi / 2;

PlacementConfig cfg_of(double d, double theta_min_deg = 0.0, double t_max = 150.0,
                       double h_b = 30.0)
{
    return {h_b, d, t_max, deg_to_rad(theta_min_deg)};
}

TEST(CriticalT, Values)
{
    auto const cfg = cfg_of(100.0);
    EXPECT_DOUBLE_EQ(100.0, critical_t(cfg, 0.0));
    EXPECT_NEAR(-30.0, critical_t(cfg, kHalfPi), 1e-12);
    EXPECT_NEAR(71.60254037844388, critical_t(cfg, deg_to_rad(30.0)), 1e-10);
}

// argmin over t of R^2 = d^2 + h^2 + t^2 - 2dt cos + 2ht sin, by dense scan.
TEST(CriticalT, MatchesNumericalMinimizerOfRangeSquared)
{
    auto const cfg = cfg_of(100.0);
    double const theta = deg_to_rad(30.0);
    double best_t = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 200000; ++i)
    {
        double const t = i * 1e-3;
        double const r2 = cfg.d * cfg.d + cfg.h_b * cfg.h_b + t * t
                          - 2 * cfg.d * t * std::cos(theta) + 2 * cfg.h_b * t * std::sin(theta);
        if (r2 < best)
        {
            best = r2;
            best_t = t;
        }
    }
    EXPECT_NEAR(critical_t(cfg, theta), best_t, 1e-3);
}

TEST(CriticalTheta, Values)
{
    auto const cfg = cfg_of(300.0);
    EXPECT_NEAR(0.0, critical_theta(cfg, cfg.d), 1e-12);
    EXPECT_NEAR(std::asin(300.0 / std::hypot(300.0, 30.0)), critical_theta(cfg, 0.0), 1e-15);
    EXPECT_NEAR(0.9503918161192513, critical_theta(cfg, 150.0), 1e-12);
    EXPECT_THROW(critical_theta(cfg, 400.0), std::invalid_argument);
}

// argmax over theta of z/x for t = 150, by dense scan.
TEST(CriticalTheta, MatchesNumericalMaximizerOfHeightRatio)
{
    auto const cfg = cfg_of(300.0);
    double const t = 150.0;
    double best_theta = 0.0;
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 157079; ++i)
    {
        double const th = i * 1e-5;
        double const ratio = (cfg.h_b + t * std::sin(th)) / (cfg.d - t * std::cos(th));
        if (ratio > best)
        {
            best = ratio;
            best_theta = th;
        }
    }
    EXPECT_NEAR(critical_theta(cfg, t), best_theta, 2e-5);
}

TEST(OptBounds, CollapsedNearField)
{
    auto const b = opt_bounds(cfg_of(100.0));
    EXPECT_EQ(RegimeLabel::NearField, b.regime);
    EXPECT_EQ(FreeVariable::TetherLength, b.free_variable);
    EXPECT_DOUBLE_EQ(0.0, b.fixed_value);
    EXPECT_DOUBLE_EQ(100.0, b.lower);
    EXPECT_DOUBLE_EQ(100.0, b.upper);
}

TEST(OptBounds, FarField)
{
    auto const b = opt_bounds(cfg_of(300.0));
    EXPECT_EQ(RegimeLabel::FarField, b.regime);
    EXPECT_EQ(FreeVariable::InclinationAngle, b.free_variable);
    EXPECT_DOUBLE_EQ(150.0, b.fixed_value);
    EXPECT_DOUBLE_EQ(0.0, b.lower);
    EXPECT_NEAR(0.9503918161192513, b.upper, 1e-12);
}

TEST(OptBounds, MidField)
{
    auto const b = opt_bounds(cfg_of(160.0, 15.0));
    EXPECT_EQ(RegimeLabel::MidField, b.regime);
    EXPECT_NEAR(deg_to_rad(15.0), b.fixed_value, 1e-15);
    EXPECT_NEAR(146.78356085317532, b.lower, 1e-9);
    EXPECT_DOUBLE_EQ(150.0, b.upper);
}

TEST(OptBounds, LowerNeverExceedsUpper)
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 5000; ++i)
    {
        auto const b = opt_bounds(oracle::random_config(rng));
        EXPECT_LE(b.lower, b.upper);
    }
}

TEST(Solve, DirectlyAboveReceiverWhenReachable)
{
    auto const env = Environment::dense_urban();
    for (double d : {1.0, 50.0, 100.0, 149.0, 150.0})
    {
        auto const sol = solve(cfg_of(d), env);
        EXPECT_NEAR(d, sol.coord.t, kSolveTolLength);
        EXPECT_NEAR(0.0, sol.coord.theta, kSolveTolAngle);
        EXPECT_NEAR(0.0, sol.position.x, 1e-6);
        EXPECT_NEAR(30.0, sol.position.z, 1e-9);
        EXPECT_EQ(SolutionKind::Optimal, sol.kind);
    }
}

TEST(Solve, ZeroDistanceStaysOnRoof)
{
    auto const env = Environment::dense_urban();
    for (double th : {0.0, 20.0})
    {
        auto const cfg = cfg_of(0.0, th);
        auto const sol = solve(cfg, env);
        EXPECT_EQ(0.0, sol.coord.t);
        EXPECT_NEAR(0.0, sol.position.x, 1e-12);
        EXPECT_DOUBLE_EQ(30.0, sol.position.z);
        EXPECT_NEAR(path_loss({0, 0, 30}, env), sol.pl_db, 1e-12);
        auto const bf = brute_force(cfg, env, PathLossMode::LinearEq2, 200);
        EXPECT_GE(bf.pl_db, sol.pl_db - 1e-9);
    }
}

TEST(Solve, GoldenFarField)
{
    // Frozen from an independent bounded scalar minimization.
    auto const env = Environment::dense_urban();
    auto const lin = solve(cfg_of(300.0), env, PathLossMode::LinearEq2);
    EXPECT_NEAR(0.2894677729, lin.coord.theta, 1e-6);
    EXPECT_DOUBLE_EQ(150.0, lin.coord.t);
    EXPECT_NEAR(63.7979244775, lin.pl_db, 1e-8);
    auto const add = solve(cfg_of(300.0), env, PathLossMode::AdditiveDb);
    EXPECT_NEAR(0.4211405358, add.coord.theta, 1e-6);
    EXPECT_NEAR(54.6019063420, add.pl_db, 1e-8);

    auto const bf = brute_force(cfg_of(300.0), env, PathLossMode::LinearEq2, 400);
    EXPECT_LE(lin.pl_db, bf.pl_db + 0.01);
    EXPECT_NEAR(lin.pl_db, bf.pl_db, 0.01);
}

TEST(Solve, SolutionFieldsAreConsistent)
{
    auto const env = Environment::urban();
    auto const sol = solve(cfg_of(220.0, 15.0), env, PathLossMode::AdditiveDb);
    auto const p = to_cartesian(cfg_of(220.0, 15.0), sol.coord);
    EXPECT_EQ(p, sol.position);
    EXPECT_DOUBLE_EQ(los_probability(p, env), sol.p_los);
    EXPECT_DOUBLE_EQ(distance(p), sol.range_r);
    EXPECT_DOUBLE_EQ(path_loss(p, env, PathLossMode::AdditiveDb), sol.pl_db);
}

TEST(Suboptimal, OverheadWhenReachable)
{
    auto const env = Environment::dense_urban();
    auto const closed = suboptimal_closed_form(cfg_of(100.0), env);
    EXPECT_NEAR(0.37 * std::pow(75.0, 0.21), closed.p_los, 1e-15);
    EXPECT_DOUBLE_EQ(30.0, closed.range_r);
    auto const sol = suboptimal(cfg_of(100.0), env);
    EXPECT_EQ(SolutionKind::Suboptimal, sol.kind);
    EXPECT_NEAR(30.0, sol.range_r, 1e-9);
}

TEST(Suboptimal, NearFieldWithMinimumAngle)
{
    auto const env = Environment::dense_urban();
    auto const closed = suboptimal_closed_form(cfg_of(100.0, 15.0), env);
    EXPECT_NEAR(103.5276180410083, closed.coord.t, 1e-9);
    EXPECT_NEAR(deg_to_rad(15.0), closed.coord.theta, 1e-15);
    EXPECT_NEAR(56.79491924311227, closed.range_r, 1e-9);
}

TEST(Suboptimal, FarFieldTangentRange)
{
    auto const env = Environment::dense_urban();
    auto const cfg = cfg_of(300.0);
    auto const closed = suboptimal_closed_form(cfg, env);
    EXPECT_NEAR(261.5339366124404, closed.range_r, 1e-9);
    EXPECT_NEAR(critical_theta(cfg, 150.0), closed.coord.theta, 1e-15);
    auto const sol = suboptimal(cfg, env);
    EXPECT_NEAR(closed.p_los, sol.p_los, 1e-12);
}

TEST(Suboptimal, NeverBeatsOptimal)
{
    std::mt19937_64 rng(29);
    for (int i = 0; i < 300; ++i)
    {
        auto const cfg = oracle::random_config(rng);
        for (auto mode : {PathLossMode::LinearEq2, PathLossMode::AdditiveDb})
        {
            auto const env = Environment::dense_urban();
            EXPECT_GE(suboptimal(cfg, env, mode).pl_db - solve(cfg, env, mode).pl_db, -1e-6);
        }
    }
}

TEST(BruteForce, RejectsSmallGrid)
{
    EXPECT_THROW(brute_force(cfg_of(100.0), Environment::urban(), PathLossMode::LinearEq2, 50),
                 std::invalid_argument);
}

TEST(BruteForce, FindsOverheadPointWithinOneCell)
{
    auto const env = Environment::dense_urban();
    for (double d : {40.0, 100.0, 140.0})
    {
        auto const cfg = cfg_of(d);
        auto const bf = brute_force(cfg, env, PathLossMode::LinearEq2, 200);
        auto const cell = brute_force_cell(cfg, 200);
        EXPECT_NEAR(d, bf.coord.t, cell.t);
        EXPECT_NEAR(0.0, bf.coord.theta, cell.theta);
        EXPECT_EQ(SolutionKind::BruteForce, bf.kind);
    }
}

TEST(BruteForce, IndependentOfThreadCount)
{
    auto const env = Environment::high_rise_urban();
    auto const cfg = cfg_of(230.0, 15.0);
    auto const one = brute_force(cfg, env, PathLossMode::AdditiveDb, 150, 1);
    for (unsigned threads : {2u, 3u, 7u})
    {
        auto const many = brute_force(cfg, env, PathLossMode::AdditiveDb, 150, threads);
        EXPECT_EQ(one.coord.t, many.coord.t);
        EXPECT_EQ(one.coord.theta, many.coord.theta);
        EXPECT_EQ(one.pl_db, many.pl_db);
    }
}

TEST(BoundaryPredicate, Sets)
{
    auto const far = cfg_of(300.0, 10.0);
    EXPECT_TRUE(on_optimal_boundary(far, {150.0, 0.5}, 1e-6, 1e-6));
    EXPECT_TRUE(on_optimal_boundary(far, {80.0, deg_to_rad(10.0)}, 1e-6, 1e-6));
    EXPECT_FALSE(on_optimal_boundary(far, {80.0, 0.5}, 1e-6, 1e-6));
    auto const near = cfg_of(100.0, 10.0);
    EXPECT_TRUE(on_optimal_boundary(near, {90.0, deg_to_rad(10.0)}, 1e-6, 1e-6));
    EXPECT_FALSE(on_optimal_boundary(near, {150.0, 1.2}, 1e-6, 1e-6));
}

}  // namespace
}  // namespace tuav
