#include "tuav/theta_min_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "tuav/parallel.hpp"

namespace tuav {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// SplitMix64; one independent stream per (seed, sample index).
class SampleRng
{
  public:
    SampleRng(std::uint64_t seed, std::uint64_t index)
        : state_(mix(seed ^ mix(index + 0x9E3779B97F4A7C15ULL)))
    {
    }

    std::uint64_t next()
    {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    static std::uint64_t mix(std::uint64_t z)
    {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

std::uint64_t poisson_inversion(SampleRng& rng, double mean)
{
    double const u = rng.uniform();
    double p = std::exp(-mean);
    double cdf = p;
    std::uint64_t k = 0;
    while (u > cdf)
    {
        ++k;
        p *= mean / static_cast<double>(k);
        cdf += p;
        if (p < 1e-300 && static_cast<double>(k) > mean)
            break;
    }
    return k;
}

std::uint64_t poisson(SampleRng& rng, double mean)
{
    // exp(-mean) underflows for large means; Poisson counts add, so split.
    constexpr double kChunk = 500.0;
    std::uint64_t total = 0;
    while (mean > kChunk)
    {
        total += poisson_inversion(rng, kChunk);
        mean -= kChunk;
    }
    if (mean > 0.0)
        total += poisson_inversion(rng, mean);
    return total;
}

// Adaptive Simpson on [a, b] with absolute tolerance.
template <class F>
double simpson_step(F const& f, double a, double b, double fa, double fm, double fb,
                    double whole, double tol, int depth)
{
    double const m = 0.5 * (a + b);
    double const lm = 0.5 * (a + m);
    double const rm = 0.5 * (m + b);
    double const flm = f(lm);
    double const frm = f(rm);
    double const left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double const right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double const delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
           + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <class F>
double adaptive_simpson(F const& f, double a, double b, double tol)
{
    // Split into panels first so narrow features are not skipped by the
    // initial 3-point estimate.
    constexpr int kPanels = 16;
    double total = 0.0;
    double const h = (b - a) / kPanels;
    for (int k = 0; k < kPanels; ++k)
    {
        double const lo = a + h * k;
        double const hi = k + 1 == kPanels ? b : lo + h;
        double const flo = f(lo);
        double const fhi = f(hi);
        double const fmid = f(0.5 * (lo + hi));
        double const whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
        total += simpson_step(f, lo, hi, flo, fmid, fhi, whole, tol / kPanels, 40);
    }
    return total;
}

}  // namespace

void CityModel::validate() const
{
    if (!(beta > 0.0) || !(gamma > 0.0))
        throw std::invalid_argument("city model: beta and gamma must be positive");
    if (!(h_b >= 0.0))
        throw std::invalid_argument("city model: h_b must be non-negative");
    if (!(t_max > 0.0))
        throw std::invalid_argument("city model: t_max must be positive");
}

CityModel CityModel::from_environment(Environment const& env, double t_max)
{
    return from_environment(env, t_max, env.gamma);
}

CityModel CityModel::from_environment(Environment const& env, double t_max, double h_b)
{
    return {env.beta, env.gamma, h_b, t_max};
}

double lower_incomplete_gamma_half(double x)
{
    return std::sqrt(std::numbers::pi) * std::erf(std::sqrt(x));
}

double cdf_theta_min(CityModel const& city, double theta)
{
    if (theta < 0.0)
        return 0.0;
    if (theta >= kHalfPi)
        return 1.0;

    double const density = city.beta_per_m2();
    double const g = city.gamma;
    double const hb = city.h_b;
    double const tail = std::exp(-hb * hb / (g * g));
    if (theta < kSmallAngle)
        return std::exp(-std::numbers::pi * density * city.t_max * city.t_max * tail);

    double const top = hb + city.t_max * std::sin(theta);
    double const bracket
        = g * (tail - std::exp(-top * top / (g * g)))
          - hb * (lower_incomplete_gamma_half(top * top / (g * g))
                  - lower_incomplete_gamma_half(hb * hb / (g * g)));
    double const tan_theta = std::tan(theta);
    double const exponent = -std::numbers::pi * density * g / (tan_theta * tan_theta) * bracket;
    return std::min(1.0, std::exp(exponent));
}

double mean_theta_min(CityModel const& city, double abs_tol)
{
    city.validate();
    return adaptive_simpson([&](double th) { return 1.0 - cdf_theta_min(city, th); }, 0.0,
                            kHalfPi, abs_tol);
}

std::vector<Building> draw_buildings(CityModel const& city, std::uint64_t seed,
                                     std::uint64_t index)
{
    SampleRng rng(seed, index);
    double const mean = city.beta_per_m2() * std::numbers::pi * city.t_max * city.t_max;
    std::uint64_t const count = poisson(rng, mean);
    std::vector<Building> out;
    out.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k)
    {
        Building b;
        b.range = city.t_max * std::sqrt(rng.uniform());
        b.height = city.gamma * std::sqrt(-std::log1p(-rng.uniform()));
        out.push_back(b);
    }
    return out;
}

double blocking_angle(CityModel const& city, std::span<Building const> buildings)
{
    double worst = -1.0;
    for (auto const& b : buildings)
    {
        if (b.height < city.h_b)
            continue;
        double const reach = std::acos(std::clamp(b.range / city.t_max, 0.0, 1.0));
        double const over = std::atan2(b.height - city.h_b, b.range);
        worst = std::max(worst, std::min(reach, over));
    }
    return worst;
}

bool angle_is_safe(CityModel const& city, std::span<Building const> buildings, double theta)
{
    for (auto const& b : buildings)
    {
        if (b.range <= city.t_max * std::cos(theta)
            && b.height >= city.h_b + b.range * std::tan(theta))
            return false;
    }
    return true;
}

EmpiricalCdf sample_theta_min_cdf(CityModel const& city, std::span<double const> thetas,
                                  std::size_t n_samples, std::uint64_t seed, unsigned threads)
{
    city.validate();
    if (thetas.empty())
        throw std::invalid_argument("sample_theta_min_cdf: empty angle grid");
    if (n_samples == 0)
        throw std::invalid_argument("sample_theta_min_cdf: n_samples must be positive");

    EmpiricalCdf out;
    out.thetas.assign(thetas.begin(), thetas.end());
    std::sort(out.thetas.begin(), out.thetas.end());
    out.n_samples = n_samples;
    out.seed = seed;

    // first_safe[s] = index of the first grid angle that sample s satisfies
    // (grid size if none); safety is monotone in theta.
    std::vector<std::uint32_t> first_safe(n_samples);
    parallel_for(
        n_samples,
        [&](std::size_t begin, std::size_t end) {
            for (std::size_t s = begin; s < end; ++s)
            {
                auto const field = draw_buildings(city, seed, s);
                double const blocked = blocking_angle(city, field);
                auto const it = std::upper_bound(out.thetas.begin(), out.thetas.end(), blocked);
                first_safe[s] = static_cast<std::uint32_t>(it - out.thetas.begin());
            }
        },
        threads);

    std::vector<std::size_t> hist(out.thetas.size() + 1, 0);
    for (auto idx : first_safe)
        ++hist[idx];
    out.probs.resize(out.thetas.size());
    std::size_t running = 0;
    for (std::size_t k = 0; k < out.thetas.size(); ++k)
    {
        running += hist[k];
        out.probs[k] = static_cast<double>(running) / static_cast<double>(n_samples);
    }
    return out;
}

std::vector<double> uniform_theta_grid(std::size_t n)
{
    if (n < 2)
        throw std::invalid_argument("uniform_theta_grid: need at least two points");
    std::vector<double> grid(n);
    for (std::size_t k = 0; k < n; ++k)
        grid[k] = kHalfPi * static_cast<double>(k) / static_cast<double>(n - 1);
    grid.back() = kHalfPi;
    return grid;
}

}  // namespace tuav
