#include "tuav/cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tuav/cli/config_file.hpp"
#include "tuav/cli/experiments.hpp"

namespace tuav::cli {
namespace {

namespace fs = std::filesystem;

struct GlobalOptions
{
    std::string mode;
    std::string out_dir;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::size_t samples = 0;
    std::size_t grid = 91;
    std::string config_path;
};

RunConfig load_with_overrides(GlobalOptions const& opts)
{
    RunConfig cfg = load_run_config(opts.config_path);
    if (!opts.mode.empty())
    {
        try
        {
            cfg.mode = parse_path_loss_mode(opts.mode);
        }
        catch (std::invalid_argument const& e)
        {
            throw ParseError(e.what());
        }
    }
    return cfg;
}

nlohmann::json snapshot(RunConfig const& cfg)
{
    nlohmann::json j = cfg.raw;
    j["resolved_mode"] = std::string(to_string(cfg.mode));
    return j;
}

void write_file(fs::path const& path, std::string const& content)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw std::runtime_error("cannot write " + path.string());
    f << content;
}

void write_manifest(fs::path const& dir, RunManifest const& manifest)
{
    write_file(dir / "manifest.json", manifest.to_json().dump(2) + "\n");
}

int cmd_solve_like(std::string const& which, GlobalOptions const& opts, std::ostream& out)
{
    RunConfig const cfg = load_with_overrides(opts);
    if (which == "solve")
    {
        out << solution_to_json(solve(cfg.placement, cfg.env, cfg.mode), cfg.mode).dump(2)
            << '\n';
    }
    else if (which == "suboptimal")
    {
        auto j = solution_to_json(suboptimal(cfg.placement, cfg.env, cfg.mode), cfg.mode);
        j["closed_form"] = closed_form_to_json(suboptimal_closed_form(cfg.placement, cfg.env, cfg.mode));
        out << j.dump(2) << '\n';
    }
    else
    {
        out << bounds_to_json(cfg.placement, opt_bounds(cfg.placement), cfg.env, cfg.mode).dump(2)
            << '\n';
    }
    return kExitOk;
}

int cmd_sweep(GlobalOptions const& opts, std::ostream& out)
{
    auto const started = std::chrono::steady_clock::now();
    RunConfig const cfg = load_with_overrides(opts);
    if (!cfg.sweep)
        throw ParseError("sweep spec must set sweep_variable, sweep_start, sweep_stop, sweep_steps");
    auto const rows = run_sweep(cfg, opts.threads);

    std::ostringstream csv;
    write_sweep_csv(csv, cfg.sweep->variable, rows);
    if (opts.out_dir.empty())
    {
        out << csv.str();
        return kExitOk;
    }

    fs::path const dir(opts.out_dir);
    fs::create_directories(dir);
    std::string const name = "sweep_" + std::string(to_string(cfg.sweep->variable)) + ".csv";
    write_file(dir / name, csv.str());

    RunManifest manifest;
    manifest.command = "sweep";
    manifest.config = snapshot(cfg);
    manifest.outputs = {name};
    manifest.wall_clock_s
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    write_manifest(dir, manifest);
    out << (dir / name).string() << '\n';
    return kExitOk;
}

int cmd_theta_min(GlobalOptions const& opts, std::ostream& out)
{
    auto const started = std::chrono::steady_clock::now();
    RunConfig const cfg = load_with_overrides(opts);
    if (opts.grid < 2)
        throw InvariantError("--grid must be at least 2");

    std::vector<Environment> envs;
    if (cfg.all_environments)
        envs = Environment::presets();
    else
        envs.push_back(cfg.env);

    std::vector<std::pair<std::string, std::string>> files;
    for (auto const& env : envs)
    {
        CityModel const city = cfg.city(env);
        try
        {
            city.validate();
        }
        catch (std::invalid_argument const& e)
        {
            throw InvariantError(e.what());
        }
        auto const table = run_theta_min(city, env.name, opts.grid, opts.samples, opts.seed,
                                         opts.threads);
        std::ostringstream csv;
        write_theta_min_csv(csv, table);
        std::string const label = env.name.empty() ? std::string("custom") : env.name;
        files.emplace_back("theta_min_" + label + ".csv", csv.str());
    }

    if (opts.out_dir.empty())
    {
        for (auto const& [name, content] : files)
        {
            if (files.size() > 1)
                out << "# " << name << '\n';
            out << content;
        }
        return kExitOk;
    }

    fs::path const dir(opts.out_dir);
    fs::create_directories(dir);
    RunManifest manifest;
    manifest.command = "theta-min";
    manifest.config = snapshot(cfg);
    manifest.config["grid"] = opts.grid;
    manifest.config["samples"] = opts.samples;
    if (opts.samples > 0)
        manifest.seeds = {opts.seed};
    for (auto const& [name, content] : files)
    {
        write_file(dir / name, content);
        manifest.outputs.push_back(name);
        out << (dir / name).string() << '\n';
    }
    manifest.wall_clock_s
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    write_manifest(dir, manifest);
    return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Tethered UAV placement and minimum-inclination analysis", "tuav-place"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions opts;
    app.add_option("--mode", opts.mode, "Path-loss mode: linear | additive-db");
    app.add_option("--out", opts.out_dir, "Output directory for CSV files and manifest");
    app.add_option("--seed", opts.seed, "Monte Carlo seed");
    app.add_option("--threads", opts.threads, "Worker threads (0 = TUAV_PLACE_THREADS or auto)");

    std::vector<std::pair<std::string, CLI::App*>> subs;
    for (auto const& [name, help] : std::vector<std::pair<std::string, std::string>>{
             {"solve", "Optimal placement as JSON"},
             {"bounds", "Reduced search set for the optimum as JSON"},
             {"suboptimal", "LoS-maximizing closed-form placement as JSON"},
             {"sweep", "Parameter sweep to CSV"},
             {"theta-min", "CDF and mean of the minimum inclination angle to CSV"}})
    {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("config", opts.config_path, "Configuration file")->required();
        subs.emplace_back(name, sub);
    }
    CLI::App* theta = subs.back().second;
    theta->add_option("--samples", opts.samples, "Monte Carlo samples (0 = analytic only)");
    theta->add_option("--grid", opts.grid, "Number of angles on [0, 90] degrees");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (CLI::CallForHelp const&)
    {
        out << app.help();
        return kExitOk;
    }
    catch (CLI::ParseError const& e)
    {
        err << "tuav-place: " << e.what() << '\n';
        return kExitParse;
    }

    try
    {
        for (auto const& [name, sub] : subs)
        {
            if (!sub->parsed())
                continue;
            if (name == "sweep")
                return cmd_sweep(opts, out);
            if (name == "theta-min")
                return cmd_theta_min(opts, out);
            return cmd_solve_like(name, opts, out);
        }
    }
    catch (ParseError const& e)
    {
        err << "tuav-place: parse error: " << e.what() << '\n';
        return kExitParse;
    }
    catch (InvariantError const& e)
    {
        err << "tuav-place: invalid configuration: " << e.what() << '\n';
        return kExitInvariant;
    }
    catch (std::invalid_argument const& e)
    {
        err << "tuav-place: invalid configuration: " << e.what() << '\n';
        return kExitInvariant;
    }
    catch (std::exception const& e)
    {
        err << "tuav-place: error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitParse;
}

}  // namespace tuav::cli
