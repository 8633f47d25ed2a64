// mosar: constrained multi-objective simulated annealing toolkit.
//
// Subcommands:
//   solve    one annealing run, result persisted as a .run file
//   sweep    configuration-problem SL sweep with summary tables
//   metrics  quality indicators over stored .run files

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mosar/harness.hpp"

int main(int argc, char** argv) {
    CLI::App app{"constrained multi-objective simulated annealing toolkit"};
    app.require_subcommand(1);

    mosar::SolveOptions solve;
    CLI::App* solve_cmd = app.add_subcommand("solve", "run one annealing run");
    solve_cmd->add_option("--problem", solve.problem, "srn, tnk or config")
        ->capture_default_str();
    solve_cmd->add_option("--algo", solve.algorithm, "amosa, mosar1 or mosar2")
        ->capture_default_str();
    solve_cmd->add_option("--seed", solve.seed, "RNG seed")->capture_default_str();
    solve_cmd->add_option("--sl", solve.side_length, "cube side length (config problem)")
        ->capture_default_str();
    solve_cmd->add_option("--tmax", [&](const CLI::results_t& r) {
        solve.t_max = std::stod(r[0]);
        return true;
    }, "initial temperature");
    solve_cmd->add_option("--tmin", [&](const CLI::results_t& r) {
        solve.t_min = std::stod(r[0]);
        return true;
    }, "final temperature");
    solve_cmd->add_option("--alpha", [&](const CLI::results_t& r) {
        solve.alpha = std::stod(r[0]);
        return true;
    }, "cooling rate in (0,1)");
    solve_cmd->add_option("--iters", [&](const CLI::results_t& r) {
        solve.iters_per_temp = std::stoi(r[0]);
        return true;
    }, "iterations per temperature level");
    solve_cmd->add_option("--envelope", solve.envelope, "extent formula: exact or paper")
        ->capture_default_str();
    solve_cmd->add_option("--out", solve.out_dir, "output directory")->capture_default_str();

    mosar::SweepOptions sweep;
    std::string sweep_seeds = "1..10";
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "configuration-problem SL sweep with summary tables");
    sweep_cmd->add_option("--sl-grid", sweep.sl_grid, "comma-separated SL values")
        ->delimiter(',');
    sweep_cmd->add_flag("--full-grid", sweep.full_grid, "sweep 9.4 down to 8.2 in 0.1 steps");
    sweep_cmd->add_option("--seeds", sweep_seeds, "seed range N..M or comma list")
        ->capture_default_str();
    sweep_cmd->add_option("--algos", sweep.algorithms, "comma-separated algorithm names")
        ->delimiter(',');
    sweep_cmd->add_option("--envelope", sweep.envelope, "extent formula: exact or paper")
        ->capture_default_str();
    sweep_cmd->add_option("--tmax", [&](const CLI::results_t& r) {
        sweep.t_max = std::stod(r[0]);
        return true;
    }, "initial temperature");
    sweep_cmd->add_option("--tmin", [&](const CLI::results_t& r) {
        sweep.t_min = std::stod(r[0]);
        return true;
    }, "final temperature");
    sweep_cmd->add_option("--alpha", [&](const CLI::results_t& r) {
        sweep.alpha = std::stod(r[0]);
        return true;
    }, "cooling rate in (0,1)");
    sweep_cmd->add_option("--iters", [&](const CLI::results_t& r) {
        sweep.iters_per_temp = std::stoi(r[0]);
        return true;
    }, "iterations per temperature level");
    sweep_cmd->add_option("--threads", sweep.threads, "worker threads (0 = hardware)")
        ->capture_default_str();
    sweep_cmd->add_option("--out", sweep.out_dir, "output directory")->capture_default_str();

    mosar::MetricsOptions metrics;
    std::string metrics_list;
    CLI::App* metrics_cmd =
        app.add_subcommand("metrics", "quality indicators over stored .run files");
    metrics_cmd->add_option("--inputs", metrics.inputs_glob, "glob of .run files")->required();
    metrics_cmd->add_option("--metrics", metrics.metrics,
                            "comma-separated subset of N,IGD,HV,C,S_m,P")
        ->delimiter(',')
        ->required();
    metrics_cmd->add_option("--against", metrics.against_glob,
                            "second glob of .run files (metric C)");
    metrics_cmd->add_option("--resolution", metrics.reference_resolution,
                            "reference front grid resolution")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return mosar::kExitUsage;
    }

    try {
        if (*solve_cmd) return mosar::cmd_solve(solve);
        if (*sweep_cmd) {
            sweep.seeds = mosar::parse_seed_range(sweep_seeds);
            return mosar::cmd_sweep(sweep);
        }
        if (*metrics_cmd) return mosar::cmd_metrics(metrics);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return mosar::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return mosar::kExitRuntime;
    }
    return mosar::kExitUsage;
}
