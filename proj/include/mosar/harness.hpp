#ifndef MOSAR_HARNESS_HPP
#define MOSAR_HARNESS_HPP

// Experiment orchestration: run persistence, seed batches, the SL sweep and
// summary-statistic tables, plus the entry points behind the CLI
// subcommands.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mosar/annealer.hpp"
#include "mosar/metrics.hpp"

namespace mosar {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Parses "amosa", "mosar1" or "mosar2"; throws std::invalid_argument
/// otherwise.
Algorithm parse_algorithm(std::string_view name);
std::string algorithm_name(Algorithm algorithm);

/// Parses "exact" or "paper" into the extent mode; throws otherwise.
ExtentMode parse_extent_mode(std::string_view name);
std::string extent_mode_name(ExtentMode mode);

/// The annealing parameters used per problem: 100 / 1e-4 / 0.8 with 81
/// iterations for srn, 162 for tnk; 1000 / 1e-2 / 0.95 with 200 iterations
/// for config.
Schedule default_schedule(std::string_view problem_name);

// Everything needed to reproduce one run, echoed into its output file.
struct RunMeta {
    std::string problem;
    std::string algorithm;
    std::uint64_t seed = 0;
    double side_length = 0.0;      // config only
    std::string envelope = "exact";  // config only
    Schedule schedule;
    MoveConfig move;
    int decision_dimension = 0;
    int objective_count = 0;
    int constraint_count = 0;
};

struct RunRecord {
    RunMeta meta;
    RunResult result;
};

/// Serializes a record as a metadata header followed by one archive entry
/// per line, all floats at 17 significant digits. The payload round-trips
/// bit-exactly; only the wall_seconds field varies between identical runs.
std::string serialize_run(const RunRecord& record);
void write_run_file(const std::filesystem::path& path, const RunRecord& record);
RunRecord read_run_file(const std::filesystem::path& path);  // throws on malformed input

/// Plot-ready CSV of the record's feasible metric projection.
void write_pareto_csv(const std::filesystem::path& path, const ParetoSet& ps);

/// Feasible metric projection of a stored run, provenance filled in.
ParetoSet run_pareto_set(const RunRecord& record);

/// Executes one run according to the meta block and stamps the results.
RunRecord execute_run(const RunMeta& meta);

/// Cache directory for reference fronts: $MOSAR_CACHE_DIR or "cache".
std::filesystem::path metrics_cache_dir();

struct SolveOptions {
    std::string problem = "srn";
    std::string algorithm = "mosar2";
    std::uint64_t seed = 1;
    double side_length = 9.0;
    std::string envelope = "exact";
    std::optional<double> t_max, t_min, alpha;
    std::optional<int> iters_per_temp;
    std::string out_dir = "results";
};

struct SweepOptions {
    std::vector<double> sl_grid = {9.4, 9.0, 8.6, 8.2};
    bool full_grid = false;  // 9.4 down to 8.2 in steps of 0.1
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::vector<std::string> algorithms = {"amosa", "mosar1", "mosar2"};
    std::string envelope = "exact";
    std::optional<double> t_max, t_min, alpha;
    std::optional<int> iters_per_temp;
    std::string out_dir = "sweep";
    int threads = 0;  // 0 = hardware concurrency
};

struct MetricsOptions {
    std::string inputs_glob;
    std::vector<std::string> metrics;  // subset of N, IGD, HV, C, SM, P
    std::string against_glob;          // second operand for C
    int reference_resolution = 2000;
};

int cmd_solve(const SolveOptions& options);
int cmd_sweep(const SweepOptions& options);
int cmd_metrics(const MetricsOptions& options);

/// "N..M", "N" or a comma list of seeds; throws on malformed input.
std::vector<std::uint64_t> parse_seed_range(std::string_view text);

}  // namespace mosar

#endif
