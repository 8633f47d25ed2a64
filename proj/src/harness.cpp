#include "mosar/harness.hpp"

#include <glob.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace mosar {
namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::pair<double, double> mean_std(const std::vector<double>& values) {
    if (values.empty()) return {0.0, 0.0};
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    if (values.size() < 2) return {mean, 0.0};
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    return {mean, std::sqrt(var / static_cast<double>(values.size() - 1))};
}

std::string run_filename(const RunMeta& meta) {
    std::string name = meta.problem;
    if (meta.problem == "config") name += "_sl" + fmt_short(meta.side_length);
    name += "_" + meta.algorithm + "_seed" + std::to_string(meta.seed);
    return name;
}

std::vector<std::filesystem::path> glob_paths(const std::string& pattern) {
    ::glob_t g{};
    const int rc = ::glob(pattern.c_str(), 0, nullptr, &g);
    std::vector<std::filesystem::path> out;
    if (rc == 0) {
        for (std::size_t i = 0; i < g.gl_pathc; ++i) out.emplace_back(g.gl_pathv[i]);
    }
    ::globfree(&g);
    if (rc != 0 && rc != GLOB_NOMATCH)
        throw std::runtime_error("glob failed for pattern: " + pattern);
    return out;
}

std::string canonical_metric(std::string token) {
    std::transform(token.begin(), token.end(), token.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    token.erase(std::remove(token.begin(), token.end(), '_'), token.end());
    return token;
}

}  // namespace

Algorithm parse_algorithm(std::string_view name) {
    if (name == "amosa") return Algorithm::Amosa;
    if (name == "mosar1") return Algorithm::MosarV1;
    if (name == "mosar2") return Algorithm::MosarV2;
    throw std::invalid_argument("unknown algorithm '" + std::string(name) +
                                "' (expected amosa, mosar1 or mosar2)");
}

std::string algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::Amosa: return "amosa";
        case Algorithm::MosarV1: return "mosar1";
        case Algorithm::MosarV2: return "mosar2";
    }
    return "?";
}

ExtentMode parse_extent_mode(std::string_view name) {
    if (name == "exact") return ExtentMode::Exact;
    if (name == "paper") return ExtentMode::TrigApprox;
    throw std::invalid_argument("unknown envelope mode '" + std::string(name) +
                                "' (expected exact or paper)");
}

std::string extent_mode_name(ExtentMode mode) {
    return mode == ExtentMode::Exact ? "exact" : "paper";
}

Schedule default_schedule(std::string_view problem_name) {
    if (problem_name == "srn") return {100.0, 1e-4, 0.8, 81};
    if (problem_name == "tnk") return {100.0, 1e-4, 0.8, 162};
    if (problem_name == "config") return {1000.0, 1e-2, 0.95, 200};
    throw std::invalid_argument("unknown problem '" + std::string(problem_name) +
                                "' (expected srn, tnk or config)");
}

std::string serialize_run(const RunRecord& record) {
    const RunMeta& m = record.meta;
    const RunResult& r = record.result;
    std::ostringstream out;
    out << "mosar-run 1\n";
    out << "problem " << m.problem << "\n";
    out << "algorithm " << m.algorithm << "\n";
    out << "seed " << m.seed << "\n";
    if (m.problem == "config") {
        out << "sl " << fmt(m.side_length) << "\n";
        out << "envelope " << m.envelope << "\n";
    }
    out << "tmax " << fmt(m.schedule.t_max) << "\n";
    out << "tmin " << fmt(m.schedule.t_min) << "\n";
    out << "alpha " << fmt(m.schedule.alpha) << "\n";
    out << "iters_per_temp " << m.schedule.iters_per_temp << "\n";
    out << "translation_scale " << fmt(m.move.translation_scale) << "\n";
    out << "rotation_scale " << fmt(m.move.rotation_scale) << "\n";
    out << "translation_probability " << fmt(m.move.translation_probability) << "\n";
    out << "benchmark_scale_fraction " << fmt(m.move.benchmark_scale_fraction) << "\n";
    out << "decision_dimension " << m.decision_dimension << "\n";
    out << "objective_count " << m.objective_count << "\n";
    out << "constraint_count " << m.constraint_count << "\n";
    out << "init_evaluations " << r.init_evaluations << "\n";
    out << "main_evaluations " << r.main_evaluations << "\n";
    out << "feasible_count " << r.feasible_count() << "\n";
    out << "wall_seconds " << fmt(r.wall_seconds) << "\n";
    out << "trace " << r.feasible_trace.size();
    for (int v : r.feasible_trace) out << " " << v;
    out << "\n";
    out << "archive " << r.archive.size() << "\n";
    for (const ArchiveEntry& e : r.archive) {
        for (std::size_t i = 0; i < e.decision.size(); ++i)
            out << (i ? " " : "") << fmt(e.decision[i]);
        out << " |";
        for (double v : e.objectives.values) out << " " << fmt(v);
        out << " | " << (e.objectives.feasible() ? 1 : 0) << "\n";
    }
    return out.str();
}

void write_run_file(const std::filesystem::path& path, const RunRecord& record) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << serialize_run(record);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

RunRecord read_run_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    const auto malformed = [&](const std::string& what) {
        return std::runtime_error("malformed run file " + path.string() + ": " + what);
    };

    std::string magic;
    int version = 0;
    in >> magic >> version;
    if (magic != "mosar-run" || version != 1) throw malformed("bad header");

    RunRecord record;
    RunMeta& m = record.meta;
    RunResult& r = record.result;
    std::string key;
    while (in >> key) {
        if (key == "problem") in >> m.problem;
        else if (key == "algorithm") in >> m.algorithm;
        else if (key == "seed") in >> m.seed;
        else if (key == "sl") in >> m.side_length;
        else if (key == "envelope") in >> m.envelope;
        else if (key == "tmax") in >> m.schedule.t_max;
        else if (key == "tmin") in >> m.schedule.t_min;
        else if (key == "alpha") in >> m.schedule.alpha;
        else if (key == "iters_per_temp") in >> m.schedule.iters_per_temp;
        else if (key == "translation_scale") in >> m.move.translation_scale;
        else if (key == "rotation_scale") in >> m.move.rotation_scale;
        else if (key == "translation_probability") in >> m.move.translation_probability;
        else if (key == "benchmark_scale_fraction") in >> m.move.benchmark_scale_fraction;
        else if (key == "decision_dimension") in >> m.decision_dimension;
        else if (key == "objective_count") in >> m.objective_count;
        else if (key == "constraint_count") in >> m.constraint_count;
        else if (key == "init_evaluations") in >> r.init_evaluations;
        else if (key == "main_evaluations") in >> r.main_evaluations;
        else if (key == "feasible_count") { int ignored; in >> ignored; }
        else if (key == "wall_seconds") in >> r.wall_seconds;
        else if (key == "trace") {
            std::size_t n = 0;
            in >> n;
            r.feasible_trace.resize(n);
            for (std::size_t i = 0; i < n; ++i) in >> r.feasible_trace[i];
        } else if (key == "archive") {
            std::size_t n = 0;
            in >> n;
            r.archive.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                ArchiveEntry& e = r.archive[i];
                e.id = i;
                e.decision.resize(static_cast<std::size_t>(m.decision_dimension));
                for (double& v : e.decision) in >> v;
                std::string sep;
                in >> sep;
                if (sep != "|") throw malformed("archive entry separator");
                e.objectives.values.resize(static_cast<std::size_t>(m.objective_count));
                e.objectives.constraint_count = m.constraint_count;
                for (double& v : e.objectives.values) in >> v;
                int flag;
                in >> sep >> flag;
                if (sep != "|") throw malformed("archive entry separator");
            }
            if (!in) throw malformed("truncated archive");
            return record;
        } else {
            throw malformed("unknown key '" + key + "'");
        }
        if (!in) throw malformed("bad value for key '" + key + "'");
    }
    throw malformed("missing archive section");
}

void write_pareto_csv(const std::filesystem::path& path, const ParetoSet& ps) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "f1,f2\n";
    for (const Point2& p : ps.points) out << fmt(p[0]) << "," << fmt(p[1]) << "\n";
}

ParetoSet run_pareto_set(const RunRecord& record) {
    const auto problem = make_problem(record.meta.problem, record.meta.problem == "config"
                                                               ? record.meta.side_length
                                                               : 9.0);
    ParetoSet ps = feasible_projection(record.result.archive, problem->descriptor());
    ps.algorithm = record.meta.algorithm;
    ps.seed = record.meta.seed;
    return ps;
}

RunRecord execute_run(const RunMeta& meta) {
    const auto problem =
        make_problem(meta.problem, meta.side_length, parse_extent_mode(meta.envelope));
    RunRecord record;
    record.meta = meta;
    record.meta.decision_dimension = problem->descriptor().dimension();
    record.meta.objective_count = problem->descriptor().objective_count;
    record.meta.constraint_count = problem->descriptor().constraint_count;
    record.result =
        run(*problem, parse_algorithm(meta.algorithm), meta.schedule, meta.move, meta.seed);
    return record;
}

std::filesystem::path metrics_cache_dir() {
    if (const char* env = std::getenv("MOSAR_CACHE_DIR"); env && *env) return env;
    return "cache";
}

namespace {

Schedule schedule_with_overrides(std::string_view problem, const std::optional<double>& t_max,
                                 const std::optional<double>& t_min,
                                 const std::optional<double>& alpha,
                                 const std::optional<int>& iters) {
    Schedule s = default_schedule(problem);
    if (t_max) s.t_max = *t_max;
    if (t_min) s.t_min = *t_min;
    if (alpha) s.alpha = *alpha;
    if (iters) s.iters_per_temp = *iters;
    s.validate();
    return s;
}

struct SweepTables {
    std::string cardinality, spacing, coverage, proportion;
};

std::string table_cell(double mean, double std) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f (%.4f)", mean, std);
    return buf;
}

// Group records as records[sl][algorithm] -> per-seed Pareto sets, with SLs
// descending and algorithms in canonical order.
struct SweepGroups {
    std::vector<double> sls;
    std::vector<std::string> algorithms;
    std::vector<std::uint64_t> seeds;
    // keyed by (sl index, algorithm index), seed-ordered
    std::map<std::pair<std::size_t, std::size_t>, std::vector<ParetoSet>> sets;
    std::string config_echo;
};

SweepGroups group_records(const std::vector<RunRecord>& records) {
    SweepGroups g;
    for (const RunRecord& r : records) {
        if (std::find(g.sls.begin(), g.sls.end(), r.meta.side_length) == g.sls.end())
            g.sls.push_back(r.meta.side_length);
        if (std::find(g.algorithms.begin(), g.algorithms.end(), r.meta.algorithm) ==
            g.algorithms.end())
            g.algorithms.push_back(r.meta.algorithm);
        if (std::find(g.seeds.begin(), g.seeds.end(), r.meta.seed) == g.seeds.end())
            g.seeds.push_back(r.meta.seed);
    }
    std::sort(g.sls.begin(), g.sls.end(), std::greater<>());
    const std::vector<std::string> canonical = {"amosa", "mosar1", "mosar2"};
    std::sort(g.algorithms.begin(), g.algorithms.end(), [&](const auto& a, const auto& b) {
        return std::find(canonical.begin(), canonical.end(), a) <
               std::find(canonical.begin(), canonical.end(), b);
    });
    std::sort(g.seeds.begin(), g.seeds.end());

    for (const std::uint64_t seed : g.seeds) {
        for (const RunRecord& r : records) {
            if (r.meta.seed != seed) continue;
            const auto si = static_cast<std::size_t>(
                std::find(g.sls.begin(), g.sls.end(), r.meta.side_length) - g.sls.begin());
            const auto ai = static_cast<std::size_t>(
                std::find(g.algorithms.begin(), g.algorithms.end(), r.meta.algorithm) -
                g.algorithms.begin());
            g.sets[{si, ai}].push_back(run_pareto_set(r));
        }
    }

    if (!records.empty()) {
        const RunMeta& m = records.front().meta;
        std::ostringstream echo;
        echo << "# problem " << m.problem << " envelope " << m.envelope << " tmax "
             << fmt_short(m.schedule.t_max) << " tmin " << fmt_short(m.schedule.t_min)
             << " alpha " << fmt_short(m.schedule.alpha) << " iters "
             << m.schedule.iters_per_temp << "\n# seeds";
        for (std::uint64_t s : g.seeds) echo << " " << s;
        echo << "\n";
        g.config_echo = echo.str();
    }
    return g;
}

SweepTables build_sweep_tables(const std::vector<RunRecord>& records) {
    const SweepGroups g = group_records(records);
    SweepTables tables;

    // Cardinality and minimal spacing: one row per SL, one column per
    // algorithm, cells are mean (std) over seeds.
    std::ostringstream card, spacing;
    card << "# cardinality N, mean (std)\n" << g.config_echo << "SL";
    spacing << "# minimal spacing S_m, mean (std)\n" << g.config_echo << "SL";
    for (const auto& a : g.algorithms) {
        card << "\t" << a;
        spacing << "\t" << a;
    }
    card << "\n";
    spacing << "\n";
    for (std::size_t si = 0; si < g.sls.size(); ++si) {
        card << fmt_short(g.sls[si]);
        spacing << fmt_short(g.sls[si]);
        for (std::size_t ai = 0; ai < g.algorithms.size(); ++ai) {
            std::vector<double> n_values, sm_values;
            for (const ParetoSet& ps : g.sets.at({si, ai})) {
                n_values.push_back(static_cast<double>(cardinality(ps)));
                sm_values.push_back(minimal_spacing(ps));
            }
            const auto [nm, ns] = mean_std(n_values);
            const auto [sm, ss] = mean_std(sm_values);
            card << "\t" << table_cell(nm, ns);
            spacing << "\t" << table_cell(sm, ss);
        }
        card << "\n";
        spacing << "\n";
    }
    tables.cardinality = card.str();
    tables.spacing = spacing.str();

    // Coverage: one column per ordered algorithm pair, seed-paired runs.
    std::ostringstream cov;
    cov << "# coverage C(A,B), mean (std) over seed-paired runs\n" << g.config_echo << "SL";
    for (std::size_t a = 0; a < g.algorithms.size(); ++a)
        for (std::size_t b = 0; b < g.algorithms.size(); ++b)
            if (a != b) cov << "\tC(" << g.algorithms[a] << "," << g.algorithms[b] << ")";
    cov << "\n";
    for (std::size_t si = 0; si < g.sls.size(); ++si) {
        cov << fmt_short(g.sls[si]);
        for (std::size_t a = 0; a < g.algorithms.size(); ++a) {
            for (std::size_t b = 0; b < g.algorithms.size(); ++b) {
                if (a == b) continue;
                const auto& runs_a = g.sets.at({si, a});
                const auto& runs_b = g.sets.at({si, b});
                std::vector<double> values;
                for (std::size_t s = 0; s < std::min(runs_a.size(), runs_b.size()); ++s)
                    values.push_back(coverage(runs_a[s], runs_b[s]));
                const auto [m, sd] = mean_std(values);
                cov << "\t" << table_cell(m, sd);
            }
        }
        cov << "\n";
    }
    tables.coverage = cov.str();

    // Accounted proportion per SL over the union of each algorithm's runs.
    std::ostringstream prop;
    prop << "# accounted proportion P\n" << g.config_echo << "SL";
    for (const auto& a : g.algorithms) prop << "\t" << a;
    prop << "\n";
    for (std::size_t si = 0; si < g.sls.size(); ++si) {
        std::vector<std::vector<ParetoSet>> per_algorithm;
        for (std::size_t ai = 0; ai < g.algorithms.size(); ++ai)
            per_algorithm.push_back(g.sets.at({si, ai}));
        const std::vector<double> p = accounted_proportion(per_algorithm);
        prop << fmt_short(g.sls[si]);
        for (double v : p) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * v);
            prop << "\t" << buf;
        }
        prop << "\n";
    }
    tables.proportion = prop.str();
    return tables;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

}  // namespace

int cmd_solve(const SolveOptions& options) {
    RunMeta meta;
    try {
        meta.problem = options.problem;
        meta.algorithm = options.algorithm;
        parse_algorithm(options.algorithm);
        parse_extent_mode(options.envelope);
        meta.seed = options.seed;
        meta.side_length = options.side_length;
        meta.envelope = options.envelope;
        meta.schedule = schedule_with_overrides(options.problem, options.t_max, options.t_min,
                                                options.alpha, options.iters_per_temp);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const RunRecord record = execute_run(meta);
        const std::filesystem::path out_dir(options.out_dir);
        std::filesystem::create_directories(out_dir);
        const std::string stem = run_filename(meta);
        write_run_file(out_dir / (stem + ".run"), record);
        const ParetoSet ps = run_pareto_set(record);
        write_pareto_csv(out_dir / (stem + ".csv"), ps);

        std::cout << "run " << stem << ": " << record.result.main_evaluations
                  << " evaluations, archive " << record.result.archive.size() << ", feasible "
                  << record.result.feasible_count() << "\n";
        std::vector<double> mins(static_cast<std::size_t>(record.meta.objective_count),
                                 std::numeric_limits<double>::infinity());
        bool any_feasible = false;
        for (const ArchiveEntry& e : record.result.archive) {
            if (!e.objectives.feasible()) continue;
            any_feasible = true;
            for (std::size_t i = 0; i < mins.size(); ++i)
                mins[i] = std::min(mins[i], e.objectives.values[i]);
        }
        if (any_feasible) {
            std::cout << "best feasible objective values:";
            for (double v : mins) std::cout << " " << fmt_short(v);
            std::cout << "\n";
        } else {
            std::cout << "no feasible solutions found\n";
        }
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

int cmd_sweep(const SweepOptions& options) {
    std::vector<double> grid = options.sl_grid;
    if (options.full_grid) {
        grid.clear();
        for (int i = 94; i >= 82; --i) grid.push_back(static_cast<double>(i) / 10.0);
    }

    std::vector<RunMeta> metas;
    try {
        if (grid.empty() || options.seeds.empty() || options.algorithms.empty())
            throw std::invalid_argument("sweep requires non-empty SL grid, seeds and algorithms");
        const Schedule schedule = schedule_with_overrides(
            "config", options.t_max, options.t_min, options.alpha, options.iters_per_temp);
        parse_extent_mode(options.envelope);
        for (double sl : grid) {
            if (!(sl > 0.0)) throw std::invalid_argument("SL values must be positive");
            for (const std::string& algorithm : options.algorithms) {
                parse_algorithm(algorithm);
                for (std::uint64_t seed : options.seeds) {
                    RunMeta meta;
                    meta.problem = "config";
                    meta.algorithm = algorithm;
                    meta.seed = seed;
                    meta.side_length = sl;
                    meta.envelope = options.envelope;
                    meta.schedule = schedule;
                    metas.push_back(meta);
                }
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const std::filesystem::path out_dir(options.out_dir);
        std::filesystem::create_directories(out_dir);

        std::vector<RunRecord> records(metas.size());
        std::atomic<std::size_t> next{0};
        std::mutex io_mutex;
        const unsigned hw = std::thread::hardware_concurrency();
        const std::size_t n_threads = std::min<std::size_t>(
            metas.size(),
            options.threads > 0 ? static_cast<std::size_t>(options.threads)
                                : std::max<std::size_t>(1, hw));
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < metas.size(); i = next.fetch_add(1)) {
                records[i] = execute_run(metas[i]);
                const std::string stem = run_filename(metas[i]);
                write_run_file(out_dir / (stem + ".run"), records[i]);
                write_pareto_csv(out_dir / (stem + ".csv"), run_pareto_set(records[i]));
                std::scoped_lock lock(io_mutex);
                std::cout << "run " << stem << ": feasible "
                          << records[i].result.feasible_count() << " ("
                          << fmt_short(records[i].result.wall_seconds) << "s)\n";
            }
        };
        std::vector<std::thread> pool;
        for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();

        const SweepTables tables = build_sweep_tables(records);
        write_text_file(out_dir / "summary_cardinality.txt", tables.cardinality);
        write_text_file(out_dir / "summary_spacing.txt", tables.spacing);
        write_text_file(out_dir / "summary_coverage.txt", tables.coverage);
        write_text_file(out_dir / "summary_proportion.txt", tables.proportion);
        std::cout << "\n" << tables.cardinality << "\n" << tables.spacing << "\n"
                  << tables.coverage << "\n" << tables.proportion;
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

int cmd_metrics(const MetricsOptions& options) {
    std::vector<std::string> metrics;
    for (const std::string& m : options.metrics) {
        const std::string c = canonical_metric(m);
        if (c != "N" && c != "IGD" && c != "HV" && c != "C" && c != "SM" && c != "P") {
            std::cerr << "error: unknown metric '" << m << "'\n";
            return kExitUsage;
        }
        metrics.push_back(c);
    }
    if (metrics.empty() || options.inputs_glob.empty()) {
        std::cerr << "error: metrics requires --inputs and --metrics\n";
        return kExitUsage;
    }
    const bool wants_coverage =
        std::find(metrics.begin(), metrics.end(), "C") != metrics.end();
    if (wants_coverage && options.against_glob.empty()) {
        std::cerr << "error: metric C requires --against\n";
        return kExitUsage;
    }

    std::vector<std::filesystem::path> input_paths, against_paths;
    std::vector<RunRecord> inputs, against;
    std::filesystem::path current;
    try {
        input_paths = glob_paths(options.inputs_glob);
        if (input_paths.empty()) {
            std::cerr << "error: no files match " << options.inputs_glob << "\n";
            return kExitRuntime;
        }
        for (const auto& p : input_paths) {
            current = p;
            inputs.push_back(read_run_file(p));
        }
        if (!options.against_glob.empty()) {
            against_paths = glob_paths(options.against_glob);
            for (const auto& p : against_paths) {
                current = p;
                against.push_back(read_run_file(p));
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }

    std::vector<ParetoSet> input_sets, against_sets;
    for (const RunRecord& r : inputs) input_sets.push_back(run_pareto_set(r));
    for (const RunRecord& r : against) against_sets.push_back(run_pareto_set(r));

    try {
        for (const std::string& metric : metrics) {
            if (metric == "N") {
                std::vector<double> values;
                for (std::size_t i = 0; i < inputs.size(); ++i) {
                    values.push_back(static_cast<double>(cardinality(input_sets[i])));
                    std::cout << "N " << input_paths[i].string() << " "
                              << cardinality(input_sets[i]) << "\n";
                }
                const auto [m, s] = mean_std(values);
                std::cout << "N mean " << fmt_short(m) << " std " << fmt_short(s) << "\n";
            } else if (metric == "SM") {
                std::vector<double> values;
                for (std::size_t i = 0; i < inputs.size(); ++i) {
                    values.push_back(minimal_spacing(input_sets[i]));
                    std::cout << "S_m " << input_paths[i].string() << " "
                              << fmt_short(values.back()) << "\n";
                }
                const auto [m, s] = mean_std(values);
                std::cout << "S_m mean " << fmt_short(m) << " std " << fmt_short(s) << "\n";
            } else if (metric == "IGD" || metric == "HV") {
                for (const RunRecord& r : inputs) {
                    if (r.meta.problem != "srn" && r.meta.problem != "tnk") {
                        std::cerr << "error: " << metric
                                  << " needs a benchmark reference front (srn or tnk)\n";
                        return kExitUsage;
                    }
                    if (r.meta.problem != inputs.front().meta.problem) {
                        std::cerr << "error: " << metric << " inputs mix problems\n";
                        return kExitUsage;
                    }
                }
                const ParetoSet reference = cached_reference_front(
                    inputs.front().meta.problem, options.reference_resolution,
                    metrics_cache_dir());
                std::vector<double> values;
                for (std::size_t i = 0; i < inputs.size(); ++i) {
                    if (metric == "IGD") {
                        const double v = igd(input_sets[i], reference);
                        if (std::isinf(v)) {
                            std::cout << "IGD " << input_paths[i].string() << " empty\n";
                        } else {
                            values.push_back(v);
                            std::cout << "IGD " << input_paths[i].string() << " "
                                      << fmt_short(v) << "\n";
                        }
                    } else {
                        const double v = hypervolume_2d(input_sets[i], reference);
                        values.push_back(v);
                        std::cout << "HV " << input_paths[i].string() << " " << fmt_short(v)
                                  << "\n";
                    }
                }
                const auto [m, s] = mean_std(values);
                std::cout << metric << " mean " << fmt_short(m) << " std " << fmt_short(s)
                          << "\n";
            } else if (metric == "C") {
                if (against_sets.size() != input_sets.size()) {
                    std::cerr << "error: C requires equally many --inputs and --against files\n";
                    return kExitUsage;
                }
                std::vector<double> ab, ba;
                for (std::size_t i = 0; i < input_sets.size(); ++i) {
                    ab.push_back(coverage(input_sets[i], against_sets[i]));
                    ba.push_back(coverage(against_sets[i], input_sets[i]));
                    std::cout << "C " << input_paths[i].string() << " "
                              << against_paths[i].string() << " " << fmt_short(ab.back())
                              << " " << fmt_short(ba.back()) << "\n";
                }
                std::cout << "C mean " << fmt_short(mean_std(ab).first) << " "
                          << fmt_short(mean_std(ba).first) << "\n";
            } else if (metric == "P") {
                std::vector<std::string> algorithms;
                for (const RunRecord& r : inputs) {
                    if (std::find(algorithms.begin(), algorithms.end(), r.meta.algorithm) ==
                        algorithms.end())
                        algorithms.push_back(r.meta.algorithm);
                }
                std::sort(algorithms.begin(), algorithms.end());
                std::vector<std::vector<ParetoSet>> grouped(algorithms.size());
                for (std::size_t i = 0; i < inputs.size(); ++i) {
                    const auto ai = static_cast<std::size_t>(
                        std::find(algorithms.begin(), algorithms.end(),
                                  inputs[i].meta.algorithm) -
                        algorithms.begin());
                    grouped[ai].push_back(input_sets[i]);
                }
                const std::vector<double> p = accounted_proportion(grouped);
                for (std::size_t i = 0; i < algorithms.size(); ++i)
                    std::cout << "P " << algorithms[i] << " " << fmt_short(p[i]) << "\n";
            }
        }
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

std::vector<std::uint64_t> parse_seed_range(std::string_view text) {
    const auto parse_one = [](std::string_view s) -> std::uint64_t {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(std::string(s), &pos);
        if (pos != s.size()) throw std::invalid_argument("bad seed '" + std::string(s) + "'");
        return v;
    };
    std::vector<std::uint64_t> seeds;
    if (const auto dots = text.find(".."); dots != std::string_view::npos) {
        const std::uint64_t lo = parse_one(text.substr(0, dots));
        const std::uint64_t hi = parse_one(text.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument("seed range must be ascending");
        for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
        return seeds;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        seeds.push_back(parse_one(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return seeds;
}

}  // namespace mosar
