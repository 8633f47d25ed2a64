// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "mosar/annealer.hpp"
#include "mosar/harness.hpp"
#include "mosar/metrics.hpp"
#include "oracles.hpp"

using namespace mosar;

namespace {

int g_checks_failed = 0;

void subcheck(bool ok, const std::string& label) {
    std::printf("    %-64s %s\n", label.c_str(), ok ? "ok" : "FAILED");
    if (!ok) ++g_checks_failed;
}

bool criterion(int before_failures, const std::string& label) {
    const bool ok = g_checks_failed == before_failures;
    std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", label.c_str());
    return ok;
}

double mean(const std::vector<double>& v) { return oracle::mean(v); }

// Runs one (algorithm, seed) batch in parallel worker threads.
std::vector<RunResult> run_batch(const Problem& problem, Algorithm algorithm,
                                 const Schedule& schedule,
                                 const std::vector<std::uint64_t>& seeds) {
    std::vector<RunResult> results(seeds.size());
    std::atomic<std::size_t> next{0};
    const MoveConfig move;
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < seeds.size(); i = next.fetch_add(1))
            results[i] = run(problem, algorithm, schedule, move, seeds[i]);
    };
    const std::size_t n_threads =
        std::min<std::size_t>(seeds.size(),
                              std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return results;
}

const std::vector<std::uint64_t> kSeeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};

// ---------------------------------------------------------------------------
// Criterion 1: exhaustive property suite.

void property_archive_nondomination() {
    // 10^4 randomized steps across all three step rules; the archive must
    // stay mutually non-dominating after every one.
    Rng rng(101);
    bool ok = true;
    for (int variant = 0; variant < 3 && ok; ++variant) {
        AnnealState state{{}, false, {}, 0.4, Rng(500 + static_cast<unsigned>(variant)), 0};
        state.archive.insert({{}, {{0.4, 0.6}, 0}, state.next_id++});
        state.archive.insert({{}, {{0.6, 0.4}, 0}, state.next_id++});
        state.current = state.archive.entries()[0];
        state.current_in_archive = true;
        for (int step = 0; step < 3400 && ok; ++step) {
            ArchiveEntry cand{{}, {{rng.uniform(), rng.uniform()}, 0}, state.next_id++};
            if (variant == 0)
                amosa_step(state, std::move(cand));
            else
                mosar_step(state, std::move(cand),
                           variant == 1 ? ReseedVariant::MinDeltaDom
                                        : ReseedVariant::ConstraintFrontMinDeltaDom,
                           {});
            const auto& entries = state.archive.entries();
            for (std::size_t i = 0; i < entries.size() && ok; ++i)
                for (std::size_t j = i + 1; j < entries.size() && ok; ++j)
                    ok = compare(entries[i].objectives, entries[j].objectives) ==
                         Dominance::NonDominated;
        }
    }
    subcheck(ok, "archive mutual non-domination over 10^4 randomized steps");
}

void property_case_dispatch() {
    // Randomized (archive, current, new) triples: exactly one case fires and
    // dominating/dominated members never coexist.
    Rng rng(102);
    bool ok = true;
    for (int trial = 0; trial < 2000 && ok; ++trial) {
        AnnealState state{{}, false, {}, 1.0, Rng(900 + static_cast<unsigned>(trial)), 0};
        const int members = 1 + static_cast<int>(rng.uniform() * 6);
        for (int i = 0; i < members; ++i) {
            ObjectiveVector v{{rng.uniform(), rng.uniform()}, 0};
            if (state.archive.classify(v).kind !=
                ArchiveClassification::Kind::DominatedByMembers)
                state.archive.insert({{}, std::move(v), state.next_id++});
        }
        if (rng.uniform() < 0.5) {
            state.current =
                state.archive.entries()[state.rng.uniform_index(state.archive.size())];
            state.current_in_archive = true;
        } else {
            // Off-archive current: nudge a member so it becomes dominated.
            ArchiveEntry off = state.archive.entries()[0];
            off.objectives.values[0] += 0.2;
            off.objectives.values[1] += 0.2;
            if (state.archive.contains_objectives(off.objectives)) continue;
            if (state.archive.classify(off.objectives).kind ==
                ArchiveClassification::Kind::DominatesMembers)
                continue;
            state.current = off;
            state.current_in_archive = false;
        }
        const ObjectiveVector probe{{rng.uniform(), rng.uniform()}, 0};
        int dominating = 0, dominated = 0;
        for (const auto& e : state.archive.entries()) {
            const Dominance rel = compare(probe, e.objectives);
            if (rel == Dominance::ADominatesB) ++dominated;
            if (rel == Dominance::BDominatesA) ++dominating;
        }
        ok = dominated == 0 || dominating == 0;
        if (!ok) break;
        ArchiveEntry cand{{}, probe, state.next_id++};
        mosar_step(state, std::move(cand), ReseedVariant::MinDeltaDom, {});
    }
    subcheck(ok, "case dispatch totality/exclusivity on randomized triples");
}

void property_fnds_oracle() {
    Rng rng(103);
    bool ok = true;
    for (int trial = 0; trial < 500 && ok; ++trial) {
        const int n = 1 + static_cast<int>(rng.uniform() * 200);
        const int dims = 2 + static_cast<int>(rng.uniform() * 3);
        std::vector<ObjectiveVector> entries;
        for (int i = 0; i < n; ++i) {
            std::vector<double> v(static_cast<std::size_t>(dims));
            for (double& x : v) x = std::floor(rng.uniform() * 10.0);
            entries.push_back({std::move(v), 0});
        }
        std::vector<int> subset;
        for (int m = 0; m < dims; ++m) subset.push_back(m);
        auto got = fast_nondominated_sort(entries, subset);
        auto want = oracle::peel_fronts(entries, subset);
        ok = got.size() == want.size();
        for (std::size_t f = 0; ok && f < got.size(); ++f) {
            std::sort(got[f].begin(), got[f].end());
            std::sort(want[f].begin(), want[f].end());
            ok = got[f] == want[f];
        }
    }
    subcheck(ok, "fast non-dominated sort equals O(n^2) peeling on 500 sets");
}

void property_segment_distance() {
    Rng rng(104);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Vec3 a0{rng.uniform(), rng.uniform(), rng.uniform()};
        const Vec3 a1{rng.uniform(), rng.uniform(), rng.uniform()};
        const Vec3 b0{rng.uniform(), rng.uniform(), rng.uniform()};
        const Vec3 b1{rng.uniform(), rng.uniform(), rng.uniform()};
        const double exact = segment_segment_distance(a0, a1, b0, b1);
        const double grid = oracle::grid_segment_distance(a0, a1, b0, b1, 1000);
        worst = std::max(worst, std::abs(grid - exact));
    }
    subcheck(worst < 1e-3, "segment distance within 1e-3 of 1000x1000 grid search (1000 pairs)");
}

void property_envelope_oracle() {
    Rng rng(105);
    const SceneConfig scene = SceneConfig::standard(9.0);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<CylinderPose> poses;
        for (int i = 0; i < 6; ++i)
            poses.push_back({{rng.uniform(0, 9), rng.uniform(0, 9), rng.uniform(0, 9)},
                             rng.uniform(0, 180),
                             rng.uniform(0, 360)});
        const double exact = envelope(poses, scene.specs).volume();
        const double sampled = oracle::sampled_envelope_volume(poses, scene.specs, 50000, rng);
        worst = std::max(worst, std::abs(exact - sampled) / exact);
    }
    subcheck(worst < 1e-2, "exact envelope within 1e-2 relative of sampled boxes (200 layouts)");
}

void property_laplace() {
    Rng rng(106);
    const double mu = 0.0, scale = 1.0;
    std::vector<double> xs;
    int within = 0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        const double x = sample_laplace(mu, scale, rng);
        xs.push_back(x);
        if (std::abs(x - mu) <= scale * std::log(2.0)) ++within;
    }
    const double median = oracle::quantile(xs, 0.5);
    subcheck(std::abs(median - mu) < 0.02 * scale, "laplace median within 0.02*l over 1e5 draws");
    subcheck(std::abs(within / static_cast<double>(draws) - 0.5) < 0.01,
             "laplace ln2-quantile mass 0.5 +- 0.01 over 1e5 draws");
}

void property_determinism() {
    RunMeta meta;
    meta.problem = "srn";
    meta.algorithm = "mosar2";
    meta.seed = 42;
    meta.schedule = default_schedule("srn");
    const std::string a = serialize_run(execute_run(meta));
    const std::string b = serialize_run(execute_run(meta));
    auto strip = [](const std::string& payload) {
        std::string out;
        std::size_t start = 0;
        while (start < payload.size()) {
            std::size_t end = payload.find('\n', start);
            if (end == std::string::npos) end = payload.size();
            const std::string line = payload.substr(start, end - start);
            if (line.rfind("wall_seconds ", 0) != 0) out += line + "\n";
            start = end + 1;
        }
        return out;
    };
    bool ok = strip(a) == strip(b);

    RunMeta config_meta;
    config_meta.problem = "config";
    config_meta.algorithm = "mosar2";
    config_meta.seed = 5;
    config_meta.side_length = 9.0;
    config_meta.schedule = {50.0, 1.0, 0.5, 20};
    ok = ok && strip(serialize_run(execute_run(config_meta))) ==
                   strip(serialize_run(execute_run(config_meta)));
    subcheck(ok, "identical seeds give byte-identical payloads (wall clock excluded)");
}

// ---------------------------------------------------------------------------
// Criterion helpers for the experiment-level comparisons.

struct BatchStats {
    std::vector<ParetoSet> sets;
    std::vector<double> cardinalities;
};

BatchStats batch_stats(const std::vector<RunResult>& results, const ProblemDescriptor& d) {
    BatchStats stats;
    for (const RunResult& r : results) {
        stats.sets.push_back(feasible_projection(r.archive, d));
        stats.cardinalities.push_back(static_cast<double>(stats.sets.back().points.size()));
    }
    return stats;
}

}  // namespace

int main() {
    std::filesystem::path cache = metrics_cache_dir();
    int failures = 0;

    // ----- criterion 1 -------------------------------------------------
    {
        const int before = g_checks_failed;
        std::printf("criterion 1: property suite\n");
        property_archive_nondomination();
        property_case_dispatch();
        property_fnds_oracle();
        property_segment_distance();
        property_envelope_oracle();
        property_laplace();
        property_determinism();
        if (!criterion(before, "property suite")) ++failures;
    }

    // ----- criterion 2: SRN --------------------------------------------
    {
        const int before = g_checks_failed;
        std::printf("criterion 2: SRN benchmark\n");
        SrnProblem srn;
        const Schedule schedule = default_schedule("srn");
        const auto mosar2 = batch_stats(run_batch(srn, Algorithm::MosarV2, schedule, kSeeds),
                                        srn.descriptor());
        const auto amosa = batch_stats(run_batch(srn, Algorithm::Amosa, schedule, kSeeds),
                                       srn.descriptor());
        const double mr2_card = mean(mosar2.cardinalities);
        const double am_card = mean(amosa.cardinalities);
        subcheck(mr2_card >= 150.0,
                 "mosar2 mean feasible cardinality >= 150 (got " + std::to_string(mr2_card) +
                     ")");
        subcheck(mr2_card > am_card, "mosar2 mean cardinality > amosa (amosa " +
                                         std::to_string(am_card) + ")");

        const ParetoSet reference = cached_reference_front("srn", 2000, cache);
        std::vector<double> igds;
        for (const ParetoSet& ps : mosar2.sets) igds.push_back(igd(ps, reference));
        const double mean_igd = mean(igds);
        subcheck(mean_igd <= 3.0,
                 "mosar2 mean IGD <= 3.0 (got " + std::to_string(mean_igd) + ")");
        if (!criterion(before, "SRN cardinality and IGD")) ++failures;
    }

    // ----- criterion 3: TNK --------------------------------------------
    {
        const int before = g_checks_failed;
        std::printf("criterion 3: TNK benchmark (enlarged bounds)\n");
        TnkProblem tnk;
        const Schedule schedule = default_schedule("tnk");
        const auto mosar2 = batch_stats(run_batch(tnk, Algorithm::MosarV2, schedule, kSeeds),
                                        tnk.descriptor());
        const auto amosa = batch_stats(run_batch(tnk, Algorithm::Amosa, schedule, kSeeds),
                                       tnk.descriptor());
        const double mr2_card = mean(mosar2.cardinalities);
        subcheck(mr2_card >= 30.0,
                 "mosar2 mean cardinality >= 30 (got " + std::to_string(mr2_card) + ")");

        const ParetoSet reference = cached_reference_front("tnk", 2000, cache);
        std::vector<double> hvs;
        for (const ParetoSet& ps : mosar2.sets) hvs.push_back(hypervolume_2d(ps, reference));
        const double mean_hv = mean(hvs);
        subcheck(mean_hv >= 0.33, "mosar2 mean HV >= 0.33 (got " + std::to_string(mean_hv) + ")");

        int paired_wins = 0;
        for (std::size_t i = 0; i < kSeeds.size(); ++i) {
            if (mosar2.cardinalities[i] >= amosa.cardinalities[i]) ++paired_wins;
        }
        subcheck(paired_wins >= 7, "mosar2 >= amosa cardinality in >= 7/10 paired seeds (got " +
                                       std::to_string(paired_wins) + ")");
        if (!criterion(before, "TNK cardinality, HV and paired wins")) ++failures;
    }

    // ----- criterion 4: configuration problem ---------------------------
    {
        const int before = g_checks_failed;
        std::printf("criterion 4: configuration problem sweep\n");
        const Schedule schedule = default_schedule("config");
        const std::vector<double> sls = {9.4, 9.0, 8.6, 8.2};
        for (double sl : sls) {
            ConfigProblem problem(SceneConfig::standard(sl));
            const auto mosar2 = batch_stats(
                run_batch(problem, Algorithm::MosarV2, schedule, kSeeds), problem.descriptor());
            const auto amosa = batch_stats(
                run_batch(problem, Algorithm::Amosa, schedule, kSeeds), problem.descriptor());
            const std::string tag = "SL=" + std::to_string(sl).substr(0, 3);

            const double mr2_card = mean(mosar2.cardinalities);
            const double am_card = mean(amosa.cardinalities);
            subcheck(mr2_card > am_card,
                     "(a) " + tag + " mosar2 mean N > amosa (" + std::to_string(mr2_card) +
                         " vs " + std::to_string(am_card) + ")");

            if (sl == 8.2) {
                int with_feasible = 0;
                for (double n : mosar2.cardinalities) {
                    if (n >= 1.0) ++with_feasible;
                }
                subcheck(with_feasible >= 8,
                         "(b) SL=8.2 mosar2 finds a feasible point in >= 8/10 runs (got " +
                             std::to_string(with_feasible) + ")");
                subcheck(am_card < mr2_card, "(b) SL=8.2 amosa mean N below mosar2");
            }

            std::vector<double> c_mr_am, c_am_mr, sm_mr, sm_am;
            for (std::size_t i = 0; i < kSeeds.size(); ++i) {
                c_mr_am.push_back(coverage(mosar2.sets[i], amosa.sets[i]));
                c_am_mr.push_back(coverage(amosa.sets[i], mosar2.sets[i]));
                sm_mr.push_back(minimal_spacing(mosar2.sets[i]));
                sm_am.push_back(minimal_spacing(amosa.sets[i]));
            }
            subcheck(mean(c_mr_am) > mean(c_am_mr),
                     "(c) " + tag + " mean C(mosar2, amosa) > mean C(amosa, mosar2) (" +
                         std::to_string(mean(c_mr_am)) + " vs " + std::to_string(mean(c_am_mr)) +
                         ")");
            subcheck(mean(sm_mr) < mean(sm_am),
                     "(d) " + tag + " mosar2 mean S_m < amosa (" + std::to_string(mean(sm_mr)) +
                         " vs " + std::to_string(mean(sm_am)) + ")");
        }
        if (!criterion(before, "configuration problem comparisons (a)-(d)")) ++failures;
    }

    // ----- criterion 5: metric unit values ------------------------------
    {
        const int before = g_checks_failed;
        std::printf("criterion 5: metric unit values\n");
        ParetoSet two;
        two.points = {{1.0, 0.0}, {0.0, 1.0}};
        subcheck(std::abs(hypervolume_2d(two, two) - 0.21 / 1.21) < 1e-12,
                 "HV two-point example = 0.21/1.21");

        ParetoSet pf;
        pf.points = {{0.0, 1.0}};
        subcheck(std::abs(igd(pf, two) - std::sqrt(2.0) / 2.0) < 1e-12,
                 "IGD two-point example = sqrt(2)/2");

        ParetoSet empty;
        subcheck(coverage(two, empty) == 1.0 && coverage(empty, two) == 0.0 &&
                     coverage(empty, empty) == 0.5,
                 "coverage empty-set conventions 1 / 0 / 0.5");
        if (!criterion(before, "metric unit values")) ++failures;
    }

    std::printf("%d of 5 criteria passed\n", 5 - failures);
    return failures == 0 ? 0 : 1;
}
