#ifndef MOSAR_ANNEALER_HPP
#define MOSAR_ANNEALER_HPP

// Multi-objective simulated annealing on a non-dominated archive: the
// MOSA/R algorithm with its two re-seed selection variants, the AMOSA
// baseline, the Laplace move routine and the geometric annealing schedule.

#include <cstdint>
#include <span>
#include <vector>

#include "mosar/moo.hpp"
#include "mosar/problems.hpp"
#include "mosar/rng.hpp"

namespace mosar {

enum class Algorithm { Amosa, MosarV1, MosarV2 };

// Re-seed candidate selection once a re-seed is triggered: V1 takes the
// archive member with the minimum domination amount towards the new
// solution; V2 first non-dominated-sorts the archive on the violation
// objectives and restricts the choice to the first front.
enum class ReseedVariant { MinDeltaDom, ConstraintFrontMinDeltaDom };

struct Schedule {
    double t_max = 0.0;
    double t_min = 0.0;
    double alpha = 0.0;       // geometric cooling rate in (0, 1)
    int iters_per_temp = 0;

    /// Temperature levels visited: t_max, alpha*t_max, ... while > t_min.
    int level_count() const;
    void validate() const;  // throws std::invalid_argument on bad values
};

struct MoveConfig {
    double translation_scale = 0.5;        // inches, configuration problem
    double rotation_scale = 30.0;          // degrees
    double translation_probability = 0.5;
    double benchmark_scale_fraction = 1.0 / 20.0;  // of each variable's range
};

struct StepOptions {
    // Keep the printed k denominator in the re-seed branch's averaged
    // domination amount instead of k+1 (the average then runs over k+1
    // terms but divides by k).
    bool literal_reseed_denominator = false;
};

// Which branch of the acceptance case analysis a step took.
enum class StepCase {
    DominatesArchive,       // case 1: archive pruned, new becomes current
    DominatedAccepted,      // case 2a-1, accepted as current
    DominatedRejected,      // case 2a-1, rejected
    Reseeded,               // case 2a-2, current jumped to an archive member
    ReseedSkippedAccepted,  // case 2a-2, re-seed failed, new accepted
    ReseedSkippedRejected,  // case 2a-2, re-seed failed, new rejected
    DominatesCurrent,       // case 2b (MOSA/R unconditional accept; AMOSA accept branch)
    AmosaReseeded,          // case 2b, AMOSA re-seed branch
    TradeoffAccepted,       // case 2c
    TradeoffRejected,       // case 2c
    NonDominatedAdded,      // case 3
};

struct AnnealState {
    ArchiveEntry current;
    bool current_in_archive = false;
    Archive archive;
    double temperature = 0.0;
    Rng rng;
    std::uint64_t next_id = 0;
};

/// 1 / (1 + exp(avg_dom / temperature)); strictly inside (0, 1).
double acceptance_probability(double avg_dom, double temperature);

/// 1 / (1 + exp(-dom)); strictly inside (0, 1).
double reseed_probability(double dom);

/// Laplace(mu, scale) draw via the inverse CDF.
double sample_laplace(double mu, double scale, Rng& rng);

/// One neighborhood move. With move groups: pick translation or rotation,
/// pick a cylinder owning free variables of that kind, and resample all its
/// variables of that kind from Laplace around the current values. Without
/// groups: resample one uniformly chosen variable at 1/20th-range scale.
/// Boundary policies apply after sampling.
DecisionVector perturb(const DecisionVector& decision, const ProblemDescriptor& descriptor,
                       const MoveConfig& move, Rng& rng);

/// Index of the re-seed candidate in archive.entries(). Ties break on the
/// lowest entry id. Throws std::logic_error on an empty archive.
std::size_t select_reseed(const Archive& archive, const ObjectiveVector& candidate,
                          ReseedVariant variant, std::span<const int> constraint_indices,
                          const ObjectiveRanges& ranges);

/// One MOSA/R acceptance step for an evaluated candidate.
StepCase mosar_step(AnnealState& state, ArchiveEntry candidate, ReseedVariant variant,
                    std::span<const int> constraint_indices, const StepOptions& options = {});

/// One AMOSA acceptance step for an evaluated candidate.
StepCase amosa_step(AnnealState& state, ArchiveEntry candidate);

struct RunResult {
    std::vector<ArchiveEntry> archive;
    long long init_evaluations = 0;
    long long main_evaluations = 0;
    std::vector<int> feasible_trace;  // archive feasible count per level
    std::uint64_t seed = 0;
    double wall_seconds = 0.0;

    int feasible_count(double tol = kFeasibilityTolerance) const;
};

/// A full annealing run: archive seeded from 100 random decisions filtered
/// to mutual non-domination, then level_count() temperature levels of
/// iters_per_temp perturb-evaluate-step iterations each. Deterministic
/// given the seed.
RunResult run(const Problem& problem, Algorithm algorithm, const Schedule& schedule,
              const MoveConfig& move, std::uint64_t seed, const StepOptions& options = {});

}  // namespace mosar

#endif
