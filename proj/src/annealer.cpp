#include "mosar/annealer.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mosar {
namespace {

double bounded_logistic(double z) {
    // |z| <= 36 keeps 1/(1+exp(z)) strictly inside (0, 1) in double
    // precision; beyond that the probability saturates anyway.
    z = std::clamp(z, -36.0, 36.0);
    const double p = 1.0 / (1.0 + std::exp(z));
    assert(p > 0.0 && p < 1.0);
    return p;
}

ObjectiveRanges step_ranges(const Archive& archive, const ObjectiveVector& current,
                            const ObjectiveVector& candidate) {
    ObjectiveRanges ranges;
    for (const ArchiveEntry& e : archive.entries()) ranges.expand(e.objectives);
    ranges.expand(current);
    ranges.expand(candidate);
    return ranges;
}

double summed_delta_dom(const Archive& archive, std::span<const std::size_t> members,
                        const ObjectiveVector& candidate, const ObjectiveRanges& ranges) {
    double sum = 0.0;
    for (std::size_t idx : members)
        sum += delta_dom(archive.entries()[idx].objectives, candidate, ranges);
    return sum;
}

void audit_current_flag(const AnnealState& state) {
#ifndef NDEBUG
    assert(state.current_in_archive ==
           state.archive.contains_objectives(state.current.objectives));
#else
    (void)state;
#endif
}

}  // namespace

int Schedule::level_count() const {
    int levels = 0;
    for (double t = t_max; t > t_min; t *= alpha) ++levels;
    return levels;
}

void Schedule::validate() const {
    if (!(t_max > t_min) || !(t_min > 0.0))
        throw std::invalid_argument("Schedule: requires t_max > t_min > 0");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("Schedule: requires 0 < alpha < 1");
    if (iters_per_temp < 1)
        throw std::invalid_argument("Schedule: requires iters_per_temp >= 1");
}

double acceptance_probability(double avg_dom, double temperature) {
    return bounded_logistic(avg_dom / temperature);
}

double reseed_probability(double dom) { return bounded_logistic(-dom); }

double sample_laplace(double mu, double scale, Rng& rng) {
    if (!(scale > 0.0)) throw std::invalid_argument("sample_laplace: scale must be positive");
    double u;
    do {
        u = rng.uniform() - 0.5;
    } while (u <= -0.5);  // keep log1p away from the singularity
    const double mag = std::log1p(-2.0 * std::abs(u));  // ln(1 - 2|u|) <= 0
    return u < 0.0 ? mu + scale * mag : mu - scale * mag;
}

DecisionVector perturb(const DecisionVector& decision, const ProblemDescriptor& descriptor,
                       const MoveConfig& move, Rng& rng) {
    DecisionVector out = decision;
    if (descriptor.move_groups.empty()) {
        const std::size_t i = rng.uniform_index(out.size());
        const VariableBound& b = descriptor.bounds[i];
        const double scale = descriptor.benchmark_move_scale > 0.0
                                 ? descriptor.benchmark_move_scale
                                 : (b.hi - b.lo) * move.benchmark_scale_fraction;
        out[i] = apply_boundary(sample_laplace(out[i], scale, rng), b);
        return out;
    }

    const bool translate = rng.uniform() < move.translation_probability;
    const std::vector<int>* vars = nullptr;
    do {
        // Redraw the cylinder while it owns no free variable of this kind.
        const MoveGroup& group =
            descriptor.move_groups[rng.uniform_index(descriptor.move_groups.size())];
        vars = translate ? &group.translation : &group.rotation;
    } while (vars->empty());

    const double scale = translate ? move.translation_scale : move.rotation_scale;
    for (int v : *vars) {
        const auto i = static_cast<std::size_t>(v);
        out[i] = apply_boundary(sample_laplace(out[i], scale, rng), descriptor.bounds[i]);
    }
    return out;
}

std::size_t select_reseed(const Archive& archive, const ObjectiveVector& candidate,
                          ReseedVariant variant, std::span<const int> constraint_indices,
                          const ObjectiveRanges& ranges) {
    if (archive.empty()) throw std::logic_error("select_reseed: empty archive");
    const auto& entries = archive.entries();

    std::vector<std::size_t> pool;
    if (variant == ReseedVariant::ConstraintFrontMinDeltaDom && !constraint_indices.empty()) {
        std::vector<ObjectiveVector> objectives;
        objectives.reserve(entries.size());
        for (const auto& e : entries) objectives.push_back(e.objectives);
        pool = fast_nondominated_sort(objectives, constraint_indices).front();
    } else {
        pool.resize(entries.size());
        for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
    }

    std::size_t best = pool.front();
    double best_dom = std::numeric_limits<double>::infinity();
    for (std::size_t idx : pool) {
        const double dom = delta_dom(entries[idx].objectives, candidate, ranges);
        if (dom < best_dom || (dom == best_dom && entries[idx].id < entries[best].id)) {
            best = idx;
            best_dom = dom;
        }
    }
    return best;
}

StepCase mosar_step(AnnealState& state, ArchiveEntry candidate, ReseedVariant variant,
                    std::span<const int> constraint_indices, const StepOptions& options) {
    const ObjectiveRanges ranges =
        step_ranges(state.archive, state.current.objectives, candidate.objectives);
    const ArchiveClassification cls = state.archive.classify(candidate.objectives);
    StepCase result = StepCase::NonDominatedAdded;

    switch (cls.kind) {
        case ArchiveClassification::Kind::DominatesMembers: {  // case 1
            state.archive.remove(cls.member_indices);
            state.archive.insert(candidate);
            state.current = std::move(candidate);
            state.current_in_archive = true;
            result = StepCase::DominatesArchive;
            break;
        }
        case ArchiveClassification::Kind::DominatedByMembers: {  // case 2
            const double k = static_cast<double>(cls.member_indices.size());
            const double sum_dom =
                summed_delta_dom(state.archive, cls.member_indices, candidate.objectives, ranges);
            switch (compare(state.current.objectives, candidate.objectives)) {
                case Dominance::ADominatesB:  // case 2a
                    if (state.current_in_archive) {  // case 2a-1
                        const double p =
                            acceptance_probability(sum_dom / k, state.temperature);
                        if (state.rng.uniform() < p) {
                            state.current = std::move(candidate);
                            state.current_in_archive = false;
                            result = StepCase::DominatedAccepted;
                        } else {
                            result = StepCase::DominatedRejected;
                        }
                    } else {  // case 2a-2, the re-seed branch
                        const std::size_t selected = select_reseed(
                            state.archive, candidate.objectives, variant, constraint_indices,
                            ranges);
                        const double p_reseed = reseed_probability(delta_dom(
                            state.archive.entries()[selected].objectives, candidate.objectives,
                            ranges));
                        if (state.rng.uniform() < p_reseed) {
                            state.current = state.archive.entries()[selected];
                            state.current_in_archive = true;
                            result = StepCase::Reseeded;
                        } else {
                            const double denom = options.literal_reseed_denominator ? k : k + 1.0;
                            const double avg =
                                (sum_dom + delta_dom(state.current.objectives,
                                                     candidate.objectives, ranges)) /
                                denom;
                            if (state.rng.uniform() <
                                acceptance_probability(avg, state.temperature)) {
                                state.current = std::move(candidate);
                                state.current_in_archive = false;
                                result = StepCase::ReseedSkippedAccepted;
                            } else {
                                result = StepCase::ReseedSkippedRejected;
                            }
                        }
                    }
                    break;
                case Dominance::BDominatesA:  // case 2b
                    state.current = std::move(candidate);
                    state.current_in_archive = false;
                    result = StepCase::DominatesCurrent;
                    break;
                default: {  // case 2c, mutually non-dominating with current
                    const double p = acceptance_probability(sum_dom / k, state.temperature);
                    if (state.rng.uniform() < p) {
                        state.current = std::move(candidate);
                        state.current_in_archive = false;
                        result = StepCase::TradeoffAccepted;
                    } else {
                        result = StepCase::TradeoffRejected;
                    }
                    break;
                }
            }
            break;
        }
        case ArchiveClassification::Kind::NonDominated: {  // case 3
            state.archive.insert(candidate);  // dedups an exactly-equal member
            state.current = std::move(candidate);
            state.current_in_archive = true;
            result = StepCase::NonDominatedAdded;
            break;
        }
    }
    audit_current_flag(state);
    return result;
}

StepCase amosa_step(AnnealState& state, ArchiveEntry candidate) {
    const ObjectiveRanges ranges =
        step_ranges(state.archive, state.current.objectives, candidate.objectives);
    const ArchiveClassification cls = state.archive.classify(candidate.objectives);
    StepCase result = StepCase::NonDominatedAdded;

    switch (cls.kind) {
        case ArchiveClassification::Kind::DominatesMembers: {
            state.archive.remove(cls.member_indices);
            state.archive.insert(candidate);
            state.current = std::move(candidate);
            state.current_in_archive = true;
            result = StepCase::DominatesArchive;
            break;
        }
        case ArchiveClassification::Kind::DominatedByMembers: {
            const double k = static_cast<double>(cls.member_indices.size());
            const double sum_dom =
                summed_delta_dom(state.archive, cls.member_indices, candidate.objectives, ranges);
            switch (compare(state.current.objectives, candidate.objectives)) {
                case Dominance::ADominatesB: {
                    // No membership split here: accept-with-prob regardless of
                    // whether the current solution sits in the archive.
                    const double p = acceptance_probability(sum_dom / k, state.temperature);
                    if (state.rng.uniform() < p) {
                        state.current = std::move(candidate);
                        state.current_in_archive = false;
                        result = StepCase::DominatedAccepted;
                    } else {
                        result = StepCase::DominatedRejected;
                    }
                    break;
                }
                case Dominance::BDominatesA: {
                    // Re-seed to the dominating member with the minimum
                    // domination amount, else accept the new solution.
                    std::size_t best = cls.member_indices.front();
                    double best_dom = std::numeric_limits<double>::infinity();
                    for (std::size_t idx : cls.member_indices) {
                        const double dom = delta_dom(state.archive.entries()[idx].objectives,
                                                     candidate.objectives, ranges);
                        if (dom < best_dom ||
                            (dom == best_dom && state.archive.entries()[idx].id <
                                                    state.archive.entries()[best].id)) {
                            best = idx;
                            best_dom = dom;
                        }
                    }
                    if (state.rng.uniform() < reseed_probability(best_dom)) {
                        state.current = state.archive.entries()[best];
                        state.current_in_archive = true;
                        result = StepCase::AmosaReseeded;
                    } else {
                        state.current = std::move(candidate);
                        state.current_in_archive = false;
                        result = StepCase::DominatesCurrent;
                    }
                    break;
                }
                default: {
                    const double p = acceptance_probability(sum_dom / k, state.temperature);
                    if (state.rng.uniform() < p) {
                        state.current = std::move(candidate);
                        state.current_in_archive = false;
                        result = StepCase::TradeoffAccepted;
                    } else {
                        result = StepCase::TradeoffRejected;
                    }
                    break;
                }
            }
            break;
        }
        case ArchiveClassification::Kind::NonDominated: {
            state.archive.insert(candidate);
            state.current = std::move(candidate);
            state.current_in_archive = true;
            result = StepCase::NonDominatedAdded;
            break;
        }
    }
    audit_current_flag(state);
    return result;
}

int RunResult::feasible_count(double tol) const {
    int n = 0;
    for (const ArchiveEntry& e : archive) {
        if (e.objectives.feasible(tol)) ++n;
    }
    return n;
}

RunResult run(const Problem& problem, Algorithm algorithm, const Schedule& schedule,
              const MoveConfig& move, std::uint64_t seed, const StepOptions& options) {
    schedule.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const ProblemDescriptor& descriptor = problem.descriptor();
    const std::vector<int> constraint_idx = descriptor.constraint_indices();

    AnnealState state{{}, false, {}, schedule.t_max, Rng(seed), 0};
    RunResult result;
    result.seed = seed;

    // 100 random decisions, kept only while mutually non-dominating.
    constexpr int kInitialSamples = 100;
    for (int i = 0; i < kInitialSamples; ++i) {
        ArchiveEntry entry;
        entry.decision = random_decision(descriptor, state.rng);
        entry.objectives = problem.evaluate(entry.decision);
        entry.id = state.next_id++;
        ++result.init_evaluations;
        if (state.archive.classify(entry.objectives).kind !=
            ArchiveClassification::Kind::DominatedByMembers) {
            state.archive.insert(std::move(entry));
        }
    }
    state.current = state.archive.entries()[state.rng.uniform_index(state.archive.size())];
    state.current_in_archive = true;

    for (double t = schedule.t_max; t > schedule.t_min; t *= schedule.alpha) {
        state.temperature = t;
        for (int i = 0; i < schedule.iters_per_temp; ++i) {
            ArchiveEntry candidate;
            candidate.decision = perturb(state.current.decision, descriptor, move, state.rng);
            candidate.objectives = problem.evaluate(candidate.decision);
            candidate.id = state.next_id++;
            ++result.main_evaluations;
            switch (algorithm) {
                case Algorithm::Amosa:
                    amosa_step(state, std::move(candidate));
                    break;
                case Algorithm::MosarV1:
                    mosar_step(state, std::move(candidate), ReseedVariant::MinDeltaDom,
                               constraint_idx, options);
                    break;
                case Algorithm::MosarV2:
                    mosar_step(state, std::move(candidate),
                               ReseedVariant::ConstraintFrontMinDeltaDom, constraint_idx,
                               options);
                    break;
            }
        }
        result.feasible_trace.push_back(state.archive.feasible_count());
    }

    result.archive = state.archive.entries();
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace mosar
