#ifndef MOSAR_MOO_HPP
#define MOSAR_MOO_HPP

// Pareto-dominance primitives, domination amounts and the non-dominated
// archive shared by the annealers and the quality metrics.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mosar {

// A constraint-violation objective counts as satisfied when it does not
// exceed this tolerance. Violations are exact max(0, .) magnitudes, so the
// tolerance only absorbs floating-point noise.
inline constexpr double kFeasibilityTolerance = 1e-9;

using DecisionVector = std::vector<double>;

// Objective vector in combined form: the true objectives first, followed by
// constraint_count trailing constraint-violation objectives (each >= 0,
// zero when the constraint holds). Everything is minimized.
struct ObjectiveVector {
    std::vector<double> values;
    int constraint_count = 0;

    int dimension() const { return static_cast<int>(values.size()); }
    bool feasible(double tol = kFeasibilityTolerance) const;
};

enum class Dominance { ADominatesB, BDominatesA, NonDominated, Equal };

/// Componentwise Pareto comparison (minimization). Throws
/// std::invalid_argument on dimension mismatch.
Dominance compare(const ObjectiveVector& a, const ObjectiveVector& b);

// Per-objective [min, max] ranges used to normalize domination amounts.
class ObjectiveRanges {
public:
    ObjectiveRanges() = default;
    explicit ObjectiveRanges(int dimension);

    void expand(const ObjectiveVector& v);
    int dimension() const { return static_cast<int>(lo_.size()); }
    double min(int i) const { return lo_[static_cast<std::size_t>(i)]; }
    double max(int i) const { return hi_[static_cast<std::size_t>(i)]; }

    // Range width, falling back to 1 when every tracked point is equal in
    // that objective (the factor is skipped anyway whenever two compared
    // values coincide).
    double width_or_unit(int i) const;

private:
    std::vector<double> lo_, hi_;
};

/// Min/max per objective over a non-empty list. Throws on empty input.
ObjectiveRanges objective_ranges(std::span<const ObjectiveVector> entries);

/// Amount of domination between two objective vectors: the product of
/// |a_i - b_i| / R_i over the objectives where a and b differ. Returns 0
/// when a and b are equal in every component (identical solutions exert no
/// domination pressure).
double delta_dom(const ObjectiveVector& a, const ObjectiveVector& b,
                 const ObjectiveRanges& ranges);

struct ArchiveEntry {
    DecisionVector decision;
    ObjectiveVector objectives;
    std::uint64_t id = 0;  // unique, used for deterministic tie-breaking
};

struct ArchiveClassification {
    enum class Kind {
        DominatesMembers,    // candidate dominates k >= 1 members
        DominatedByMembers,  // candidate is dominated by k >= 1 members
        NonDominated,        // mutually non-dominating with the whole archive
    };
    Kind kind = Kind::NonDominated;
    // Members dominated by (or dominating) the candidate, ascending position.
    std::vector<std::size_t> member_indices;
};

// Set of mutually non-dominating entries; the evolving Pareto-front
// approximation. Exactly-equal objective vectors are deduplicated so the
// archive stays a set.
class Archive {
public:
    const std::vector<ArchiveEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    /// Which case of the annealer step the candidate triggers. Dominating
    /// and dominated members cannot coexist while the archive invariant
    /// holds (dominance is transitive).
    ArchiveClassification classify(const ObjectiveVector& candidate) const;

    /// Removes every member the entry dominates, then adds it unless an
    /// equal-objective member already exists. Returns false on the dedup
    /// path. Throws std::invalid_argument if the entry is dominated by a
    /// member (callers must classify first).
    bool insert(ArchiveEntry entry);

    /// Removes the members at the given ascending positions.
    void remove(std::span<const std::size_t> sorted_indices);

    bool contains_objectives(const ObjectiveVector& v) const;
    int feasible_count(double tol = kFeasibilityTolerance) const;

private:
    std::vector<ArchiveEntry> entries_;
};

/// Fast non-dominated sort on the projection onto objective_subset.
/// Front 1 holds the indices non-dominated within the projection, front k
/// the ones non-dominated once fronts 1..k-1 are removed.
std::vector<std::vector<std::size_t>> fast_nondominated_sort(
    std::span<const ObjectiveVector> entries, std::span<const int> objective_subset);

}  // namespace mosar

#endif
