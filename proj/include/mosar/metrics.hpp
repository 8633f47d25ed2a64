#ifndef MOSAR_METRICS_HPP
#define MOSAR_METRICS_HPP

// Quality indicators over 2-D Pareto sets: cardinality, inverted
// generational distance, normalized 2-D hypervolume, two-set coverage,
// minimal spacing and accounted proportion, plus the brute-force reference
// fronts for the benchmark problems.

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mosar/moo.hpp"
#include "mosar/problems.hpp"

namespace mosar {

using Point2 = std::array<double, 2>;

// The feasible 2-D projection of one run's archive, with provenance labels.
struct ParetoSet {
    std::vector<Point2> points;
    std::string algorithm;
    std::uint64_t seed = 0;
};

/// Number of points in the set.
std::size_t cardinality(const ParetoSet& ps);

/// Exact-duplicate removal followed by the non-dominated filter
/// (minimization); result sorted ascending on the first objective.
std::vector<Point2> pareto_filter_2d(std::vector<Point2> points);

/// Projection of the feasible archive entries onto the descriptor's metric
/// objectives.
ParetoSet feasible_projection(std::span<const ArchiveEntry> archive,
                              const ProblemDescriptor& descriptor,
                              double tol = kFeasibilityTolerance);

/// Mean distance from reference-front points to their nearest obtained
/// point. Returns +inf for an empty obtained front; throws on an empty
/// reference front.
double igd(const ParetoSet& pf, const ParetoSet& pf_star);

/// Fraction of the box [origin, r*] dominated by the front, where r* is
/// 1.1 times the componentwise maximum of reference_source. Empty front
/// covers nothing.
double hypervolume_2d(const ParetoSet& pf, const ParetoSet& reference_source);

/// Fraction of b's points strictly dominated by at least one point of a.
/// Conventions: C(A, empty) = 1 and C(empty, A) = 0 when exactly one side
/// is empty, 0.5 when both are.
double coverage(const ParetoSet& a, const ParetoSet& b);

struct ObjectiveExtents {
    Point2 min{0.0, 0.0};
    Point2 max{0.0, 0.0};
};

/// Min/max per projected objective over a set; used to standardize spacing
/// distances.
ObjectiveExtents spacing_standardization(const ParetoSet& ps);

/// Chain-based spacing variance. Distances use the Manhattan form with each
/// objective difference divided by its standardization range; every point
/// is tried as the chain seed and the minimum-total chain is kept. Returns
/// 1 for sets of one point or fewer.
double minimal_spacing(const ParetoSet& ps, const ObjectiveExtents& standardization);
double minimal_spacing(const ParetoSet& ps);  // standardized by the set's own ranges

/// Share each algorithm holds of the combined non-dominated set across all
/// runs of all algorithms. Per-algorithm fronts are built from the union of
/// that algorithm's runs; membership uses exact objective equality. The
/// literal flag counts |PS_i*| instead of the intersection with the
/// combined front (rows may then sum above 1).
std::vector<double> accounted_proportion(std::span<const std::vector<ParetoSet>> algorithm_runs,
                                         bool literal_numerator = false);

/// Dense-grid reference front for "srn" or "tnk": evaluate a resolution^2
/// grid over the relevant decision box, keep the feasible points, and
/// non-dominated-filter their objective projections. resolution >= 1000.
ParetoSet reference_front(std::string_view problem_name, int resolution);

/// Disk-cached reference front: one point per line, two space-separated
/// floats; the file name encodes problem and resolution.
ParetoSet cached_reference_front(std::string_view problem_name, int resolution,
                                 const std::filesystem::path& cache_dir);

}  // namespace mosar

#endif
