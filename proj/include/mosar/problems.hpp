#ifndef MOSAR_PROBLEMS_HPP
#define MOSAR_PROBLEMS_HPP

// Uniform problem interface plus the three concrete problems: the SRN and
// TNK constrained benchmarks and the six-cylinder configuration problem.
// Constraints are carried as trailing violation objectives, so constrained
// problems reduce to plain non-domination on the combined vector.

#include <array>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mosar/geometry.hpp"
#include "mosar/moo.hpp"
#include "mosar/rng.hpp"

namespace mosar {

enum class BoundaryPolicy { Clamp, Wrap, Reflect };

struct VariableBound {
    double lo = 0.0, hi = 0.0;
    BoundaryPolicy policy = BoundaryPolicy::Clamp;
};

/// Maps an arbitrary value back into [lo, hi] under the bound's policy
/// (clamp to the ends, wrap modulo the width, or fold at the ends).
double apply_boundary(double value, const VariableBound& bound);

// Variables a single move may touch together: one group per cylinder on the
// configuration problem. An empty group list selects the benchmark move
// style (one variable at a time, range-proportional scale).
struct MoveGroup {
    std::vector<int> translation;
    std::vector<int> rotation;
};

struct ProblemDescriptor {
    std::string name;
    std::vector<VariableBound> bounds;
    int objective_count = 0;   // combined dimension M, violations included
    int constraint_count = 0;  // trailing violation objectives q
    std::array<int, 2> metric_projection{0, 1};  // 2-D front used by metrics
    std::vector<MoveGroup> move_groups;
    // Absolute Laplace scale for single-variable moves; 0 falls back to
    // range * benchmark_scale_fraction.
    double benchmark_move_scale = 0.0;

    int dimension() const { return static_cast<int>(bounds.size()); }
    std::vector<int> constraint_indices() const;
};

class Problem {
public:
    virtual ~Problem() = default;
    const ProblemDescriptor& descriptor() const { return descriptor_; }
    virtual ObjectiveVector evaluate(std::span<const double> x) const = 0;

protected:
    ProblemDescriptor descriptor_;
};

// SRN: f1 = 2 + (x1-2)^2 + (x2-2)^2, f2 = 9 x1 - (x2-1)^2 on [-20, 20]^2,
// subject to x1^2 + x2^2 <= 225 and x1 - 3 x2 + 10 <= 0.
class SrnProblem : public Problem {
public:
    SrnProblem();
    ObjectiveVector evaluate(std::span<const double> x) const override;
};

// TNK with the design space enlarged to (0, 100)^2: f = x, subject to
// x1^2 + x2^2 >= 1 + 0.1 cos(16 atan(x2/x1)) and
// (x1-.5)^2 + (x2-.5)^2 <= 0.5. Open bounds are realized by clamping a hair
// inside the box.
class TnkProblem : public Problem {
public:
    TnkProblem();
    ObjectiveVector evaluate(std::span<const double> x) const override;
};

// Six-cylinder configuration problem with 24 free variables: cylinder 1
// contributes (x, y) with its base pinned to the top face pointing down,
// cylinders 2-5 contribute (x, y, z, theta, phi) each, and cylinder 6
// contributes (y, z) with its base pinned to the x = SL face pointing along
// -X. Objectives: envelope volume, total connective length, and the three
// penalties as violation objectives.
class ConfigProblem : public Problem {
public:
    explicit ConfigProblem(SceneConfig scene, ExtentMode mode = ExtentMode::Exact);

    ObjectiveVector evaluate(std::span<const double> x) const override;

    /// The six cylinder poses a decision vector describes, fixed variables
    /// applied.
    std::array<CylinderPose, 6> poses(std::span<const double> x) const;

    const SceneConfig& scene() const { return scene_; }
    ExtentMode extent_mode() const { return mode_; }

private:
    SceneConfig scene_;
    ExtentMode mode_;
};

/// Problems by name: "srn", "tnk" or "config" (side_length and mode apply
/// to the configuration problem only). Throws std::invalid_argument for
/// unknown names.
std::unique_ptr<Problem> make_problem(std::string_view name, double side_length = 9.0,
                                      ExtentMode mode = ExtentMode::Exact);

/// Decision vector with every variable uniform within its bounds.
DecisionVector random_decision(const ProblemDescriptor& descriptor, Rng& rng);

}  // namespace mosar

#endif
