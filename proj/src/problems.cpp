#include "mosar/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mosar {
namespace {

double violation(double g) { return g > 0.0 ? g : 0.0; }

std::vector<VariableBound> box_bounds(int n, double lo, double hi) {
    return std::vector<VariableBound>(static_cast<std::size_t>(n),
                                      VariableBound{lo, hi, BoundaryPolicy::Clamp});
}

}  // namespace

std::vector<int> ProblemDescriptor::constraint_indices() const {
    std::vector<int> idx(static_cast<std::size_t>(constraint_count));
    std::iota(idx.begin(), idx.end(), objective_count - constraint_count);
    return idx;
}

double apply_boundary(double value, const VariableBound& bound) {
    const double width = bound.hi - bound.lo;
    switch (bound.policy) {
        case BoundaryPolicy::Clamp:
            return std::clamp(value, bound.lo, bound.hi);
        case BoundaryPolicy::Wrap: {
            double t = std::fmod(value - bound.lo, width);
            if (t < 0.0) t += width;
            if (t >= width) t = 0.0;
            return bound.lo + t;
        }
        case BoundaryPolicy::Reflect: {
            double t = std::fmod(value - bound.lo, 2.0 * width);
            if (t < 0.0) t += 2.0 * width;
            return bound.lo + (t <= width ? t : 2.0 * width - t);
        }
    }
    return value;
}

SrnProblem::SrnProblem() {
    descriptor_.name = "srn";
    descriptor_.bounds = box_bounds(2, -20.0, 20.0);
    descriptor_.objective_count = 4;
    descriptor_.constraint_count = 2;
    descriptor_.metric_projection = {0, 1};
}

ObjectiveVector SrnProblem::evaluate(std::span<const double> x) const {
    const double x1 = x[0], x2 = x[1];
    ObjectiveVector out;
    out.values = {
        2.0 + (x1 - 2.0) * (x1 - 2.0) + (x2 - 2.0) * (x2 - 2.0),
        9.0 * x1 - (x2 - 1.0) * (x2 - 1.0),
        violation(x1 * x1 + x2 * x2 - 225.0),
        violation(x1 - 3.0 * x2 + 10.0),
    };
    out.constraint_count = 2;
    return out;
}

TnkProblem::TnkProblem() {
    descriptor_.name = "tnk";
    descriptor_.bounds = box_bounds(2, 1e-9, 100.0 - 1e-9);
    descriptor_.objective_count = 4;
    descriptor_.constraint_count = 2;
    descriptor_.metric_projection = {0, 1};
    // Move scale follows the variable's natural (0, pi) design range, not
    // the enlarged search box; 1/20th of the box would be far too coarse to
    // resolve the feasible region.
    descriptor_.benchmark_move_scale = 3.14159265358979323846 / 20.0;
}

ObjectiveVector TnkProblem::evaluate(std::span<const double> x) const {
    const double x1 = x[0], x2 = x[1];
    ObjectiveVector out;
    out.values = {
        x1,
        x2,
        violation(1.0 + 0.1 * std::cos(16.0 * std::atan2(x2, x1)) - x1 * x1 - x2 * x2),
        violation((x1 - 0.5) * (x1 - 0.5) + (x2 - 0.5) * (x2 - 0.5) - 0.5),
    };
    out.constraint_count = 2;
    return out;
}

ConfigProblem::ConfigProblem(SceneConfig scene, ExtentMode mode)
    : scene_(std::move(scene)), mode_(mode) {
    descriptor_.name = "config";
    descriptor_.objective_count = 5;
    descriptor_.constraint_count = 3;
    descriptor_.metric_projection = {0, 1};

    const double sl = scene_.side_length;
    const VariableBound position{0.0, sl, BoundaryPolicy::Clamp};
    const VariableBound polar{0.0, 180.0, BoundaryPolicy::Reflect};
    const VariableBound azimuth{0.0, 360.0, BoundaryPolicy::Wrap};

    auto& bounds = descriptor_.bounds;
    auto& groups = descriptor_.move_groups;

    // Cylinder 1: free (x, y) only; base stays on the top face.
    bounds.insert(bounds.end(), {position, position});
    groups.push_back({{0, 1}, {}});
    // Cylinders 2-5: (x, y, z, theta, phi).
    for (int c = 0; c < 4; ++c) {
        const int at = static_cast<int>(bounds.size());
        bounds.insert(bounds.end(), {position, position, position, polar, azimuth});
        groups.push_back({{at, at + 1, at + 2}, {at + 3, at + 4}});
    }
    // Cylinder 6: free (y, z) only; base stays on the x = SL face.
    const int at = static_cast<int>(bounds.size());
    bounds.insert(bounds.end(), {position, position});
    groups.push_back({{at, at + 1}, {}});
}

std::array<CylinderPose, 6> ConfigProblem::poses(std::span<const double> x) const {
    const double sl = scene_.side_length;
    std::array<CylinderPose, 6> out;
    out[0] = {{x[0], x[1], sl}, 180.0, 0.0};  // base on top face, pointing down
    for (int c = 0; c < 4; ++c) {
        const std::size_t at = 2 + 5 * static_cast<std::size_t>(c);
        out[static_cast<std::size_t>(c) + 1] = {{x[at], x[at + 1], x[at + 2]}, x[at + 3],
                                                x[at + 4]};
    }
    out[5] = {{sl, x[22], x[23]}, 90.0, 180.0};  // base on x = SL face, axis -X
    return out;
}

ObjectiveVector ConfigProblem::evaluate(std::span<const double> x) const {
    const auto p = poses(x);
    ObjectiveVector out;
    out.values = {
        envelope(p, scene_.specs, mode_).volume(),
        total_connective_length(p, scene_),
        penalty_bounds(p, scene_, mode_),
        penalty_lines(p, scene_),
        penalty_clearance(p, scene_),
    };
    out.constraint_count = 3;
    return out;
}

std::unique_ptr<Problem> make_problem(std::string_view name, double side_length,
                                      ExtentMode mode) {
    if (name == "srn") return std::make_unique<SrnProblem>();
    if (name == "tnk") return std::make_unique<TnkProblem>();
    if (name == "config") {
        if (side_length <= 0.0)
            throw std::invalid_argument("make_problem: side_length must be positive");
        return std::make_unique<ConfigProblem>(SceneConfig::standard(side_length), mode);
    }
    throw std::invalid_argument("make_problem: unknown problem name '" + std::string(name) + "'");
}

DecisionVector random_decision(const ProblemDescriptor& descriptor, Rng& rng) {
    DecisionVector x(static_cast<std::size_t>(descriptor.dimension()));
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = rng.uniform(descriptor.bounds[i].lo, descriptor.bounds[i].hi);
    return x;
}

}  // namespace mosar
