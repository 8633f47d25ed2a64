#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <vector>

#include "mosar/problems.hpp"
#include "mosar/rng.hpp"

using namespace mosar;

namespace {

// A hand-built feasible layout for SL = 9.4: vertical cylinders spread on
// the floor, cylinder 1 hanging from the top face, cylinder 6 on the
// x = SL face, with d(2,4) = 3.54 and d(4,3) = 1.6.
DecisionVector feasible_decision_94() {
    return {2.0, 7.5,                     // c1 (x, y)
            5.0, 2.5, 0.0, 0.0, 0.0,      // c2
            6.6, 5.0, 2.0, 0.0, 0.0,      // c3
            5.0, 5.0, 0.0, 0.0, 0.0,      // c4
            8.0, 2.0, 0.0, 0.0, 0.0,      // c5
            3.0, 7.5};                    // c6 (y, z)
}

}  // namespace

TEST_CASE("srn evaluation") {
    SrnProblem srn;
    const std::array<double, 2> a{-2.5, 2.5};
    ObjectiveVector f = srn.evaluate(a);
    CHECK(f.values[0] == doctest::Approx(22.5).epsilon(1e-12));
    CHECK(f.values[1] == doctest::Approx(-24.75).epsilon(1e-12));
    CHECK(f.values[2] == 0.0);
    CHECK(f.values[3] == 0.0);
    CHECK(f.feasible());

    const std::array<double, 2> b{0.0, 0.0};
    f = srn.evaluate(b);
    CHECK(f.values[0] == doctest::Approx(10.0));
    CHECK(f.values[1] == doctest::Approx(-1.0));
    CHECK(f.values[2] == 0.0);
    CHECK(f.values[3] == doctest::Approx(10.0));
    CHECK_FALSE(f.feasible());

    const std::array<double, 2> c{15.1, 0.0};
    f = srn.evaluate(c);
    CHECK(f.values[2] == doctest::Approx(3.01).epsilon(1e-9));
}

TEST_CASE("tnk evaluation") {
    TnkProblem tnk;
    const std::array<double, 2> a{1.0, 1.0};
    ObjectiveVector f = tnk.evaluate(a);
    CHECK(f.values[0] == 1.0);
    CHECK(f.values[1] == 1.0);
    CHECK(f.values[2] == 0.0);
    CHECK(f.values[3] == 0.0);
    CHECK(f.feasible());

    const std::array<double, 2> b{0.1, 0.1};
    f = tnk.evaluate(b);
    CHECK(f.values[2] == doctest::Approx(1.08).epsilon(1e-12));
    CHECK(f.values[3] == 0.0);

    const std::array<double, 2> c{50.0, 50.0};
    f = tnk.evaluate(c);
    CHECK(f.values[3] == doctest::Approx(4900.0).epsilon(1e-12));
    CHECK_FALSE(f.feasible());
}

TEST_CASE("benchmark feasibility agrees with direct inequality checks") {
    SrnProblem srn;
    TnkProblem tnk;
    Rng rng(31);
    for (int i = 0; i < 100000; ++i) {
        const std::array<double, 2> xs{rng.uniform(-20, 20), rng.uniform(-20, 20)};
        const bool direct_srn = xs[0] * xs[0] + xs[1] * xs[1] - 225.0 <= kFeasibilityTolerance &&
                                xs[0] - 3.0 * xs[1] + 10.0 <= kFeasibilityTolerance;
        CHECK(srn.evaluate(xs).feasible() == direct_srn);

        const std::array<double, 2> xt{rng.uniform(1e-9, 3.0), rng.uniform(1e-9, 3.0)};
        const bool direct_tnk =
            1.0 + 0.1 * std::cos(16.0 * std::atan2(xt[1], xt[0])) - xt[0] * xt[0] -
                    xt[1] * xt[1] <=
                kFeasibilityTolerance &&
            (xt[0] - 0.5) * (xt[0] - 0.5) + (xt[1] - 0.5) * (xt[1] - 0.5) - 0.5 <=
                kFeasibilityTolerance;
        CHECK(tnk.evaluate(xt).feasible() == direct_tnk);
    }
}

TEST_CASE("config decision maps onto poses with the fixed variables applied") {
    ConfigProblem problem(SceneConfig::standard(9.4));
    const DecisionVector x = feasible_decision_94();
    const auto poses = problem.poses(x);

    CHECK(poses[0].base.x == 2.0);
    CHECK(poses[0].base.y == 7.5);
    CHECK(poses[0].base.z == 9.4);  // pinned to the top face
    CHECK(poses[0].theta_deg == 180.0);
    CHECK(poses[0].phi_deg == 0.0);
    const Vec3 axis1 = axis_direction(poses[0].theta_deg, poses[0].phi_deg);
    CHECK(axis1.z == -1.0);

    CHECK(poses[1].base.x == 5.0);
    CHECK(poses[2].theta_deg == 0.0);
    CHECK(poses[4].base.x == 8.0);

    CHECK(poses[5].base.x == 9.4);  // pinned to the x = SL face
    CHECK(poses[5].base.y == 3.0);
    CHECK(poses[5].base.z == 7.5);
    const Vec3 axis6 = axis_direction(poses[5].theta_deg, poses[5].phi_deg);
    CHECK(axis6.x == -1.0);
    CHECK(axis6.y == 0.0);
    CHECK(axis6.z == 0.0);
}

TEST_CASE("config evaluation of a feasible layout has zero penalties") {
    ConfigProblem problem(SceneConfig::standard(9.4));
    const DecisionVector x = feasible_decision_94();
    const ObjectiveVector f = problem.evaluate(x);
    REQUIRE(f.dimension() == 5);
    CHECK(f.constraint_count == 3);
    CHECK(f.values[2] == 0.0);
    CHECK(f.values[3] == 0.0);
    CHECK(f.values[4] == 0.0);
    CHECK(f.feasible());
    CHECK(f.values[0] > 0.0);
    CHECK(f.values[1] > 0.0);

    // Zero penalties imply the direct constraint statements.
    const auto poses = problem.poses(x);
    const SceneConfig& scene = problem.scene();
    for (int i = 0; i < 6; ++i) {
        for (int axis = 0; axis < 3; ++axis) {
            const Interval iv = axis_extent(poses[static_cast<std::size_t>(i)],
                                            scene.specs[static_cast<std::size_t>(i)], axis);
            CHECK(iv.lo >= -1e-9);
            CHECK(iv.hi <= scene.side_length + 1e-9);
        }
    }
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            if (i == j) continue;
            const auto si = static_cast<std::size_t>(i);
            const auto sj = static_cast<std::size_t>(j);
            const double d = segment_segment_distance(
                poses[si].base, cylinder_end(poses[si], scene.specs[si]), poses[sj].base,
                cylinder_end(poses[sj], scene.specs[sj]));
            CHECK(d >= scene.specs[si].radius + scene.specs[sj].radius + 0.5 - 1e-9);
        }
    }
    CHECK(window_distance(1, 3, poses, scene.specs) <= 4.0 + 1e-9);
    CHECK(window_distance(3, 2, poses, scene.specs) <= 2.0 + 1e-9);
}

TEST_CASE("config evaluation picks up a single protruding cylinder") {
    ConfigProblem problem(SceneConfig::standard(9.4));
    DecisionVector x = feasible_decision_94();
    x[17] = 9.4 - 0.5 + 0.3;  // cylinder 5 x: its radius then pokes 0.3 past x = SL
    const ObjectiveVector f = problem.evaluate(x);
    CHECK(f.values[2] == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(f.values[3] == 0.0);
    CHECK(f.values[4] == 0.0);
    CHECK_FALSE(f.feasible());
}

TEST_CASE("swapping identical-spec cylinders preserves volume and penalties") {
    ConfigProblem problem(SceneConfig::standard(9.0));
    Rng rng(33);
    for (int trial = 0; trial < 50; ++trial) {
        const DecisionVector x = random_decision(problem.descriptor(), rng);
        DecisionVector swapped = x;
        // Cylinders 3 and 5 share radius and length; swap their five slots.
        for (int k = 0; k < 5; ++k)
            std::swap(swapped[static_cast<std::size_t>(7 + k)],
                      swapped[static_cast<std::size_t>(17 + k)]);
        const ObjectiveVector a = problem.evaluate(x);
        const ObjectiveVector b = problem.evaluate(swapped);
        CHECK(a.values[0] == doctest::Approx(b.values[0]).epsilon(1e-12));  // volume
        CHECK(a.values[2] == doctest::Approx(b.values[2]).epsilon(1e-12));  // bounds
        CHECK(a.values[4] == doctest::Approx(b.values[4]).epsilon(1e-12));  // clearance
    }
}

TEST_CASE("random_decision is deterministic and respects bounds") {
    ConfigProblem problem(SceneConfig::standard(9.0));
    const ProblemDescriptor& d = problem.descriptor();
    Rng a(42), b(42);
    CHECK(random_decision(d, a) == random_decision(d, b));

    Rng rng(43);
    std::vector<double> sums(static_cast<std::size_t>(d.dimension()), 0.0);
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        const DecisionVector x = random_decision(d, rng);
        for (std::size_t v = 0; v < x.size(); ++v) {
            CHECK(x[v] >= d.bounds[v].lo);
            CHECK(x[v] <= d.bounds[v].hi);
            sums[v] += x[v];
        }
    }
    for (std::size_t v = 0; v < sums.size(); ++v) {
        const double width = d.bounds[v].hi - d.bounds[v].lo;
        const double mid = 0.5 * (d.bounds[v].lo + d.bounds[v].hi);
        const double sigma = width / std::sqrt(12.0) / std::sqrt(static_cast<double>(draws));
        CHECK(std::abs(sums[v] / draws - mid) < 3.0 * sigma + 1e-12);
    }
}

TEST_CASE("apply_boundary policies") {
    const VariableBound clamp{0.0, 9.0, BoundaryPolicy::Clamp};
    CHECK(apply_boundary(-1.5, clamp) == 0.0);
    CHECK(apply_boundary(9.5, clamp) == 9.0);
    CHECK(apply_boundary(4.0, clamp) == 4.0);

    const VariableBound wrap{0.0, 360.0, BoundaryPolicy::Wrap};
    CHECK(apply_boundary(370.0, wrap) == doctest::Approx(10.0));
    CHECK(apply_boundary(-10.0, wrap) == doctest::Approx(350.0));
    CHECK(apply_boundary(720.0, wrap) == doctest::Approx(0.0));
    CHECK(apply_boundary(359.0, wrap) == doctest::Approx(359.0));

    const VariableBound reflect{0.0, 180.0, BoundaryPolicy::Reflect};
    CHECK(apply_boundary(-30.0, reflect) == doctest::Approx(30.0));
    CHECK(apply_boundary(190.0, reflect) == doctest::Approx(170.0));
    CHECK(apply_boundary(365.0, reflect) == doctest::Approx(5.0));
    CHECK(apply_boundary(90.0, reflect) == doctest::Approx(90.0));

    Rng rng(44);
    for (int i = 0; i < 10000; ++i) {
        const double v = rng.uniform(-2000, 2000);
        const double w = apply_boundary(v, wrap);
        CHECK(w >= 0.0);
        CHECK(w < 360.0);
        const double r = apply_boundary(v, reflect);
        CHECK(r >= 0.0);
        CHECK(r <= 180.0);
    }
}

TEST_CASE("extent mode is plumbed through config evaluation") {
    ConfigProblem exact(SceneConfig::standard(9.4), ExtentMode::Exact);
    ConfigProblem approx(SceneConfig::standard(9.4), ExtentMode::TrigApprox);
    DecisionVector x = feasible_decision_94();
    x[5] = 60.0;  // tilt cylinder 2 so the cap formulas diverge
    x[6] = 30.0;
    const double exact_volume = exact.evaluate(x).values[0];
    const double approx_volume = approx.evaluate(x).values[0];
    CHECK(exact_volume != approx_volume);
    // Line length ignores the mode.
    CHECK(exact.evaluate(x).values[1] == approx.evaluate(x).values[1]);
}

TEST_CASE("make_problem resolves names") {
    CHECK(make_problem("srn")->descriptor().name == "srn");
    CHECK(make_problem("tnk")->descriptor().name == "tnk");
    const auto config = make_problem("config", 8.6);
    CHECK(config->descriptor().name == "config");
    CHECK(config->descriptor().dimension() == 24);
    CHECK(config->descriptor().constraint_indices() == std::vector<int>{2, 3, 4});
    CHECK_THROWS_AS(make_problem("nope"), std::invalid_argument);
    CHECK_THROWS_AS(make_problem("config", -1.0), std::invalid_argument);
}
