#include "mosar/geometry.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace mosar {
namespace {

constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

double positive_part(double v) { return v > 0.0 ? v : 0.0; }

}  // namespace

void sincos_deg(double deg, double& s, double& c) {
    const double r = std::remainder(deg, 360.0);  // (-180, 180]
    const double a = std::abs(r);
    if (a <= 45.0) {
        s = std::sin(a * kDegToRad);
        c = std::cos(a * kDegToRad);
    } else if (a <= 135.0) {
        s = std::cos((a - 90.0) * kDegToRad);
        c = -std::sin((a - 90.0) * kDegToRad);
    } else {
        s = std::sin((180.0 - a) * kDegToRad);
        c = -std::cos((180.0 - a) * kDegToRad);
    }
    if (r < 0.0) s = -s;
}

Vec3 axis_direction(double theta_deg, double phi_deg) {
    double st, ct, sp, cp;
    sincos_deg(theta_deg, st, ct);
    sincos_deg(phi_deg, sp, cp);
    return {st * cp, st * sp, ct};
}

Vec3 cylinder_end(const CylinderPose& pose, const CylinderSpec& spec) {
    return pose.base + spec.length * axis_direction(pose.theta_deg, pose.phi_deg);
}

Interval axis_extent(const CylinderPose& pose, const CylinderSpec& spec, int axis,
                     ExtentMode mode) {
    const Vec3 u = axis_direction(pose.theta_deg, pose.phi_deg);
    const Vec3 end = pose.base + spec.length * u;
    const double lo = std::min(pose.base[axis], end[axis]);
    const double hi = std::max(pose.base[axis], end[axis]);

    double pad_lo, pad_hi;
    if (mode == ExtentMode::Exact) {
        // Extremes lie on a cap rim; the rim's reach along the axis is
        // r * max{v_k : v unit, v ^ u} = r * sqrt(1 - u_k^2).
        const double uk = u[axis];
        pad_lo = pad_hi = spec.radius * std::sqrt(positive_part(1.0 - uk * uk));
    } else {
        double st, ct, sp, cp;
        sincos_deg(pose.theta_deg, st, ct);
        sincos_deg(pose.phi_deg, sp, cp);
        switch (axis) {
            case 0: pad_lo = pad_hi = std::abs(spec.radius * st * cp); break;
            case 1: pad_lo = pad_hi = std::abs(spec.radius * st * sp); break;
            default:
                pad_hi = std::abs(spec.radius * ct);
                pad_lo = std::abs(spec.radius * st);
                break;
        }
    }
    return {lo - pad_lo, hi + pad_hi};
}

Envelope envelope(std::span<const CylinderPose> poses, std::span<const CylinderSpec> specs,
                  ExtentMode mode) {
    if (poses.empty() || poses.size() != specs.size())
        throw std::invalid_argument("envelope: poses and specs must be non-empty and matched");
    Envelope e;
    double* extents[3] = {&e.x_extent, &e.y_extent, &e.z_extent};
    for (int axis = 0; axis < 3; ++axis) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (std::size_t i = 0; i < poses.size(); ++i) {
            const Interval iv = axis_extent(poses[i], specs[i], axis, mode);
            lo = std::min(lo, iv.lo);
            hi = std::max(hi, iv.hi);
        }
        *extents[axis] = hi - lo;
    }
    return e;
}

double window_distance(int i, int j, std::span<const CylinderPose> poses,
                       std::span<const CylinderSpec> specs) {
    if (i == j) throw std::invalid_argument("window_distance: i == j");
    const auto si = static_cast<std::size_t>(i);
    const auto sj = static_cast<std::size_t>(j);
    const Vec3 mid = poses[si].base + (specs[si].length / 2.0) *
                                          axis_direction(poses[si].theta_deg, poses[si].phi_deg);
    return norm(mid - poses[sj].base);
}

double total_connective_length(std::span<const CylinderPose> poses, const SceneConfig& scene) {
    double total = 0.0;
    for (const ConnectiveLine& line : scene.lines)
        total += window_distance(line.start, line.end, poses, scene.specs);
    return total;
}

double segment_segment_distance(const Vec3& a0, const Vec3& a1, const Vec3& b0, const Vec3& b1) {
    const Vec3 d1 = a1 - a0;
    const Vec3 d2 = b1 - b0;
    const Vec3 r = a0 - b0;
    const double a = dot(d1, d1);
    const double e = dot(d2, d2);
    const double f = dot(d2, r);

    double s = 0.0, t = 0.0;
    if (a == 0.0 && e == 0.0) {
        return norm(r);
    } else if (a == 0.0) {
        t = std::clamp(f / e, 0.0, 1.0);
    } else {
        const double c = dot(d1, r);
        if (e == 0.0) {
            s = std::clamp(-c / a, 0.0, 1.0);
        } else {
            const double b = dot(d1, d2);
            const double denom = a * e - b * b;
            // denom ~ 0 means (near-)parallel axes; any s works, take 0.
            if (denom > 1e-12 * a * e)
                s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
            t = (b * s + f) / e;
            if (t < 0.0) {
                t = 0.0;
                s = std::clamp(-c / a, 0.0, 1.0);
            } else if (t > 1.0) {
                t = 1.0;
                s = std::clamp((b - c) / a, 0.0, 1.0);
            }
        }
    }
    return norm((a0 + s * d1) - (b0 + t * d2));
}

double penalty_bounds(std::span<const CylinderPose> poses, const SceneConfig& scene,
                      ExtentMode mode) {
    double p = 0.0;
    for (int axis = 0; axis < 3; ++axis) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (std::size_t i = 0; i < poses.size(); ++i) {
            const Interval iv = axis_extent(poses[i], scene.specs[i], axis, mode);
            lo = std::min(lo, iv.lo);
            hi = std::max(hi, iv.hi);
        }
        p += positive_part(hi - scene.side_length) + positive_part(-lo);
    }
    return p;
}

double penalty_lines(std::span<const CylinderPose> poses, const SceneConfig& scene) {
    double p = 0.0;
    for (const LineLimit& limit : scene.line_limits)
        p += positive_part(window_distance(limit.start, limit.end, poses, scene.specs) -
                           limit.max_length);
    return p;
}

double penalty_clearance(std::span<const CylinderPose> poses, const SceneConfig& scene) {
    const std::size_t n = poses.size();
    std::vector<Vec3> ends(n);
    for (std::size_t i = 0; i < n; ++i) ends[i] = cylinder_end(poses[i], scene.specs[i]);

    double p = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double required =
                scene.specs[i].radius + scene.specs[j].radius + scene.clearance;
            const double d =
                segment_segment_distance(poses[i].base, ends[i], poses[j].base, ends[j]);
            p += positive_part(required - d);
        }
    }
    return p;
}

SceneConfig SceneConfig::standard(double side_length) {
    SceneConfig scene;
    scene.side_length = side_length;
    scene.specs = {
        {0.625, 5.0}, {0.625, 5.0}, {0.5, 4.0}, {0.5, 4.0}, {0.5, 4.0}, {0.375, 3.0},
    };
    scene.lines = {{0, 5}, {5, 1}, {1, 3}, {3, 2}, {2, 4}, {4, 0}};
    scene.line_limits = {{1, 3, 4.0}, {3, 2, 2.0}};
    scene.clearance = 0.5;
    return scene;
}

}  // namespace mosar
