#ifndef MOSAR_GEOMETRY_HPP
#define MOSAR_GEOMETRY_HPP

// 3-D cylinder geometry kernel for the configuration problem: axis
// endpoints, bounding envelope, connective-line lengths, segment distances
// and the three penalty functions.

#include <array>
#include <cmath>
#include <span>
#include <vector>

namespace mosar {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double operator[](int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }

    friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double squared_norm(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(squared_norm(v)); }

/// sin/cos of an angle in degrees, exact at multiples of 90 so that
/// axis-aligned cylinder poses produce exactly axis-aligned directions.
void sincos_deg(double deg, double& s, double& c);

struct CylinderSpec {
    double radius = 0.0;  // inches
    double length = 0.0;  // inches
};

// Position of the cylinder base center plus the spherical direction of the
// axis: theta is the polar angle from +Z in [0, 180], phi the azimuth from
// +X in [0, 360), both in degrees.
struct CylinderPose {
    Vec3 base;
    double theta_deg = 0.0;
    double phi_deg = 0.0;
};

// Cap half-extent formula used for the axis-aligned bounding envelope.
// Exact uses the circular-cap half-extent r * sqrt(1 - u_k^2); TrigApprox
// keeps the per-axis trigonometric products (with absolute values), which
// pads each side by at most the radius.
enum class ExtentMode { Exact, TrigApprox };

struct Interval {
    double lo = 0.0, hi = 0.0;
};

struct Envelope {
    double x_extent = 0.0, y_extent = 0.0, z_extent = 0.0;
    double volume() const { return x_extent * y_extent * z_extent; }
};

struct ConnectiveLine {
    int start = 0, end = 0;  // cylinder indices, 0-based
};

struct LineLimit {
    int start = 0, end = 0;
    double max_length = 0.0;  // inches
};

// The cube, the cylinder set and the connectivity relations of the
// configuration problem. The cube is anchored at the origin, so it spans
// [0, side_length] on every axis.
struct SceneConfig {
    double side_length = 0.0;
    std::vector<CylinderSpec> specs;
    std::vector<ConnectiveLine> lines;
    std::vector<LineLimit> line_limits;
    double clearance = 0.5;  // inches of required spacing between cylinders

    /// The standard six-cylinder scene: radii {.625, .625, .5, .5, .5, .375},
    /// lengths {5, 5, 4, 4, 4, 3}, connective lines 1-6, 6-2, 2-4, 4-3, 3-5,
    /// 5-1 and length limits d(2,4) <= 4, d(4,3) <= 2.
    static SceneConfig standard(double side_length);
};

/// Unit axis direction (sin t cos p, sin t sin p, cos t) for angles in degrees.
Vec3 axis_direction(double theta_deg, double phi_deg);

/// Center of the cylinder end cap: base + length * axis direction.
Vec3 cylinder_end(const CylinderPose& pose, const CylinderSpec& spec);

/// [min, max] the cylinder body reaches along the given axis (0=X,1=Y,2=Z).
Interval axis_extent(const CylinderPose& pose, const CylinderSpec& spec, int axis,
                     ExtentMode mode = ExtentMode::Exact);

/// Axis-aligned bounding box of all cylinder bodies.
Envelope envelope(std::span<const CylinderPose> poses, std::span<const CylinderSpec> specs,
                  ExtentMode mode = ExtentMode::Exact);

/// Euclidean distance from the axis midpoint of cylinder i to the base
/// center of cylinder j (the connective-line length surrogate).
double window_distance(int i, int j, std::span<const CylinderPose> poses,
                       std::span<const CylinderSpec> specs);

/// Sum of window distances over the scene's connective lines.
double total_connective_length(std::span<const CylinderPose> poses, const SceneConfig& scene);

/// Minimum distance between closed segments [a0,a1] and [b0,b1]. Segments
/// may degenerate to points; parallel pairs resolve through the clamped
/// closest-point parameterization.
double segment_segment_distance(const Vec3& a0, const Vec3& a1, const Vec3& b0, const Vec3& b1);

/// Out-of-cube penalty: the summed overshoot of the envelope past the six
/// cube faces. Zero exactly when the envelope lies inside the cube.
double penalty_bounds(std::span<const CylinderPose> poses, const SceneConfig& scene,
                      ExtentMode mode = ExtentMode::Exact);

/// Connective-line-limit penalty: summed excess of the limited window
/// distances over their maximum lengths.
double penalty_lines(std::span<const CylinderPose> poses, const SceneConfig& scene);

/// Spacing penalty over ordered cylinder pairs i != j: summed shortfall of
/// the axis-to-axis distance below r_i + r_j + clearance. Ordered pairs, so
/// each violating pair counts twice.
double penalty_clearance(std::span<const CylinderPose> poses, const SceneConfig& scene);

}  // namespace mosar

#endif
