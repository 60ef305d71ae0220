#pragma once

#include <Eigen/Dense>

namespace dsm {

using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;

enum class ShapeKind { cube, ball, ellipsoid };

// Axis-aligned source support. half_extents are the cube half-sides,
// the ball radius replicated, or the ellipsoid semi-axes.
struct SupportShape {
    ShapeKind kind = ShapeKind::cube;
    Vec3 center{0.0, 0.0, 0.0};
    Vec3 half_extents{0.5, 0.5, 0.5};

    static SupportShape make_cube(const Vec3& center, const Vec3& half);
    static SupportShape make_ball(const Vec3& center, double radius);
    static SupportShape make_ellipsoid(const Vec3& center, const Vec3& semi_axes);

    void validate() const; // throws std::invalid_argument
};

// Observation direction with its deterministic orthogonal polarization.
struct ObservationFrame {
    Vec3 x_hat{0.0, 0.0, 1.0};
    Vec3 p_hat{1.0, 0.0, 0.0};
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
};

// Deterministic unit vector orthogonal to x_hat: Gram-Schmidt against the
// coordinate axis of smallest |x_hat| component (ties break to the smallest
// index). Throws std::invalid_argument unless |x_hat| = 1 within 1e-9.
Vec3 perp_vector(const Vec3& x_hat);

// Frame with p_hat = perp_vector(x_hat).
ObservationFrame make_frame(const Vec3& x_hat);

// (inf, sup) of { x_hat . y : y in shape }.
Interval projection_interval(const SupportShape& shape, const Vec3& x_hat);

// Analytic membership, boundary counts as inside.
bool support_contains(const SupportShape& shape, const Vec3& y);

} // namespace dsm
