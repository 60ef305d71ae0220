#include "dsm/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace dsm {

SupportShape SupportShape::make_cube(const Vec3& center, const Vec3& half) {
    SupportShape s{ShapeKind::cube, center, half};
    s.validate();
    return s;
}

SupportShape SupportShape::make_ball(const Vec3& center, double radius) {
    SupportShape s{ShapeKind::ball, center, Vec3(radius, radius, radius)};
    s.validate();
    return s;
}

SupportShape SupportShape::make_ellipsoid(const Vec3& center, const Vec3& semi_axes) {
    SupportShape s{ShapeKind::ellipsoid, center, semi_axes};
    s.validate();
    return s;
}

void SupportShape::validate() const {
    if (!(half_extents.minCoeff() > 0.0))
        throw std::invalid_argument("shape half_extents must be positive");
    if (kind == ShapeKind::ball &&
        (half_extents.x() != half_extents.y() || half_extents.x() != half_extents.z()))
        throw std::invalid_argument("ball requires equal half_extents");
}

Vec3 perp_vector(const Vec3& x_hat) {
    if (std::abs(x_hat.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("perp_vector: direction must be unit length");

    int k = 0;
    double best = std::abs(x_hat[0]);
    for (int i = 1; i < 3; ++i) {
        if (std::abs(x_hat[i]) < best) { // strict: ties keep the smaller index
            best = std::abs(x_hat[i]);
            k = i;
        }
    }
    Vec3 e = Vec3::Zero();
    e[k] = 1.0;
    Vec3 p = e - e.dot(x_hat) * x_hat;
    return p.normalized();
}

ObservationFrame make_frame(const Vec3& x_hat) {
    return ObservationFrame{x_hat, perp_vector(x_hat)};
}

Interval projection_interval(const SupportShape& shape, const Vec3& x_hat) {
    shape.validate();
    double mid = x_hat.dot(shape.center);
    double half = 0.0;
    switch (shape.kind) {
    case ShapeKind::cube:
        half = shape.half_extents.cwiseProduct(x_hat.cwiseAbs()).sum();
        break;
    case ShapeKind::ball:
    case ShapeKind::ellipsoid:
        half = shape.half_extents.cwiseProduct(x_hat).norm();
        break;
    }
    return Interval{mid - half, mid + half};
}

bool support_contains(const SupportShape& shape, const Vec3& y) {
    Vec3 d = y - shape.center;
    if (shape.kind == ShapeKind::cube) {
        return (d.cwiseAbs().array() <= shape.half_extents.array()).all();
    }
    return d.cwiseQuotient(shape.half_extents).squaredNorm() <= 1.0;
}

} // namespace dsm
