#pragma once

#include <random>

#include "dsm/forward.hpp"

// Shared test fixtures: the centered unit cube / ball / ellipsoid sources
// used throughout, synthesized against an opposite pair of +-e3 frames.

namespace fixtures {

inline dsm::SourceSpec cube_source(double t0, double eps = 1.0, double mu = 1.0,
                                   dsm::Vec3 j0 = dsm::Vec3(1, 0, 0)) {
    dsm::SourceSpec s;
    s.shape = dsm::SupportShape::make_cube({0, 0, 0}, {0.5, 0.5, 0.5});
    s.polarization = j0;
    s.temporal = dsm::Impulse{t0};
    s.eps = eps;
    s.mu = mu;
    return s;
}

inline dsm::SourceSpec ball_source(double t0) {
    dsm::SourceSpec s = cube_source(t0);
    s.shape = dsm::SupportShape::make_ball({0, 0, 0}, 0.5);
    return s;
}

inline dsm::SourceSpec ellipsoid_source(double t0) {
    dsm::SourceSpec s = cube_source(t0);
    s.shape = dsm::SupportShape::make_ellipsoid({0, 0, 0}, {0.6, 0.4, 0.3});
    return s;
}

inline dsm::SourceSpec window_cube_source(double t_min, double t_max) {
    dsm::SourceSpec s = cube_source(0.0);
    s.temporal = dsm::Window{t_min, t_max, {}};
    return s;
}

inline std::vector<dsm::ObservationFrame> z_pair() {
    return {dsm::make_frame({0, 0, 1}), dsm::make_frame({0, 0, -1})};
}

inline dsm::FarFieldDataset synth_z_pair(const dsm::SourceSpec& src,
                                         int n_omega = 200, double omega_max = 20.0) {
    return dsm::synthesize_dataset(src, z_pair(), dsm::FrequencyGrid{omega_max, n_omega});
}

inline dsm::Vec3 random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    dsm::Vec3 v(n(rng), n(rng), n(rng));
    while (v.norm() < 1e-3) v = dsm::Vec3(n(rng), n(rng), n(rng));
    return v.normalized();
}

} // namespace fixtures
