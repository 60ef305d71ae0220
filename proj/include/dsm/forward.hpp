#pragma once

#include <complex>
#include <variant>
#include <vector>

#include "dsm/data.hpp"
#include "dsm/geometry.hpp"

namespace dsm {

enum class SpatialProfile { constant, cosine_bump };

struct Impulse {
    double t0 = 0.0;
};

// Emission window [t_min, t_max] with amplitude profile tau(t) >= 0 sampled
// uniformly over the window; empty samples mean tau == 1.
struct Window {
    double t_min = 0.0;
    double t_max = 1.0;
    std::vector<double> tau;
};

using Temporal = std::variant<Impulse, Window>;

struct SourceSpec {
    SupportShape shape;
    Vec3 polarization{1.0, 0.0, 0.0}; // J0
    SpatialProfile profile = SpatialProfile::constant;
    Temporal temporal = Impulse{0.0};
    double eps = 1.0;
    double mu = 1.0;

    double wave_speed() const { return 1.0 / std::sqrt(eps * mu); }
    bool is_impulse() const { return std::holds_alternative<Impulse>(temporal); }
    void validate() const;
};

// Spatial amplitude q(y) of the profile on the shape (0 outside).
double profile_value(const SupportShape& shape, SpatialProfile profile, const Vec3& y);

// integral over the shape of q(y) exp(-i k . y) dy, smooth quadrature of
// order n_q per axis (cube: separable Gauss-Legendre; ball/ellipsoid:
// radial or scaled-spherical Gauss-Legendre, no membership masking).
std::complex<double> shape_integral(const SupportShape& shape, SpatialProfile profile,
                                    const Vec3& k, int n_q = 64);

// integral over [t_min, t_max] of tau(t) exp(i omega t) dt; closed form for
// tau == 1, trapezoid on the sample grid otherwise.
std::complex<double> window_spectrum(const Window& window, double omega);

// E_inf = i omega mu (I - x x^T) J0 * time_factor * shape_integral.
CVec3 farfield_ip1(const SourceSpec& source, const Vec3& x_hat, double omega, int n_q = 64);
CVec3 farfield_ip2(const SourceSpec& source, const Vec3& x_hat, double omega, int n_q = 64);
CVec3 farfield(const SourceSpec& source, const Vec3& x_hat, double omega, int n_q = 64);

// Separable analytic value for the constant-profile cube; test oracle.
CVec3 farfield_cube_closedform(const Vec3& half_extents, const Vec3& center,
                               const Vec3& j0, double eps, double mu, double t0,
                               const Vec3& x_hat, double omega);

FarFieldDataset synthesize_dataset(const SourceSpec& source,
                                   const std::vector<ObservationFrame>& frames,
                                   const FrequencyGrid& grid, int n_q = 64);

} // namespace dsm
