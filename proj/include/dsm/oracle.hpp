#pragma once

#include <complex>
#include <vector>

#include "dsm/forward.hpp"

namespace dsm {

// Brute-force references used by tests and the acceptance runner only.
// Everything here is deliberately independent of the production code paths:
// plane cross-sections instead of volume quadrature, dense Fourier sums
// instead of closed forms, midpoint rules instead of Gauss-Legendre.

// Sine integral Si(x) = integral_0^x sin(t)/t dt (adaptive Simpson).
double sine_integral(double x);

// integral of q over the planar cross-section { y in shape : x_hat . y = s }.
// Closed forms for constant q on cube (axis-aligned x_hat), ball, ellipsoid;
// 512^2 midpoint quadrature on the plane otherwise.
double cross_section_integral(const SupportShape& shape, SpatialProfile profile,
                              const Vec3& x_hat, double s);

struct Profile1D {
    std::vector<double> alphas; // sorted, uniform
    std::vector<double> values;
    double lo = 0.0; // analytic support bounds
    double hi = 0.0;
};

// Co-area profile of an impulsive source: g(alpha) = c (p . J0) *
// cross-section at depth c (t0 + alpha); Jacobian c included so that the
// dense Fourier transform of g reproduces the preprocessed far field.
Profile1D g_profile(const SourceSpec& source, const ObservationFrame& frame,
                    int n_alpha);
double g_profile_value(const SourceSpec& source, const ObservationFrame& frame,
                       double alpha);

// Finite-duration analogue: h(alpha) = integral of tau(t) g-section over the
// window, trapezoid in t.
Profile1D h_profile(const SourceSpec& source, const ObservationFrame& frame,
                    int n_alpha, int n_t = 2001);

// Dense trapezoid Fourier transform of the sampled profile at omega
// (factorless convention, kernel exp(-i omega alpha)).
std::complex<double> profile_spectrum(const Profile1D& profile, double omega);

// Band-limited value the indicator must reproduce at s = x_hat . y / c - eta:
// sum_n 2 Re{ spectrum(omega_n) exp(i omega_n s) } * delta.
double bandlimited_reference(const Profile1D& profile, const FrequencyGrid& grid,
                             double s);

// Same sum with the dense spectra computed once; for repeated s queries.
class BandlimitedOracle {
public:
    BandlimitedOracle(const Profile1D& profile, const FrequencyGrid& grid);
    double operator()(double s) const;

private:
    FrequencyGrid grid_;
    std::vector<std::complex<double>> spectra_;
};

// 3-D midpoint far-field quadrature over the bounding box at n_cells^3
// resolution, cell centers masked by membership.
CVec3 farfield_midpoint(const SourceSpec& source, const Vec3& x_hat, double omega,
                        int n_cells = 512);

} // namespace dsm
