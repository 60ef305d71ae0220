#pragma once

#include <complex>
#include <span>
#include <vector>

#include "dsm/data.hpp"

namespace dsm {

// Preprocessed scalar data of one frame bundled with the quadrature weights:
// I(u) = sum_n 2 Re{ a_n exp(i omega_n u) } with a_n = E(omega_n) * w_n.
// Every indicator below reduces to this 1-D correlation in
// u = x_hat . y / c - eta. omegas must be the uniform grid n * delta
// (evaluation uses a phase recurrence).
struct BandProfile {
    std::vector<std::complex<double>> coeff;
    std::vector<double> omegas;

    double operator()(double u) const;
};

BandProfile make_band_profile(const FarFieldDataset& dataset, std::size_t frame);

// Auxiliary indicator I_eta at a sampling point.
double indicator_I(const FarFieldDataset& dataset, std::size_t frame, double eta,
                   const Vec3& y);

// indicator_I with the recovered excitation time as eta.
double indicator_slab_known_t0(const FarFieldDataset& dataset, std::size_t frame,
                               double t0, const Vec3& y);

// Harmonic pair combination a*b/(a+b); negatives clamp to zero first and
// either factor at or below clamp_abs zeroes the result.
double combine_pair(double a, double b, double clamp_abs);

// Reciprocal composite 1 / sum(1/v); zero when any value fails the clamp.
double combine_composite(std::span<const double> values, double clamp_abs);

struct FramePair {
    std::size_t plus = 0;
    std::size_t minus = 1;
};

// Locates -x_hat for `plus`; throws std::invalid_argument when absent.
FramePair find_frame_pair(const FarFieldDataset& dataset, std::size_t plus);

// W_eta = combine_pair of the two opposite-direction indicators. clamp_abs
// is the absolute floor (callers derive it from clamp_rel, see temporal).
double indicator_W(const FarFieldDataset& dataset, const FramePair& pair, double eta,
                   const Vec3& y, double clamp_abs);

// Two-sided finite-duration indicator: pairs the t_min test at x_hat with the
// t_max test at -x_hat, both spatial phases referenced to the +x_hat axis, so
// the product region is exactly the smallest slab containing the support.
double indicator_S_ip2(const FarFieldDataset& dataset, const FramePair& pair,
                       double t_min, double t_max, const Vec3& y, double clamp_abs);

} // namespace dsm
