#include "dsm/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dsm {

namespace {

using std::complex;
using namespace std::complex_literals;

constexpr double pi = std::numbers::pi;

double sinc(double x) {
    return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
}

double simpson(double a, double b, int n_half, double (*f)(double)) {
    // composite Simpson with 2*n_half intervals
    double h = (b - a) / (2 * n_half);
    double sum = f(a) + f(b);
    for (int i = 1; i < 2 * n_half; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

int axis_aligned_index(const Vec3& x_hat) {
    int k = -1;
    for (int i = 0; i < 3; ++i) {
        if (x_hat[i] != 0.0) {
            if (k >= 0) return -1;
            k = i;
        }
    }
    return k;
}

} // namespace

double sine_integral(double x) {
    return simpson(0.0, x, 4000, [](double t) { return sinc(t); });
}

double cross_section_integral(const SupportShape& shape, SpatialProfile profile,
                              const Vec3& x_hat, double s) {
    shape.validate();
    const Vec3& a = shape.half_extents;
    const double d = s - x_hat.dot(shape.center);

    if (profile == SpatialProfile::constant) {
        if (shape.kind == ShapeKind::cube) {
            int k = axis_aligned_index(x_hat);
            if (k >= 0) {
                if (std::abs(d) > a[k]) return 0.0;
                double area = 1.0;
                for (int i = 0; i < 3; ++i)
                    if (i != k) area *= 2.0 * a[i];
                return area;
            }
        } else {
            // Ellipse section area; the ball is the equal-axes case.
            double w = a.cwiseProduct(x_hat).norm();
            double t = 1.0 - d * d / (w * w);
            return t <= 0.0 ? 0.0 : pi * a.prod() / w * t;
        }
    }

    // Planar 512^2 midpoint rule; membership handled by the vanishing
    // profile outside the shape.
    const int n = 512;
    Vec3 e1 = perp_vector(x_hat);
    Vec3 e2 = x_hat.cross(e1);
    Vec3 origin = s * x_hat;
    double radius = shape.center.norm() + shape.half_extents.norm();
    double h = 2.0 * radius / n;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        double t1 = -radius + (i + 0.5) * h;
        for (int j = 0; j < n; ++j) {
            double t2 = -radius + (j + 0.5) * h;
            sum += profile_value(shape, profile, origin + t1 * e1 + t2 * e2);
        }
    }
    return sum * h * h;
}

double g_profile_value(const SourceSpec& source, const ObservationFrame& frame,
                       double alpha) {
    const auto* imp = std::get_if<Impulse>(&source.temporal);
    if (!imp) throw std::invalid_argument("g_profile requires an impulse source");
    double c = source.wave_speed();
    double pj = frame.p_hat.dot(source.polarization);
    return c * pj *
           cross_section_integral(source.shape, source.profile, frame.x_hat,
                                  c * (imp->t0 + alpha));
}

namespace {

// Uniform alpha grid whose nodes land exactly on the support endpoints, with
// a margin of whole steps on both sides (trapezoid then treats the profile's
// jumps by their half-weight limits).
Profile1D make_alpha_grid(double lo, double hi, int n_alpha) {
    if (n_alpha < 3) throw std::invalid_argument("n_alpha too small");
    Profile1D p;
    p.lo = lo;
    p.hi = hi;
    const double h = (hi - lo) / (n_alpha - 1);
    const int margin = static_cast<int>(std::ceil(0.02 * (n_alpha - 1)));
    const int total = n_alpha + 2 * margin;
    p.alphas.resize(total);
    p.values.assign(total, 0.0);
    for (int i = 0; i < total; ++i) p.alphas[i] = lo + (i - margin) * h;
    return p;
}

} // namespace

Profile1D g_profile(const SourceSpec& source, const ObservationFrame& frame,
                    int n_alpha) {
    const auto* imp = std::get_if<Impulse>(&source.temporal);
    if (!imp) throw std::invalid_argument("g_profile requires an impulse source");
    double c = source.wave_speed();
    Interval proj = projection_interval(source.shape, frame.x_hat);
    Profile1D p = make_alpha_grid(proj.lo / c - imp->t0, proj.hi / c - imp->t0, n_alpha);
    for (std::size_t i = 0; i < p.alphas.size(); ++i)
        p.values[i] = g_profile_value(source, frame, p.alphas[i]);
    return p;
}

Profile1D h_profile(const SourceSpec& source, const ObservationFrame& frame,
                    int n_alpha, int n_t) {
    const auto* win = std::get_if<Window>(&source.temporal);
    if (!win) throw std::invalid_argument("h_profile requires a window source");
    if (n_t < 2) throw std::invalid_argument("n_t too small");
    double c = source.wave_speed();
    double pj = frame.p_hat.dot(source.polarization);
    Interval proj = projection_interval(source.shape, frame.x_hat);
    Profile1D p =
        make_alpha_grid(proj.lo / c - win->t_max, proj.hi / c - win->t_min, n_alpha);

    const double ht = (win->t_max - win->t_min) / (n_t - 1);
    auto tau_at = [&](int j) {
        if (win->tau.empty()) return 1.0;
        // piecewise-linear read of the sampled profile
        double pos = static_cast<double>(j) * (win->tau.size() - 1) / (n_t - 1);
        std::size_t k = std::min(static_cast<std::size_t>(pos), win->tau.size() - 2);
        double f = pos - k;
        return (1.0 - f) * win->tau[k] + f * win->tau[k + 1];
    };
    for (std::size_t i = 0; i < p.alphas.size(); ++i) {
        double acc = 0.0;
        for (int j = 0; j < n_t; ++j) {
            double t = win->t_min + j * ht;
            double w = (j == 0 || j == n_t - 1) ? 0.5 * ht : ht;
            acc += w * tau_at(j) *
                   cross_section_integral(source.shape, source.profile, frame.x_hat,
                                          c * (t + p.alphas[i]));
        }
        p.values[i] = c * pj * acc;
    }
    return p;
}

std::complex<double> profile_spectrum(const Profile1D& profile, double omega) {
    const std::size_t n = profile.alphas.size();
    if (n < 2) throw std::invalid_argument("profile grid too small");
    const double h = (profile.alphas.back() - profile.alphas.front()) / (n - 1);
    complex<double> sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double w = (j == 0 || j == n - 1) ? 0.5 * h : h;
        sum += w * profile.values[j] *
               std::exp(-1.0i * omega * profile.alphas[j]);
    }
    return sum;
}

double bandlimited_reference(const Profile1D& profile, const FrequencyGrid& grid,
                             double s) {
    return BandlimitedOracle(profile, grid)(s);
}

BandlimitedOracle::BandlimitedOracle(const Profile1D& profile, const FrequencyGrid& grid)
    : grid_(grid) {
    grid.validate();
    spectra_.resize(grid.n_omega);
    const long n = grid.n_omega;
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i)
        spectra_[i] = profile_spectrum(profile, grid.omega(static_cast<int>(i) + 1));
}

double BandlimitedOracle::operator()(double s) const {
    double acc = 0.0;
    const double w = grid_.delta();
    for (int n = 1; n <= grid_.n_omega; ++n) {
        complex<double> ph(std::cos(grid_.omega(n) * s), std::sin(grid_.omega(n) * s));
        acc += 2.0 * (spectra_[n - 1] * ph).real() * w;
    }
    return acc;
}

CVec3 farfield_midpoint(const SourceSpec& source, const Vec3& x_hat, double omega,
                        int n_cells) {
    if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
    if (n_cells < 2) throw std::invalid_argument("n_cells too small");
    const SupportShape& shape = source.shape;
    const Vec3& a = shape.half_extents;
    const Vec3& ctr = shape.center;
    const double c = source.wave_speed();
    const Vec3 k = (omega / c) * x_hat;
    const bool bump = source.profile == SpatialProfile::cosine_bump;
    const int n = n_cells;

    // Per-axis factors at cell centers; the x sweep collapses to prefix sums
    // over the rows' analytic membership intervals.
    auto axis_values = [&](int ax) {
        std::vector<complex<double>> v(n);
        double h = 2.0 * a[ax] / n;
        for (int i = 0; i < n; ++i) {
            double y = ctr[ax] - a[ax] + (i + 0.5) * h;
            double q = bump ? std::cos(pi * (y - ctr[ax]) / (2.0 * a[ax])) : 1.0;
            v[i] = q * std::exp(-1.0i * k[ax] * y);
        }
        return v;
    };
    std::vector<complex<double>> fx = axis_values(0), fy = axis_values(1),
                                 fz = axis_values(2);
    std::vector<complex<double>> prefix(n + 1, 0.0);
    for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + fx[i];

    const double hx = 2.0 * a.x() / n, hy = 2.0 * a.y() / n, hz = 2.0 * a.z() / n;
    complex<double> total = 0.0;
    const bool is_cube = shape.kind == ShapeKind::cube;
    for (int kz = 0; kz < n; ++kz) {
        double z = ctr.z() - a.z() + (kz + 0.5) * hz;
        double uz = (z - ctr.z()) / a.z();
        complex<double> row_z = fz[kz];
        for (int jy = 0; jy < n; ++jy) {
            int i0 = 0, i1 = n - 1;
            if (!is_cube) {
                double y = ctr.y() - a.y() + (jy + 0.5) * hy;
                double uy = (y - ctr.y()) / a.y();
                double r2 = 1.0 - uy * uy - uz * uz;
                if (r2 < 0.0) continue;
                double hw = a.x() * std::sqrt(r2); // row half-width in x
                i0 = static_cast<int>(std::ceil((ctr.x() - hw - (ctr.x() - a.x())) / hx - 0.5));
                i1 = static_cast<int>(std::floor((ctr.x() + hw - (ctr.x() - a.x())) / hx - 0.5));
                i0 = std::max(i0, 0);
                i1 = std::min(i1, n - 1);
                if (i0 > i1) continue;
            }
            total += (prefix[i1 + 1] - prefix[i0]) * fy[jy] * row_z;
        }
    }
    total *= hx * hy * hz;

    complex<double> timefac;
    if (const auto* imp = std::get_if<Impulse>(&source.temporal))
        timefac = std::exp(1.0i * omega * imp->t0);
    else
        timefac = window_spectrum(std::get<Window>(source.temporal), omega);

    Vec3 t = source.polarization - x_hat.dot(source.polarization) * x_hat;
    return (1.0i * omega * source.mu * timefac * total) * t.cast<complex<double>>();
}

} // namespace dsm
