#include "dsm/forward.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace dsm {

namespace {

using std::complex;
using namespace std::complex_literals;

constexpr double pi = std::numbers::pi;

struct Rule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

// Gauss-Legendre nodes by Newton iteration on P_n.
Rule compute_rule(int n) {
    Rule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        r.weights[i] = r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

const Rule& gauss_legendre(int n) {
    static std::map<int, Rule> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

double sinc(double x) {
    return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
}

// 1-D factor over [-a, a]: integral of q_ax(u) exp(-i kappa (c0 + u)) du,
// q_ax = 1 or cos(pi u / (2a)).
complex<double> axis_factor(double a, double c0, double kappa, bool bump, const Rule& rule) {
    complex<double> sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double u = a * rule.nodes[i];
        double q = bump ? std::cos(pi * u / (2.0 * a)) : 1.0;
        sum += rule.weights[i] * q * std::exp(-1.0i * kappa * (c0 + u));
    }
    return a * sum;
}

// Unit-ball transform of q == 1: integral over |u| <= 1 of exp(-i kappa u_3)
// reduced to the radial line (smooth through kappa = 0).
complex<double> unit_ball_constant(double kappa, const Rule& rule) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double r = 0.5 * (rule.nodes[i] + 1.0);
        sum += 0.5 * rule.weights[i] * r * r * sinc(kappa * r);
    }
    return 4.0 * pi * sum;
}

// Unit-ball transform of the scaled bump q = prod cos(pi u_i / 2) against
// exp(-i kp . u), tensor Gauss-Legendre in spherical coordinates.
complex<double> unit_ball_bump(const Vec3& kp, const Rule& rule) {
    const auto& nodes = rule.nodes;
    const auto& weights = rule.weights;
    const std::size_t n = nodes.size();
    complex<double> sum = 0.0;
    for (std::size_t ir = 0; ir < n; ++ir) {
        double r = 0.5 * (nodes[ir] + 1.0);
        double wr = 0.5 * weights[ir];
        for (std::size_t it = 0; it < n; ++it) {
            double theta = 0.5 * pi * (nodes[it] + 1.0);
            double wt = 0.5 * pi * weights[it];
            double st = std::sin(theta), ct = std::cos(theta);
            complex<double> inner = 0.0;
            for (std::size_t ip = 0; ip < n; ++ip) {
                double phi = pi * (nodes[ip] + 1.0);
                double wp = pi * weights[ip];
                Vec3 u(r * st * std::cos(phi), r * st * std::sin(phi), r * ct);
                double q = std::cos(pi * u.x() / 2.0) * std::cos(pi * u.y() / 2.0) *
                           std::cos(pi * u.z() / 2.0);
                inner += wp * q * std::exp(-1.0i * kp.dot(u));
            }
            sum += wr * wt * r * r * st * inner;
        }
    }
    return sum;
}

CVec3 transverse(const Vec3& x_hat, const Vec3& j0) {
    Vec3 t = j0 - x_hat.dot(j0) * x_hat;
    return t.cast<complex<double>>();
}

} // namespace

void SourceSpec::validate() const {
    shape.validate();
    if (!(eps > 0.0) || !(mu > 0.0))
        throw std::invalid_argument("eps and mu must be positive");
    if (polarization.isZero(0.0))
        throw std::invalid_argument("polarization must be nonzero");
    if (const auto* w = std::get_if<Window>(&temporal)) {
        if (!(w->t_max > w->t_min))
            throw std::invalid_argument("window requires t_max > t_min");
        if (!(w->t_min >= 0.0))
            throw std::invalid_argument("window requires t_min >= 0");
        if (w->tau.size() == 1)
            throw std::invalid_argument("sampled tau needs at least 2 points");
        bool all_zero = true;
        for (double v : w->tau) {
            if (v < 0.0)
                throw std::invalid_argument("tau samples must be nonnegative");
            if (v != 0.0) all_zero = false;
        }
        if (!w->tau.empty() && all_zero)
            throw std::invalid_argument("tau must not be identically zero");
    }
}

double profile_value(const SupportShape& shape, SpatialProfile profile, const Vec3& y) {
    if (!support_contains(shape, y)) return 0.0;
    if (profile == SpatialProfile::constant) return 1.0;
    Vec3 t = (y - shape.center).cwiseQuotient(2.0 * shape.half_extents);
    return std::cos(pi * t.x()) * std::cos(pi * t.y()) * std::cos(pi * t.z());
}

std::complex<double> shape_integral(const SupportShape& shape, SpatialProfile profile,
                                    const Vec3& k, int n_q) {
    if (n_q < 2) throw std::invalid_argument("n_q must be at least 2");
    const Rule& rule = gauss_legendre(n_q);
    const bool bump = profile == SpatialProfile::cosine_bump;
    const Vec3& a = shape.half_extents;

    if (shape.kind == ShapeKind::cube) {
        complex<double> f = 1.0;
        for (int i = 0; i < 3; ++i)
            f *= axis_factor(a[i], shape.center[i], k[i], bump, rule);
        return f;
    }

    // Ball/ellipsoid: affine map to the unit ball; the scaled profile stays
    // smooth on the spherical coordinate box, so no masking is involved.
    complex<double> phase = std::exp(-1.0i * k.dot(shape.center));
    double jac = a.prod();
    Vec3 kp = k.cwiseProduct(a);
    if (!bump) return jac * phase * unit_ball_constant(kp.norm(), rule);
    return jac * phase * unit_ball_bump(kp, rule);
}

std::complex<double> window_spectrum(const Window& window, double omega) {
    if (!(window.t_max > window.t_min))
        throw std::invalid_argument("window requires t_max > t_min");
    if (window.tau.empty()) {
        return (std::exp(1.0i * omega * window.t_max) -
                std::exp(1.0i * omega * window.t_min)) /
               (1.0i * omega);
    }
    if (window.tau.size() == 1)
        throw std::invalid_argument("sampled tau needs at least 2 points");
    const std::size_t m = window.tau.size();
    const double h = (window.t_max - window.t_min) / (m - 1);
    complex<double> sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        double w = (j == 0 || j == m - 1) ? 0.5 * h : h;
        double t = window.t_min + j * h;
        sum += w * window.tau[j] * std::exp(1.0i * omega * t);
    }
    return sum;
}

CVec3 farfield_ip1(const SourceSpec& source, const Vec3& x_hat, double omega, int n_q) {
    if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
    const auto* imp = std::get_if<Impulse>(&source.temporal);
    if (!imp) throw std::invalid_argument("farfield_ip1 requires an impulse source");
    Vec3 k = (omega / source.wave_speed()) * x_hat;
    complex<double> amp = 1.0i * omega * source.mu *
                          std::exp(1.0i * omega * imp->t0) *
                          shape_integral(source.shape, source.profile, k, n_q);
    return amp * transverse(x_hat, source.polarization);
}

CVec3 farfield_ip2(const SourceSpec& source, const Vec3& x_hat, double omega, int n_q) {
    if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
    const auto* win = std::get_if<Window>(&source.temporal);
    if (!win) throw std::invalid_argument("farfield_ip2 requires a window source");
    Vec3 k = (omega / source.wave_speed()) * x_hat;
    complex<double> amp = 1.0i * omega * source.mu * window_spectrum(*win, omega) *
                          shape_integral(source.shape, source.profile, k, n_q);
    return amp * transverse(x_hat, source.polarization);
}

CVec3 farfield(const SourceSpec& source, const Vec3& x_hat, double omega, int n_q) {
    return source.is_impulse() ? farfield_ip1(source, x_hat, omega, n_q)
                               : farfield_ip2(source, x_hat, omega, n_q);
}

CVec3 farfield_cube_closedform(const Vec3& half_extents, const Vec3& center,
                               const Vec3& j0, double eps, double mu, double t0,
                               const Vec3& x_hat, double omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
    double c = 1.0 / std::sqrt(eps * mu);
    complex<double> f = 1.0;
    for (int i = 0; i < 3; ++i) {
        double kappa = omega * x_hat[i] / c;
        f *= 2.0 * half_extents[i] * sinc(kappa * half_extents[i]);
    }
    complex<double> amp = 1.0i * omega * mu * std::exp(1.0i * omega * t0) *
                          std::exp(-1.0i * (omega / c) * x_hat.dot(center)) * f;
    return amp * transverse(x_hat, j0);
}

FarFieldDataset synthesize_dataset(const SourceSpec& source,
                                   const std::vector<ObservationFrame>& frames,
                                   const FrequencyGrid& grid, int n_q) {
    source.validate();
    grid.validate();
    if (frames.empty()) throw std::invalid_argument("at least one frame required");

    FarFieldDataset ds;
    ds.eps = source.eps;
    ds.mu = source.mu;
    ds.grid = grid;
    ds.frames = frames;
    ds.provenance = source.is_impulse() ? "synthesized impulse source"
                                        : "synthesized window source";
    ds.values.resize(frames.size() * grid.n_omega);

    const long total = static_cast<long>(frames.size()) * grid.n_omega;
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < total; ++idx) {
        std::size_t f = idx / grid.n_omega;
        int n = 1 + static_cast<int>(idx % grid.n_omega);
        ds.values[idx] = farfield(source, frames[f].x_hat, grid.omega(n), n_q);
    }
    return ds;
}

} // namespace dsm
