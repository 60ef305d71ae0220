#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "dsm/oracle.hpp"
#include "fixtures.hpp"

using namespace dsm;
using std::numbers::pi;
using cd = std::complex<double>;

namespace {

cd ball_transform(double radius, double kappa) {
    if (kappa < 1e-12) return 4.0 / 3.0 * pi * std::pow(radius, 3);
    double kr = kappa * radius;
    return 4.0 * pi * (std::sin(kr) - kr * std::cos(kr)) / std::pow(kappa, 3);
}

// literal triple-loop midpoint rule, the reading farfield_midpoint optimizes
CVec3 naive_midpoint(const SourceSpec& src, const Vec3& x_hat, double omega, int n) {
    const Vec3& a = src.shape.half_extents;
    const Vec3& ctr = src.shape.center;
    double c = src.wave_speed();
    Vec3 k = (omega / c) * x_hat;
    Vec3 h = 2.0 * a / n;
    cd total = 0.0;
    for (int kz = 0; kz < n; ++kz)
        for (int jy = 0; jy < n; ++jy)
            for (int ix = 0; ix < n; ++ix) {
                Vec3 y = ctr - a + Vec3((ix + 0.5) * h.x(), (jy + 0.5) * h.y(),
                                        (kz + 0.5) * h.z());
                double q = profile_value(src.shape, src.profile, y);
                if (q != 0.0) total += q * std::exp(cd(0, -k.dot(y)));
            }
    total *= h.prod();
    cd timefac = std::exp(cd(0, omega * std::get<Impulse>(src.temporal).t0));
    Vec3 t = src.polarization - x_hat.dot(src.polarization) * x_hat;
    return (cd(0, omega * src.mu) * timefac * total) * t.cast<cd>();
}

double trapezoid_sections(const SupportShape& shape, SpatialProfile prof,
                          const Vec3& x_hat, int n_s) {
    Interval iv = projection_interval(shape, x_hat);
    double lo = iv.lo - 0.05, hi = iv.hi + 0.05;
    double h = (hi - lo) / (n_s - 1);
    double acc = 0.0;
    for (int i = 0; i < n_s; ++i) {
        double w = (i == 0 || i == n_s - 1) ? 0.5 : 1.0;
        acc += w * cross_section_integral(shape, prof, x_hat, lo + i * h);
    }
    return acc * h;
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("sine integral") {
    CHECK(sine_integral(0.0) == 0.0);
    CHECK(sine_integral(0.5) == doctest::Approx(0.49310741804306674).epsilon(1e-10));
    CHECK(sine_integral(pi) == doctest::Approx(1.8519370519824661).epsilon(1e-10));
    CHECK(sine_integral(10.0) == doctest::Approx(1.6583475942188740).epsilon(1e-10));
}

TEST_CASE("cross sections in closed form") {
    auto cube = SupportShape::make_cube({0, 0, 0}, {0.5, 0.5, 0.5});
    CHECK(cross_section_integral(cube, SpatialProfile::constant, {0, 0, 1}, 0.2) == 1.0);
    CHECK(cross_section_integral(cube, SpatialProfile::constant, {0, 0, 1}, 0.5) == 1.0);
    CHECK(cross_section_integral(cube, SpatialProfile::constant, {0, 0, 1}, 0.6) == 0.0);

    auto ball = SupportShape::make_ball({0, 0, 0}, 0.5);
    CHECK(cross_section_integral(ball, SpatialProfile::constant, {0, 0, 1}, 0.3) ==
          doctest::Approx(pi * 0.16).epsilon(1e-13));
    CHECK(cross_section_integral(ball, SpatialProfile::constant, {0, 0, 1}, 0.6) == 0.0);
    // rotation invariance of the ball section
    Vec3 oblique = Vec3(1, 1, 1).normalized();
    CHECK(cross_section_integral(ball, SpatialProfile::constant, oblique, 0.3) ==
          doctest::Approx(pi * 0.16).epsilon(1e-12));

    auto ell = SupportShape::make_ellipsoid({0, 0, 0}, {0.6, 0.4, 0.3});
    CHECK(cross_section_integral(ell, SpatialProfile::constant, {1, 0, 0}, 0.0) ==
          doctest::Approx(pi * 0.12).epsilon(1e-13));
    CHECK(cross_section_integral(ell, SpatialProfile::constant, {1, 0, 0}, 0.7) == 0.0);

    // off-center shapes shift with their center
    auto moved = SupportShape::make_ball({0, 0, 0.4}, 0.5);
    CHECK(cross_section_integral(moved, SpatialProfile::constant, {0, 0, 1}, 0.7) ==
          doctest::Approx(pi * 0.16).epsilon(1e-12));
}

TEST_CASE("sections integrate to the volume") {
    // oblique directions exercise the planar midpoint fallback
    Vec3 oblique = Vec3(1, 1, 1).normalized();
    auto cube = SupportShape::make_cube({0, 0, 0}, {0.5, 0.5, 0.5});
    CHECK(trapezoid_sections(cube, SpatialProfile::constant, oblique, 101) ==
          doctest::Approx(1.0).epsilon(5e-3));
    // bump sections integrate to the bump mass (2/pi)^3
    CHECK(trapezoid_sections(cube, SpatialProfile::cosine_bump, oblique, 101) ==
          doctest::Approx(std::pow(2.0 / pi, 3)).epsilon(5e-3));

    auto ell = SupportShape::make_ellipsoid({0, 0, 0}, {0.6, 0.4, 0.3});
    CHECK(trapezoid_sections(ell, SpatialProfile::constant, {0, 1, 0}, 2001) ==
          doctest::Approx(4.0 / 3.0 * pi * 0.072).epsilon(1e-4));
}

TEST_CASE("co-area profile of an impulse") {
    auto src = fixtures::cube_source(3.0);
    ObservationFrame frame = make_frame({0, 0, 1});
    CHECK(g_profile_value(src, frame, -3.0) == 1.0);
    CHECK(g_profile_value(src, frame, -2.4) == 0.0);
    CHECK(g_profile_value(src, frame, -3.6) == 0.0);

    auto prof = g_profile(src, frame, 101);
    CHECK(prof.lo == doctest::Approx(-3.5).epsilon(1e-14));
    CHECK(prof.hi == doctest::Approx(-2.5).epsilon(1e-14));
    // grid nodes land on the support endpoints, margins are zero
    bool saw_lo = false, saw_hi = false;
    for (std::size_t i = 0; i < prof.alphas.size(); ++i) {
        if (prof.alphas[i] == doctest::Approx(-3.5).epsilon(1e-13)) saw_lo = true;
        if (prof.alphas[i] == doctest::Approx(-2.5).epsilon(1e-13)) saw_hi = true;
        if (prof.alphas[i] < -3.51 || prof.alphas[i] > -2.49)
            CHECK(prof.values[i] == 0.0);
    }
    CHECK(saw_lo);
    CHECK(saw_hi);
    CHECK(prof.alphas.size() > 101); // margin steps on both sides
}

TEST_CASE("co-area Jacobian carries the wave speed") {
    auto src = fixtures::cube_source(3.0, 4.0, 1.0); // c = 1/2
    ObservationFrame frame = make_frame({0, 0, 1});
    auto prof = g_profile(src, frame, 101);
    CHECK(prof.lo == doctest::Approx(-4.0));
    CHECK(prof.hi == doctest::Approx(-2.0));
    CHECK(g_profile_value(src, frame, -3.0) == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("profile vanishes for orthogonal polarization") {
    auto src = fixtures::cube_source(1.0, 1.0, 1.0, Vec3(0, 5, 0));
    ObservationFrame frame = make_frame({0, 0, 1}); // p_hat = (1,0,0)
    auto prof = g_profile(src, frame, 51);
    for (double v : prof.values) CHECK(v == 0.0);
}

TEST_CASE("finite-duration profile is the window average") {
    auto src = fixtures::window_cube_source(0.0, 1.0);
    ObservationFrame frame = make_frame({0, 0, 1});
    auto prof = h_profile(src, frame, 81);
    CHECK(prof.lo == doctest::Approx(-1.5));
    CHECK(prof.hi == doctest::Approx(0.5));
    auto value_at = [&](double alpha) {
        for (std::size_t i = 0; i < prof.alphas.size(); ++i)
            if (std::abs(prof.alphas[i] - alpha) < 1e-12) return prof.values[i];
        FAIL("alpha not on the grid");
        return 0.0;
    };
    CHECK(value_at(-0.5) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(value_at(0.0) == doctest::Approx(0.5).epsilon(2e-3));
    CHECK(value_at(-1.0) == doctest::Approx(0.5).epsilon(2e-3));
    CHECK(value_at(-1.5) == doctest::Approx(0.0).epsilon(2e-3));
    CHECK(prof.values.front() == 0.0);
    CHECK(prof.values.back() == 0.0);
}

TEST_CASE("temporal type mismatches throw") {
    ObservationFrame frame = make_frame({0, 0, 1});
    CHECK_THROWS_AS(g_profile(fixtures::window_cube_source(0, 1), frame, 51),
                    std::invalid_argument);
    CHECK_THROWS_AS(h_profile(fixtures::cube_source(1.0), frame, 51),
                    std::invalid_argument);
    CHECK_THROWS_AS(g_profile(fixtures::cube_source(1.0), frame, 2),
                    std::invalid_argument);
}

TEST_CASE("profile spectrum against closed transforms") {
    ObservationFrame frame = make_frame({0, 0, 1});

    auto ball = fixtures::ball_source(3.0);
    auto gb = g_profile(ball, frame, 20001);
    CHECK(std::abs(profile_spectrum(gb, 0.0) - cd(4.0 / 3.0 * pi * 0.125)) < 1e-7);
    for (double omega : {0.5, 2.0, 7.0, 15.0}) {
        cd expect = std::exp(cd(0, omega * 3.0)) * ball_transform(0.5, omega);
        CHECK(std::abs(profile_spectrum(gb, omega) - expect) < 1e-7);
    }

    auto cube = fixtures::cube_source(3.0);
    auto gc = g_profile(cube, frame, 20001);
    for (double omega : {0.5, 2.0, 7.0}) {
        cd expect = std::exp(cd(0, omega * 3.0)) * 2.0 * std::sin(omega / 2) / omega;
        CHECK(std::abs(profile_spectrum(gc, omega) - expect) < 3e-4);
    }
}

TEST_CASE("spectrum of the co-area profile matches the preprocessed far field") {
    // the identity behind the whole sampling method, checked for two media
    ObservationFrame frame = make_frame({0, 0, 1});
    for (double eps : {1.0, 4.0}) {
        SourceSpec src = fixtures::ball_source(1.0);
        src.eps = eps;
        auto g = g_profile(src, frame, 100001);
        double worst = 0.0, scale = 0.0;
        for (double omega : {0.1, 1.0, 5.0, 10.0, 20.0}) {
            cd ref = preprocess(farfield_ip1(src, frame.x_hat, omega), frame, omega,
                                src.mu);
            cd got = profile_spectrum(g, omega);
            worst = std::max(worst, std::abs(got - ref));
            scale = std::max(scale, std::abs(ref));
        }
        CHECK(worst <= 1e-6 * scale);
    }
}

TEST_CASE("band-limited oracle matches its one-shot form") {
    ObservationFrame frame = make_frame({0, 0, 1});
    auto g = g_profile(fixtures::cube_source(1.0), frame, 2001);
    FrequencyGrid grid{20.0, 50};
    BandlimitedOracle oracle(g, grid);
    for (double s : {-1.3, -1.0, -0.2, 0.4})
        CHECK(oracle(s) == bandlimited_reference(g, grid, s));
}

TEST_CASE("band-limited oracle reproduces the plateau") {
    ObservationFrame frame = make_frame({0, 0, 1});
    auto g = g_profile(fixtures::cube_source(1.0), frame, 100001);
    BandlimitedOracle oracle(g, FrequencyGrid{20.0, 200});
    CHECK(oracle(-1.0) == doctest::Approx(6.527884774465).epsilon(1e-3));
}

TEST_CASE("fast midpoint equals the naive triple loop") {
    Vec3 x_hat = Vec3(0.4, -0.6, 0.7).normalized();
    for (int kind = 0; kind < 3; ++kind) {
        SourceSpec src = kind == 0   ? fixtures::cube_source(0.8)
                         : kind == 1 ? fixtures::ball_source(0.8)
                                     : fixtures::ellipsoid_source(0.8);
        src.shape.center = Vec3(0.13, -0.07, 0.21);
        src.polarization = Vec3(1, 0.5, -0.25);
        for (auto prof : {SpatialProfile::constant, SpatialProfile::cosine_bump}) {
            src.profile = prof;
            CVec3 fast = farfield_midpoint(src, x_hat, 2.7, 24);
            CVec3 slow = naive_midpoint(src, x_hat, 2.7, 24);
            CHECK((fast - slow).norm() <= 1e-12 * std::max(1.0, slow.norm()));
        }
    }
}

TEST_CASE("midpoint oracle agrees with the closed-form cube") {
    auto src = fixtures::cube_source(0.9);
    Vec3 x_hat = Vec3(1, 2, 2).normalized();
    CVec3 mid = farfield_midpoint(src, x_hat, 3.0, 512);
    CVec3 ref = farfield_cube_closedform({0.5, 0.5, 0.5}, {0, 0, 0}, src.polarization,
                                         1.0, 1.0, 0.9, x_hat, 3.0);
    CHECK((mid - ref).norm() <= 1e-4 * ref.norm());
}

TEST_CASE("midpoint oracle agrees with the production quadrature") {
    Vec3 x_hat = Vec3(2, -1, 2).normalized();
    for (int kind = 0; kind < 2; ++kind) {
        SourceSpec src = kind == 0 ? fixtures::ball_source(0.5)
                                   : fixtures::ellipsoid_source(0.5);
        CVec3 mid = farfield_midpoint(src, x_hat, 2.0, 512);
        CVec3 prod = farfield_ip1(src, x_hat, 2.0);
        CHECK((mid - prod).norm() <= 1e-4 * mid.norm());
    }
    // smooth bump profile: boundary jump shrinks, midpoint stays reliable
    SourceSpec bump = fixtures::ball_source(0.5);
    bump.profile = SpatialProfile::cosine_bump;
    CVec3 mid = farfield_midpoint(bump, x_hat, 2.0, 512);
    CVec3 prod = farfield_ip1(bump, x_hat, 2.0);
    CHECK((mid - prod).norm() <= 1e-3 * mid.norm());
}

} // TEST_SUITE
