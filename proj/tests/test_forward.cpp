#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "dsm/forward.hpp"
#include "fixtures.hpp"

using namespace dsm;
using std::numbers::pi;
using cd = std::complex<double>;

namespace {

cd ball_transform(double radius, double kappa) {
    // constant profile over a centered ball, analytic
    if (kappa < 1e-12) return 4.0 / 3.0 * pi * std::pow(radius, 3);
    double kr = kappa * radius;
    return 4.0 * pi * (std::sin(kr) - kr * std::cos(kr)) / std::pow(kappa, 3);
}

} // namespace

TEST_SUITE("forward") {

TEST_CASE("impulse cube reference value") {
    auto src = fixtures::cube_source(1.0);
    CVec3 e = farfield_ip1(src, {0, 0, 1}, pi);
    CHECK(std::abs(e[0] - cd(0, -2)) < 1e-12);
    CHECK(std::abs(e[1]) < 1e-14);
    CHECK(std::abs(e[2]) < 1e-14);
}

TEST_CASE("cube transform zero at omega = 2 pi") {
    auto src = fixtures::cube_source(1.0);
    CVec3 e = farfield_ip1(src, {0, 0, 1}, 2 * pi);
    CHECK(e.norm() < 1e-13);
}

TEST_CASE("longitudinal polarization radiates nothing") {
    auto src = fixtures::cube_source(0.5, 1.0, 1.0, Vec3(0, 0, 2));
    CVec3 e = farfield_ip1(src, {0, 0, 1}, 3.7);
    CHECK(e.norm() < 1e-14);
}

TEST_CASE("window cube reference value") {
    auto src = fixtures::window_cube_source(0.0, 1.0);
    CVec3 e = farfield_ip2(src, {0, 0, 1}, pi);
    CHECK(std::abs(e[0] - cd(-4.0 / pi, 0)) < 1e-12);
    CHECK(std::abs(e[1]) < 1e-14);
    CHECK(std::abs(e[2]) < 1e-14);
}

TEST_CASE("window spectrum closed form for tau == 1") {
    Window w{0.3, 1.7, {}};
    for (double omega : {0.1, 1.0, 4.5, 19.9}) {
        cd expected = (std::exp(cd(0, omega * 1.7)) - std::exp(cd(0, omega * 0.3))) /
                      cd(0, omega);
        CHECK(std::abs(window_spectrum(w, omega) - expected) < 1e-14);
    }
}

TEST_CASE("window spectrum trapezoid against analytic ramp") {
    // tau(t) = t on [0,1]: integral t e^{i omega t} dt has a closed form
    int n = 20001;
    Window w{0.0, 1.0, {}};
    w.tau.resize(n);
    for (int i = 0; i < n; ++i) w.tau[i] = static_cast<double>(i) / (n - 1);
    for (double omega : {1.0, 5.0, 12.0}) {
        cd ei = std::exp(cd(0, omega));
        cd expected = ei * (cd(0, -1) / omega + 1.0 / (omega * omega)) -
                      1.0 / (omega * omega);
        CHECK(std::abs(window_spectrum(w, omega) - expected) < 1e-7);
    }
}

TEST_CASE("window spectrum of zero samples") {
    Window w{0.0, 1.0, {0.0, 0.0, 0.0}};
    CHECK(window_spectrum(w, 2.0) == cd(0, 0));
}

TEST_CASE("narrow window approaches scaled impulse") {
    double h = 1e-5;
    auto src = fixtures::cube_source(2.0);
    auto win = fixtures::window_cube_source(2.0, 2.0 + h);
    for (double omega : {1.0, 5.0, 10.0, 19.0}) {
        CVec3 imp = farfield_ip1(src, {0, 0, 1}, omega);
        CVec3 fin = farfield_ip2(win, {0, 0, 1}, omega);
        CHECK((fin / h - imp).norm() < 1e-3 * imp.norm());
    }
}

TEST_CASE("far field is transverse") {
    std::mt19937_64 rng(21);
    auto shapes = {fixtures::cube_source(0.7), fixtures::ball_source(0.7),
                   fixtures::ellipsoid_source(0.7)};
    for (const auto& base : shapes) {
        SourceSpec src = base;
        src.polarization = Vec3(0.3, -1.1, 0.8);
        for (int i = 0; i < 10; ++i) {
            Vec3 x = fixtures::random_unit(rng);
            CVec3 e = farfield(src, x, 2.5 + i * 0.4);
            cd along = x[0] * e[0] + x[1] * e[1] + x[2] * e[2];
            CHECK(std::abs(along) < 1e-12 * (1.0 + e.norm()));
        }
    }
}

TEST_CASE("quadrature matches separable cube closed form") {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> Uw(0.1, 20.0), Uc(-0.4, 0.4);
    for (int i = 0; i < 50; ++i) {
        Vec3 center(Uc(rng), Uc(rng), Uc(rng));
        auto src = fixtures::cube_source(0.9);
        src.shape = SupportShape::make_cube(center, {0.5, 0.5, 0.5});
        src.polarization = Vec3(1, 1, 0);
        Vec3 x = fixtures::random_unit(rng);
        double omega = Uw(rng);
        CVec3 a = farfield_ip1(src, x, omega);
        CVec3 b = farfield_cube_closedform({0.5, 0.5, 0.5}, center, src.polarization,
                                           1.0, 1.0, 0.9, x, omega);
        CHECK((a - b).norm() < 1e-12 * std::max(1.0, b.norm()));
    }
}

TEST_CASE("translation multiplies by a phase") {
    std::mt19937_64 rng(23);
    Vec3 d(0.21, -0.13, 0.34);
    for (auto kind : {0, 1, 2}) {
        SourceSpec src = kind == 0   ? fixtures::cube_source(0.0)
                         : kind == 1 ? fixtures::ball_source(0.0)
                                     : fixtures::ellipsoid_source(0.0);
        src.profile = kind == 2 ? SpatialProfile::cosine_bump : SpatialProfile::constant;
        SourceSpec moved = src;
        moved.shape.center += d;
        Vec3 x = fixtures::random_unit(rng);
        double omega = 3.3;
        cd phase = std::exp(cd(0, -omega * x.dot(d)));
        CVec3 a = farfield(moved, x, omega);
        CVec3 b = farfield(src, x, omega);
        CHECK((a - phase * b).norm() < 1e-12 * std::max(1.0, b.norm()));
    }
}

TEST_CASE("ball transform against radial closed form") {
    auto ball = SupportShape::make_ball({0, 0, 0}, 0.5);
    std::mt19937_64 rng(24);
    std::uniform_real_distribution<double> U(0.0, 20.0);
    for (int i = 0; i < 20; ++i) {
        Vec3 k = U(rng) * fixtures::random_unit(rng);
        cd got = shape_integral(ball, SpatialProfile::constant, k);
        CHECK(std::abs(got - ball_transform(0.5, k.norm())) < 1e-12);
    }
    // volume at k = 0
    cd v = shape_integral(ball, SpatialProfile::constant, {0, 0, 0});
    CHECK(std::abs(v - 4.0 / 3.0 * pi * 0.125) < 1e-13);
}

TEST_CASE("spherical ellipsoid equals ball") {
    auto ball = SupportShape::make_ball({0.1, 0, -0.2}, 0.4);
    auto ell = SupportShape::make_ellipsoid({0.1, 0, -0.2}, {0.4, 0.4, 0.4});
    Vec3 k(3.0, -2.0, 5.0);
    for (auto prof : {SpatialProfile::constant, SpatialProfile::cosine_bump}) {
        cd a = shape_integral(ball, prof, k);
        cd b = shape_integral(ell, prof, k);
        CHECK(std::abs(a - b) < 1e-12 * std::max(1.0, std::abs(a)));
    }
}

TEST_CASE("cosine bump cube at k = 0") {
    auto cube = SupportShape::make_cube({0, 0, 0}, {0.5, 0.5, 0.5});
    cd got = shape_integral(cube, SpatialProfile::cosine_bump, {0, 0, 0});
    CHECK(std::abs(got - std::pow(2.0 / pi, 3)) < 1e-13);
}

TEST_CASE("quadrature order convergence on smooth profiles") {
    auto ell = SupportShape::make_ellipsoid({0, 0, 0}, {0.6, 0.4, 0.3});
    Vec3 k(7.0, 11.0, -4.0);
    cd c_lo = shape_integral(ell, SpatialProfile::constant, k, 24);
    cd c_hi = shape_integral(ell, SpatialProfile::constant, k, 64);
    CHECK(std::abs(c_lo - c_hi) < 1e-12);
    // the oscillatory bump integrand saturates around order 48
    cd b_mid = shape_integral(ell, SpatialProfile::cosine_bump, k, 32);
    cd b_near = shape_integral(ell, SpatialProfile::cosine_bump, k, 48);
    cd b_hi = shape_integral(ell, SpatialProfile::cosine_bump, k, 64);
    CHECK(std::abs(b_mid - b_hi) < 1e-8);
    CHECK(std::abs(b_near - b_hi) < 1e-12);
}

TEST_CASE("profile_value masks and shapes") {
    auto cube = SupportShape::make_cube({0, 0, 0}, {0.5, 0.5, 0.5});
    CHECK(profile_value(cube, SpatialProfile::constant, {0.2, 0, 0}) == 1.0);
    CHECK(profile_value(cube, SpatialProfile::constant, {0.6, 0, 0}) == 0.0);
    CHECK(profile_value(cube, SpatialProfile::cosine_bump, {0, 0, 0}) ==
          doctest::Approx(1.0));
    CHECK(profile_value(cube, SpatialProfile::cosine_bump, {0.5, 0, 0}) ==
          doctest::Approx(0.0).epsilon(1e-12));
    auto ball = SupportShape::make_ball({0, 0, 0}, 0.5);
    CHECK(profile_value(ball, SpatialProfile::constant, {0.4, 0.4, 0.4}) == 0.0);
}

TEST_CASE("wave speed scales the oscillation") {
    // eps = mu = 2 halves c, doubling the effective spatial frequency
    auto slow = fixtures::cube_source(0.0, 2.0, 2.0);
    auto fast = fixtures::cube_source(0.0);
    CVec3 a = farfield_ip1(slow, {0, 0, 1}, 1.3);
    CVec3 b = farfield_ip1(fast, {0, 0, 1}, 2.6);
    // shape integrals agree; prefactor i omega mu differs by 1.3*2 vs 2.6
    CHECK((a - b).norm() < 1e-12 * b.norm());
}

TEST_CASE("synthesize fills every slot with the forward model") {
    auto src = fixtures::cube_source(1.0);
    FrequencyGrid grid{2 * pi, 2};
    auto ds = synthesize_dataset(src, fixtures::z_pair(), grid);
    ds.validate();
    CHECK(ds.values.size() == 4);
    CHECK(std::abs(ds.at(0, 1)[0] - cd(0, -2)) < 1e-12);
    CHECK(std::abs(ds.at(0, 2)[0]) < 1e-13);

    auto src2 = fixtures::ellipsoid_source(0.4);
    FrequencyGrid g2{20.0, 7};
    auto ds2 = synthesize_dataset(src2, fixtures::z_pair(), g2);
    for (std::size_t f = 0; f < 2; ++f)
        for (int n = 1; n <= 7; ++n) {
            CVec3 direct = farfield(src2, ds2.frames[f].x_hat, g2.omega(n));
            CHECK((ds2.at(f, n) - direct).norm() < 1e-13);
        }
}

TEST_CASE("source validation") {
    auto src = fixtures::cube_source(0.0);
    src.eps = 0.0;
    CHECK_THROWS_AS(src.validate(), std::invalid_argument);

    src = fixtures::cube_source(0.0);
    src.polarization = Vec3(0, 0, 0);
    CHECK_THROWS_AS(src.validate(), std::invalid_argument);

    src = fixtures::window_cube_source(1.0, 1.0);
    CHECK_THROWS_AS(src.validate(), std::invalid_argument);

    src = fixtures::window_cube_source(0.0, 1.0);
    std::get<Window>(src.temporal).tau = {0.0, 0.0};
    CHECK_THROWS_AS(src.validate(), std::invalid_argument);

    src = fixtures::window_cube_source(0.0, 1.0);
    std::get<Window>(src.temporal).tau = {1.0};
    CHECK_THROWS_AS(src.validate(), std::invalid_argument);

    src = fixtures::window_cube_source(0.0, 1.0);
    std::get<Window>(src.temporal).tau = {1.0, -0.5, 1.0};
    CHECK_THROWS_AS(src.validate(), std::invalid_argument);

    CHECK_NOTHROW(fixtures::cube_source(0.0).validate());
    CHECK_NOTHROW(fixtures::window_cube_source(0.0, 1.0).validate());
}

} // TEST_SUITE
