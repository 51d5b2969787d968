// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "belyidet/flatdet.hpp"
#include "belyidet/specfun.hpp"

using namespace bdet;

namespace {

constexpr double kPi = std::numbers::pi;

FlatConfiguration three_point(double a, double b, double c, double area = 1.0) {
    FlatConfiguration cfg;
    cfg.finite_points = {0.0, 1.0};
    cfg.orders = {a, b};
    cfg.order_at_infinity = c;
    cfg.target_area = area;
    return cfg;
}

FlatConfiguration equianharmonic(double area) {
    FlatConfiguration cfg;
    cfg.finite_points = {0.0, 1.0, std::polar(1.0, kPi / 3)};
    cfg.orders = {-0.5, -0.5, -0.5};
    cfg.order_at_infinity = -0.5;
    cfg.target_area = area;
    return cfg;
}

// ln(4/3) - 3 ln Gamma(2/3) + (3/2) ln pi.
const double kTetrahedron = std::log(4.0 / 3) - 3 * std::lgamma(2.0 / 3) + 1.5 * std::log(kPi);

}  // namespace

TEST_CASE("three-point area against the Dotsenko-Fateev integral") {
    // pi gamma(1 + a) gamma(1 + b) gamma(-1 - a - b), gamma(x) = Gamma(x) / Gamma(1 - x), in mpmath.
    const struct {
        double a, b, area;
    } cases[] = {{-0.6, -0.7, 24.854413491259694405},
                 {-0.5, -2.0 / 3, 30.648694306995339211},
                 {-0.2, -0.9, 63.142783442241229372}};
    for (const auto& c : cases) {
        const auto cfg = three_point(c.a, c.b, -2.0 - c.a - c.b);
        CAPTURE(c.a);
        CHECK(std::fabs(metric_area(cfg, AreaMethod::Cuts) / c.area - 1) < 1e-12);
        CHECK(std::fabs(metric_area(cfg, AreaMethod::Plane2D, 1e-8) / c.area - 1) < 1e-8);
    }
}

TEST_CASE("cut and plane quadratures agree on a generic configuration") {
    FlatConfiguration cfg;
    cfg.finite_points = {{0.0, 0.0}, {1.0, 0.2}, {-0.4, 0.9}, {0.3, -1.1}};
    cfg.orders = {-0.3, -0.45, -0.25, -0.6};
    cfg.order_at_infinity = -0.4;
    const double cuts = metric_area(cfg, AreaMethod::Cuts);
    const double plane = metric_area(cfg, AreaMethod::Plane2D, 1e-9);
    CHECK(std::fabs(cuts / plane - 1) < 1e-8);
}

TEST_CASE("flat tetrahedron closed form") {
    const auto r = flat_log_det(equianharmonic(4 * kPi));
    CHECK(std::fabs(r.log_det - kTetrahedron) < 1e-10);
    CHECK(r.area == doctest::Approx(4 * kPi));
    CHECK(r.route == Route::FlatFormula);
}

TEST_CASE("rescaling follows zeta(0)") {
    const auto at3 = flat_log_det(equianharmonic(3.0));
    const auto up = rescale_log_det(at3, 4 * kPi);
    CHECK(std::fabs(up.log_det - kTetrahedron) < 1e-10);
    // Halving the area of a smooth sphere: zeta(0) = -2/3 gives +(2/3) ln(1/2).
    LogDetResult smooth;
    smooth.log_det = 0.0;
    smooth.area = 1.0;
    const auto half = rescale_log_det(smooth, 0.5);
    CHECK(std::fabs(half.log_det - 2.0 / 3 * std::log(0.5)) < 1e-15);
    CHECK_THROWS_AS(rescale_log_det(smooth, -1.0), InputError);
}

TEST_CASE("affine maps and relabelling leave the determinant unchanged") {
    auto cfg = equianharmonic(1.0);
    const double base = flat_log_det(cfg).log_det;
    const cplx a{1.3, -0.7}, b{-2.0, 0.5};
    for (auto& x : cfg.finite_points) x = a * x + b;
    CHECK(std::fabs(flat_log_det(cfg).log_det - base) < 1e-10);
    std::swap(cfg.finite_points[0], cfg.finite_points[2]);
    CHECK(std::fabs(flat_log_det(cfg).log_det - base) < 1e-10);
}

TEST_CASE("inversion moves infinity without changing the surface") {
    // x -> 1/x sends {0, 1, w, inf} to {inf, 1, 1/w, 0}.
    auto cfg = equianharmonic(1.0);
    const double base = flat_log_det(cfg).log_det;
    FlatConfiguration inv;
    inv.finite_points = {0.0, 1.0, 1.0 / cfg.finite_points[2]};
    inv.orders = {-0.5, -0.5, -0.5};
    inv.order_at_infinity = -0.5;
    CHECK(std::fabs(flat_log_det(inv).log_det - base) < 1e-10);
}

TEST_CASE("smooth points do not change the determinant") {
    auto cfg = three_point(-0.6, -0.7, -0.7);
    const double base = flat_log_det(cfg).log_det;
    cfg.finite_points.push_back({0.3, 0.8});
    cfg.orders.push_back(0.0);
    CHECK(std::fabs(flat_log_det(cfg).log_det - base) < 1e-11);
}

TEST_CASE("divisor round trip") {
    auto cfg = equianharmonic(5.0);
    const Divisor d = divisor_of(cfg);
    CHECK(d.size() == 4);
    CHECK(std::fabs(d.degree() + 2.0) < 1e-15);
    const auto back = configuration_from_divisor(d, 5.0);
    CHECK(back.finite_points.size() == 3);
    CHECK(back.order_at_infinity == -0.5);
    CHECK(std::fabs(flat_log_det(back).log_det - flat_log_det(cfg).log_det) < 1e-13);
}

TEST_CASE("configuration errors") {
    CHECK_THROWS_AS(check_configuration(three_point(-0.5, -0.5, -0.5)), InputError);  // sum -1.5
    CHECK_THROWS_AS(check_configuration(three_point(-1.0, -0.5, -0.5)), InputError);
    auto cfg = equianharmonic(1.0);
    cfg.finite_points[1] = cfg.finite_points[0];
    CHECK_THROWS_AS(check_configuration(cfg), InputError);
    cfg = equianharmonic(0.0);
    CHECK_THROWS_AS(check_configuration(cfg), InputError);
}

TEST_CASE("unit potential coefficients are consistent with the area") {
    const auto cfg = three_point(-0.5, -2.0 / 3, -5.0 / 6);
    const double S = 30.648694306995339211;
    const auto phi = flat_unit_phi(cfg, S);
    REQUIRE(phi.size() == 3);
    CHECK(std::fabs(phi[2] + 0.5 * std::log(S)) < 1e-15);
    CHECK(std::fabs(phi[0] - (-2.0 / 3 * std::log(1.0) - 0.5 * std::log(S))) < 1e-15);
    CHECK(std::fabs(phi[0] - psi(-0.5, -2.0 / 3, -5.0 / 6)) < 1e-11);
}
