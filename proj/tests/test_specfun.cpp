// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "belyidet/flatdet.hpp"
#include "belyidet/specfun.hpp"

using namespace bdet;

namespace {
constexpr double kZetaPrimeM1 = -0.16542114370045092921;  // mpmath, 25 digits
}

TEST_CASE("Hurwitz zeta against mpmath") {
    CHECK(static_cast<double>(hurwitz_zeta(2.0L, 1.0L)) == doctest::Approx(std::numbers::pi * std::numbers::pi / 6).epsilon(1e-14));
    CHECK(std::fabs(static_cast<double>(hurwitz_zeta(-0.5L, 0.3L)) - 0.09335881508491532050) < 1e-13);
    CHECK(std::fabs(static_cast<double>(hurwitz_zeta(1.5L, 2.25L)) - 1.49751360766666803603) < 1e-13);
    CHECK(std::fabs(static_cast<double>(hurwitz_zeta_deriv(-1.0L, 0.7L)) - (-0.02909142058488840122)) < 1e-13);
}

TEST_CASE("Lerch formula for the derivative at s = 0") {
    for (double a : {0.1, 0.5, 0.7, 1.0, 2.3}) {
        const double lhs = static_cast<double>(hurwitz_zeta_deriv(0.0L, a));
        const double rhs = std::lgamma(a) - 0.5 * std::log(2 * std::numbers::pi);
        CHECK(std::fabs(lhs - rhs) < 1e-13);
    }
}

TEST_CASE("Gamma and digamma") {
    CHECK(std::fabs(static_cast<double>(digamma(0.3L)) - (-3.502524222200133125)) < 1e-13);
    CHECK(std::fabs(static_cast<double>(digamma(1.0L)) + 0.57721566490153286061) < 1e-14);
    CHECK(std::fabs(static_cast<double>(log_abs_gamma(-2.5L)) - (-0.05624371649767405067)) < 1e-13);
    CHECK(gamma_sign(-2.5L) == -1);
    CHECK(gamma_sign(-1.5L) == 1);
    CHECK(gamma_sign(0.5L) == 1);
}

TEST_CASE("special constants") {
    CHECK(std::fabs(zeta_r_prime_m1() - kZetaPrimeM1) < 1e-14);
    const double C = 1.0 / 6 - 4.0 / 3 * std::log(2.0) - 4 * kZetaPrimeM1 - std::log(std::numbers::pi);
    CHECK(std::fabs(big_c() - C) < 1e-12);
    const auto sc = special_constants();
    CHECK(sc.bigC == big_c());
    CHECK(sc.zetaR_prime_m1 == zeta_r_prime_m1());
}

TEST_CASE("double zeta at a = 1 reduces to the Riemann zeta") {
    CHECK(std::fabs(static_cast<double>(barnes_zeta_deriv0(1.0L)) - kZetaPrimeM1) < 1e-12);
}

TEST_CASE("calC reference values") {
    CHECK(std::fabs(calC(0.0)) < 1e-11);
    CHECK(std::fabs(calC(-0.5) - (-kZetaPrimeM1 - std::log(2.0) / 6 + 1.0 / 24)) < 1e-11);
    // Frozen from an independent 30-digit evaluation of the double zeta sum.
    CHECK(std::fabs(calC(-0.1) - 0.0014414015792708531018) < 1e-11);
    CHECK_THROWS_AS(calC(-1.0), InputError);
}

TEST_CASE("calC is smooth across orders") {
    // Second differences at two step sizes agree, so no branch switch inside
    // the evaluation produces a jump.
    auto d2 = [](double b, double h) { return (calC(b + h) - 2 * calC(b) + calC(b - h)) / (h * h); };
    for (double b = -0.9; b < 1.0; b += 0.05) {
        const double coarse = d2(b, 2e-3), fine = d2(b, 1e-3);
        CHECK(std::isfinite(fine));
        CHECK(std::fabs(coarse - fine) < 1e-2 * std::max(1.0, std::fabs(fine)));
    }
}

TEST_CASE("zeta(0) bookkeeping") {
    // Smooth sphere: zeta(0) = 1/3 - 1 = -2/3 with the kernel removed.
    CHECK(std::fabs(zeta0(std::vector<double>{}) - (2.0 / 6 - 1)) < 1e-15);
    CHECK(std::fabs(zeta0(std::vector<double>{0.0, 0.0}) - zeta0(std::vector<double>{})) < 1e-15);
    // Four order -1/2 points.
    const double z = zeta0(std::vector<double>{-0.5, -0.5, -0.5, -0.5});
    CHECK(std::fabs(z - (0.0 - 4 * (0.5 - 2.0) / 12 - 1)) < 1e-15);
    CHECK_THROWS_AS(zeta0(std::vector<double>{-1.0}), InputError);
}

TEST_CASE("Psi matches the flat metric potential from quadrature") {
    const double triples[][3] = {{-0.6, -0.7, -0.7}, {-0.5, -0.6666666666666666, -0.8333333333333334},
                                 {-0.2, -0.9, -0.9}};
    for (const auto& t : triples) {
        FlatConfiguration cfg;
        cfg.finite_points = {0.0, 1.0};
        cfg.orders = {t[0], t[1]};
        cfg.order_at_infinity = t[2];
        const double area = metric_area(cfg, AreaMethod::Plane2D, 1e-8);
        const auto phi = flat_unit_phi(cfg, area);
        CHECK(std::fabs(psi(t[0], t[1], t[2]) - phi[0]) < 1e-6);
        CHECK(std::fabs(psi(t[1], t[0], t[2]) - phi[1]) < 1e-6);
        CHECK(std::fabs(psi(t[2], t[1], t[0]) - phi[2]) < 1e-6);
    }
}

TEST_CASE("Psi domain errors") {
    CHECK_THROWS_AS(psi(-1.0, -0.5, -0.5), InputError);
    CHECK_THROWS_AS(psi(0.0, 0.0, 0.0), InputError);
    // beta_j - |beta|/2 <= 0 at the first order.
    CHECK_THROWS_AS(psi(-0.2, 0.5, -0.2), InputError);
}

TEST_CASE("triangle existence") {
    CHECK(TriangleDivisor{-0.5, -0.5, -0.5}.exists());
    CHECK_FALSE(TriangleDivisor{0.5, -0.2, -0.2}.exists());
    CHECK(TriangleDivisor{-0.2, -0.3, -0.4}.get(2) == -0.4);
}
