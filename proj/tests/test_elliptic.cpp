// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "belyidet/elliptic.hpp"

using namespace bdet;

namespace {

constexpr double kPi = std::numbers::pi;
// Gamma(1/4) / (2 pi^(3/4)).
constexpr double kEtaI = 0.768225422326056659;
// sqrt(2) |eta(i)|^2 and sqrt(3) Gamma(1/3)^3 / (4 pi^2).
constexpr double kDetSaddle = 0.83462684167407318628;
constexpr double kDetMax = 0.84350786929685364848;

}  // namespace

TEST_CASE("theta constants and eta") {
    const ModularPoint m = modular_data({0.0, 1.0});
    CHECK(std::abs(m.eta - kEtaI) < 1e-15);
    CHECK(std::abs(m.K - m.Kprime) < 1e-14);
    for (cplx tau : {cplx{0.0, 1.0}, cplx{0.3, 0.8}, cplx{-0.45, 2.5}, cplx{1.2, 0.1}}) {
        CAPTURE(tau);
        const ModularPoint p = modular_data(tau);
        const cplx jacobi = std::pow(p.theta3, 4) - std::pow(p.theta2, 4) - std::pow(p.theta4, 4);
        CHECK(std::abs(jacobi) < 1e-12 * std::abs(std::pow(p.theta3, 4)));
        // 2 eta(tau)^3 = theta2 theta3 theta4.
        CHECK(std::abs(2.0 * std::pow(p.eta, 3) - p.theta2 * p.theta3 * p.theta4) < 1e-12 * std::abs(std::pow(p.eta, 3)));
        CHECK(std::abs(p.lambda - (p.k + 1.0) * (p.k + 1.0) / (4.0 * p.k)) < 1e-12 * std::abs(p.lambda));
    }
    CHECK_THROWS_AS(modular_data({0.0, 0.01}), InputError);
}

TEST_CASE("E2 is the logarithmic derivative of eta") {
    const cplx tau{0.2, 0.9};
    const double h = 1e-5;
    const cplx dlog = (std::log(modular_data(tau + cplx(0, h)).eta) - std::log(modular_data(tau - cplx(0, h)).eta)) /
                      cplx(0, 2 * h);
    const cplx expected = cplx(0, kPi / 12) * eisenstein_e2(tau);
    CHECK(std::abs(dlog - expected) < 1e-8);
}

TEST_CASE("eta and modulus routes on a 100-point grid") {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            const cplx tau{-1.0 + 0.2 * i, 0.3 + 0.3 * j};
            const DetLambda d = det_lambda(tau);
            worst = std::max(worst, std::fabs(d.route_modulus / d.route_eta - 1));
        }
    CHECK(worst <= 1e-10);
}

TEST_CASE("flat oracle") {
    for (cplx tau : {cplx{0.0, 1.0}, cplx{0.3, 1.4}, cplx{-0.6, 0.9}, cplx{1.0, std::sqrt(3.0)}}) {
        CAPTURE(tau);
        const ModularPoint m = modular_data(tau);
        const FlatOracle o = det_lambda_flat_oracle(m.lambda);
        const double ln_f = std::log(det_lambda(tau).route_eta);
        CHECK(std::fabs(o.log_det - ln_f) <= 1e-4);
        CHECK(std::fabs(o.log_det_flatdet - ln_f) <= 1e-4);
    }
}

TEST_CASE("closed values at the special points") {
    CHECK(std::fabs(det_lambda({0.0, 2.0}).route_eta - kDetSaddle) < 1e-13);
    CHECK(std::fabs(det_lambda({1.0, std::sqrt(3.0)}).route_eta - kDetMax) < 1e-13);
}

TEST_CASE("the determinant depends only on the cross-ratio orbit") {
    const cplx l{0.3, 0.7};
    const double base = det_lambda_flat_oracle(l).log_det;
    for (cplx m : {1.0 - l, 1.0 / l, 1.0 / (1.0 - l), l / (l - 1.0), (l - 1.0) / l})
        CHECK(std::fabs(det_lambda_flat_oracle(m).log_det - base) < 1e-9);
}

TEST_CASE("gradient against finite differences") {
    const cplx tau{0.35, 1.2};
    const auto g = log_det_lambda_gradient(tau);
    const double h = 1e-5;
    auto f = [](cplx t) { return std::log(det_lambda(t).route_eta); };
    CHECK(std::fabs(g[0] - (f(tau + h) - f(tau - h)) / (2 * h)) < 1e-8);
    CHECK(std::fabs(g[1] - (f(tau + cplx(0, h)) - f(tau - cplx(0, h))) / (2 * h)) < 1e-8);
}

TEST_CASE("stationary points") {
    const StationaryPoint saddle = find_stationary_tau({0.1, 2.1});
    CHECK(std::abs(saddle.tau - cplx(0.0, 2.0)) < 1e-8);
    CHECK(saddle.kind == StationaryKind::Saddle);
    CHECK(saddle.gradient_norm <= 1e-8);
    CHECK(std::fabs(std::exp(saddle.log_det) - kDetSaddle) < 1e-12);
    CHECK(std::abs(saddle.lambda - 2.0) < 1e-8);

    const StationaryPoint top = find_stationary_tau({0.9, 1.8});
    CHECK(std::abs(top.tau - cplx(1.0, std::sqrt(3.0))) < 1e-8);
    CHECK(top.kind == StationaryKind::Maximum);
    CHECK(top.gradient_norm <= 1e-8);
    CHECK(std::fabs(std::exp(top.log_det) - kDetMax) < 1e-12);
    CHECK(top.hessian_eigenvalues[0] < 0);
    CHECK(top.hessian_eigenvalues[1] < 0);

    CHECK_THROWS_AS(find_stationary_tau({0.0, 0.2}), InputError);
}

TEST_CASE("grid rows") {
    const auto rows = elliptic_grid({-0.5, 0.0, 0.5}, {1.0, 2.0});
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].tau_re == -0.5);
    CHECK(rows[0].tau_im == 1.0);
    int hits = 0;
    for (const auto& r : rows)
        if (r.tau_re == 0.0 && r.tau_im == 2.0) {
            CHECK(std::fabs(r.logdet - std::log(kDetSaddle)) < 1e-12);
            ++hits;
        }
    CHECK(hits == 1);
}
