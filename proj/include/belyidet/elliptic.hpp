// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#pragma once

#include <array>
#include <string>
#include <vector>

#include "belyidet/specfun.hpp"

namespace bdet {

// Theta constants and friends at tau, with q = exp(i pi tau).
struct ModularPoint {
    cplx tau;
    cplx q;
    cplx theta2, theta3, theta4;
    cplx eta;       // eta(tau)
    cplx eta_half;  // eta(tau / 2)
    cplx k;         // theta2^2 / theta3^2
    cplx K, Kprime;
    cplx lambda;    // (k + 1)^2 / (4 k)
};

// Requires Im tau > 0.05.
ModularPoint modular_data(cplx tau);

// Eisenstein series E2(tau).
cplx eisenstein_e2(cplx tau);

struct DetLambda {
    double route_eta = 0.0;      // sqrt(Im tau) |eta(tau/2)|^2
    double route_modulus = 0.0;  // from k and K
};
// Unit-area determinant of the flat sphere with four order -1/2 points at
// 0, 1, lambda(tau), infinity. Throws ConsistencyError when the routes differ
// by more than rel_tol relative.
DetLambda det_lambda(cplx tau, double rel_tol = 1e-10);

// Gradient of ln F(tau) = ln(sqrt(Im tau)|eta(tau/2)|^2) in (Re tau, Im tau).
std::array<double, 2> log_det_lambda_gradient(cplx tau);

struct FlatOracle {
    double log_det = 0.0;          // assembled from the area of |x|^-1|x-1|^-1|x-lambda|^-1
    double log_det_flatdet = 0.0;  // flat_log_det on {0, 1, lambda, inf} at unit area
    double area = 0.0;
};
FlatOracle det_lambda_flat_oracle(cplx lambda);

enum class StationaryKind { Maximum, Minimum, Saddle };
std::string to_string(StationaryKind k);

struct StationaryPoint {
    cplx tau;
    StationaryKind kind = StationaryKind::Saddle;
    double gradient_norm = 0.0;
    double log_det = 0.0;
    cplx lambda;
    std::array<double, 2> hessian_eigenvalues{};
    int iterations = 0;
};
// Simplex search on |grad ln F|^2, then a Newton-type polish on grad ln F = 0.
// Requires Im start > 0.5. Throws ConsistencyError when the gradient does not drop below 1e-8.
StationaryPoint find_stationary_tau(cplx start);

struct EllipticRow {
    double tau_re, tau_im, logdet;
};
// Rectangular grid, each axis given as start:stop:step.
std::vector<EllipticRow> elliptic_grid(const std::vector<double>& re, const std::vector<double>& im);

}  // namespace bdet
