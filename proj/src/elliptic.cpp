// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#include "belyidet/elliptic.hpp"

#include <gsl/gsl_multimin.h>
#include <gsl/gsl_multiroots.h>
#include <gsl/gsl_vector.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "belyidet/flatdet.hpp"

namespace bdet {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

// Number of terms after which |q|^n n < 1e-17.
int series_terms(double absq) {
    int n = 1;
    while (std::pow(absq, n) * n >= 1e-17) ++n;
    return n;
}

// prod_{n>=1} (1 - x^n) through the pentagonal number theorem.
cplx euler_product(cplx x) {
    const int N = series_terms(std::abs(x));
    cplx sum = 1.0;
    for (int k = 1;; ++k) {
        const int e1 = k * (3 * k - 1) / 2;
        if (e1 > N) break;
        const double sign = k % 2 ? -1.0 : 1.0;
        sum += sign * (std::pow(x, e1) + std::pow(x, e1 + k));
    }
    return sum;
}

void check_tau(cplx tau) {
    if (!(tau.imag() > 0.05) || !std::isfinite(tau.real())) {
        std::ostringstream os;
        os << "tau must have Im tau > 0.05; got " << tau.real() << (tau.imag() < 0 ? " - " : " + ")
           << std::fabs(tau.imag()) << "i";
        throw InputError(os.str());
    }
}

// ln F(tau) = ln sqrt(Im tau) + 2 ln|eta(tau/2)|.
double log_F(cplx tau) {
    const ModularPoint mp = modular_data(tau);
    return 0.5 * std::log(tau.imag()) + 2.0 * std::log(std::abs(mp.eta_half));
}

}  // namespace

cplx eisenstein_e2(cplx tau) {
    check_tau(2.0 * tau);
    const cplx x = std::exp(2.0 * kPi * kI * tau);
    const int N = series_terms(std::abs(x));
    cplx s = 0;
    cplx xn = 1.0;
    for (int n = 1; n <= N; ++n) {
        xn *= x;
        s += static_cast<double>(n) * xn / (1.0 - xn);
    }
    return 1.0 - 24.0 * s;
}

ModularPoint modular_data(cplx tau) {
    check_tau(tau);
    ModularPoint m;
    m.tau = tau;
    m.q = std::exp(kI * kPi * tau);
    const int N = series_terms(std::abs(m.q));
    cplx t2 = 0, t3 = 1.0, t4 = 1.0;
    for (int n = 0;; ++n) {
        const double e = static_cast<double>(n) * (n + 1);
        if (e > N && n > 0) break;
        t2 += std::pow(m.q, e);
    }
    for (int n = 1; n * n <= N; ++n) {
        const cplx qn = std::pow(m.q, static_cast<double>(n * n));
        t3 += 2.0 * qn;
        t4 += (n % 2 ? -2.0 : 2.0) * qn;
    }
    m.theta2 = 2.0 * std::exp(kI * kPi * tau / 4.0) * t2;
    m.theta3 = t3;
    m.theta4 = t4;
    m.eta = std::exp(kI * kPi * tau / 12.0) * euler_product(m.q * m.q);
    m.eta_half = std::exp(kI * kPi * tau / 24.0) * euler_product(m.q);
    m.k = m.theta2 * m.theta2 / (m.theta3 * m.theta3);
    m.K = 0.5 * kPi * m.theta3 * m.theta3;
    m.Kprime = -kI * tau * m.K;
    m.lambda = (m.k + 1.0) * (m.k + 1.0) / (4.0 * m.k);
    return m;
}

DetLambda det_lambda(cplx tau, double rel_tol) {
    const ModularPoint m = modular_data(tau);
    DetLambda d;
    const double sy = std::sqrt(tau.imag());
    d.route_eta = sy * std::norm(m.eta_half);
    d.route_modulus = std::pow(2.0, 2.0 / 3.0) / kPi * std::cbrt(std::abs(1.0 - m.k * m.k)) *
                      std::pow(std::abs(m.k), 1.0 / 6.0) * sy * std::abs(m.K);
    if (std::fabs(d.route_eta - d.route_modulus) > rel_tol * d.route_eta) {
        std::ostringstream os;
        os.precision(15);
        os << "eta and modulus routes disagree at tau = " << tau.real() << " + " << tau.imag() << "i: " << d.route_eta
           << " vs " << d.route_modulus;
        throw ConsistencyError(os.str());
    }
    return d;
}

std::array<double, 2> log_det_lambda_gradient(cplx tau) {
    check_tau(tau);
    // d/dtau ln eta(tau/2) = (1/2)(pi i / 12) E2(tau/2)
    const cplx hp = 0.5 * (kPi * kI / 12.0) * eisenstein_e2(tau / 2.0);
    return {2.0 * hp.real(), -2.0 * hp.imag() + 0.5 / tau.imag()};
}

FlatOracle det_lambda_flat_oracle(cplx lambda) {
    if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()))
        throw InputError("lambda must be finite");
    if (std::abs(lambda) <= 1e-9 || std::abs(lambda - 1.0) <= 1e-9)
        throw InputError("lambda must differ from 0 and 1");
    FlatConfiguration cfg;
    cfg.finite_points = {0.0, 1.0, lambda};
    cfg.orders = {-0.5, -0.5, -0.5};
    cfg.order_at_infinity = -0.5;
    cfg.target_area = 1.0;
    FlatOracle o;
    o.area = metric_area(cfg);
    o.log_det = 0.5 * std::log(o.area) + (std::log(std::abs(lambda)) + std::log(std::abs(lambda - 1.0))) / 6.0 -
                4.0 * calC(-0.5) + big_c();
    o.log_det_flatdet = flat_log_det(cfg, o.area).log_det;
    return o;
}

std::string to_string(StationaryKind k) {
    switch (k) {
        case StationaryKind::Maximum: return "maximum";
        case StationaryKind::Minimum: return "minimum";
        case StationaryKind::Saddle: return "saddle";
    }
    return "unknown";
}

namespace {

double grad_sq(const gsl_vector* v, void*) {
    const double y = gsl_vector_get(v, 1);
    if (!(y > 0.06)) return 1e300;
    const auto g = log_det_lambda_gradient({gsl_vector_get(v, 0), y});
    return g[0] * g[0] + g[1] * g[1];
}

int grad_root(const gsl_vector* v, void*, gsl_vector* f) {
    const double y = gsl_vector_get(v, 1);
    if (!(y > 0.06)) return GSL_EDOM;
    const auto g = log_det_lambda_gradient({gsl_vector_get(v, 0), y});
    gsl_vector_set(f, 0, g[0]);
    gsl_vector_set(f, 1, g[1]);
    return GSL_SUCCESS;
}

}  // namespace

StationaryPoint find_stationary_tau(cplx start) {
    if (!(start.imag() > 0.5)) throw InputError("stationary search needs Im start > 0.5");
    StationaryPoint sp;

    gsl_vector* x = gsl_vector_alloc(2);
    gsl_vector* step = gsl_vector_alloc(2);
    gsl_vector_set(x, 0, start.real());
    gsl_vector_set(x, 1, start.imag());
    gsl_vector_set_all(step, 0.05);
    gsl_multimin_function fn{&grad_sq, 2, nullptr};
    gsl_multimin_fminimizer* mm = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 2);
    gsl_multimin_fminimizer_set(mm, &fn, x, step);
    int it = 0;
    for (; it < 4000; ++it) {
        if (gsl_multimin_fminimizer_iterate(mm) != GSL_SUCCESS) break;
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(mm), 1e-12) == GSL_SUCCESS) break;
    }
    cplx tau{gsl_vector_get(mm->x, 0), gsl_vector_get(mm->x, 1)};
    gsl_multimin_fminimizer_free(mm);

    // Polish with a hybrid Newton solve on the gradient.
    gsl_vector_set(x, 0, tau.real());
    gsl_vector_set(x, 1, tau.imag());
    gsl_multiroot_function rf{&grad_root, 2, nullptr};
    gsl_multiroot_fsolver* rs = gsl_multiroot_fsolver_alloc(gsl_multiroot_fsolver_hybrids, 2);
    if (gsl_multiroot_fsolver_set(rs, &rf, x) == GSL_SUCCESS) {
        for (int j = 0; j < 100; ++j, ++it) {
            if (gsl_multiroot_fsolver_iterate(rs) != GSL_SUCCESS) break;
            if (gsl_multiroot_test_residual(rs->f, 1e-14) == GSL_SUCCESS) break;
        }
        const cplx polished{gsl_vector_get(rs->x, 0), gsl_vector_get(rs->x, 1)};
        if (polished.imag() > 0.06 && std::abs(polished - tau) < 0.1) tau = polished;
    }
    gsl_multiroot_fsolver_free(rs);
    gsl_vector_free(x);
    gsl_vector_free(step);

    const auto g = log_det_lambda_gradient(tau);
    sp.tau = tau;
    sp.iterations = it;
    sp.gradient_norm = std::hypot(g[0], g[1]);
    if (!(sp.gradient_norm <= 1e-8)) {
        std::ostringstream os;
        os << "stationary search from " << start.real() << " + " << start.imag()
           << "i did not converge; gradient norm " << sp.gradient_norm;
        throw ConsistencyError(os.str());
    }
    sp.log_det = log_F(tau);
    sp.lambda = modular_data(tau).lambda;

    // Hessian by central differences of the analytic gradient.
    const double h = 1e-5;
    const auto gxp = log_det_lambda_gradient(tau + h), gxm = log_det_lambda_gradient(tau - h);
    const auto gyp = log_det_lambda_gradient(tau + kI * h), gym = log_det_lambda_gradient(tau - kI * h);
    const double hxx = (gxp[0] - gxm[0]) / (2 * h);
    const double hyy = (gyp[1] - gym[1]) / (2 * h);
    const double hxy = 0.25 * ((gxp[1] - gxm[1]) + (gyp[0] - gym[0])) / h;
    const double tr = hxx + hyy, det = hxx * hyy - hxy * hxy;
    const double disc = std::sqrt(std::max(0.0, 0.25 * tr * tr - det));
    sp.hessian_eigenvalues = {0.5 * tr - disc, 0.5 * tr + disc};
    if (det < 0) sp.kind = StationaryKind::Saddle;
    else sp.kind = tr < 0 ? StationaryKind::Maximum : StationaryKind::Minimum;
    return sp;
}

std::vector<EllipticRow> elliptic_grid(const std::vector<double>& re, const std::vector<double>& im) {
    std::vector<EllipticRow> rows;
    rows.reserve(re.size() * im.size());
    for (double y : im)
        for (double xr : re) rows.push_back({xr, y, std::log(det_lambda({xr, y}).route_eta)});
    return rows;
}

}  // namespace bdet
