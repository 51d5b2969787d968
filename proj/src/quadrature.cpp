// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#include "belyidet/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

namespace bdet {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kAngleNodes = 64;
constexpr int kJacobiNodes = 24;

double h_exp(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

// Smooth step: 1 for t <= 0, 0 for t >= 1.
double smooth_step(double t) {
    if (t <= 0.0) return 1.0;
    if (t >= 1.0) return 0.0;
    const double a = h_exp(1.0 - t), b = h_exp(t);
    return a / (a + b);
}

double adaptive(const std::function<double(double)>& f, double a, double b, double tol) {
    if (!(b > a)) return 0.0;
    double err = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 21>::integrate(f, a, b, 18, tol, &err);
}

// Adaptive Gauss-Kronrod with an absolute error target.
double adaptive_abs(const std::function<double(double)>& f, double a, double b, double abs_tol) {
    if (!(b > a)) return 0.0;
    struct Ws {
        gsl_integration_workspace* w;
        Ws() : w(gsl_integration_workspace_alloc(2000)) {}
        ~Ws() { gsl_integration_workspace_free(w); }
    } ws;
    gsl_function F;
    F.function = [](double x, void* p) { return (*static_cast<const std::function<double(double)>*>(p))(x); };
    F.params = const_cast<std::function<double(double)>*>(&f);
    double result = 0.0, err = 0.0;
    // GSL aborts on errors by default; statuses are checked here instead.
    static std::once_flag once;
    std::call_once(once, [] { gsl_set_error_handler_off(); });
    const int status = gsl_integration_qag(&F, a, b, abs_tol, 0.0, 2000, GSL_INTEG_GAUSS21, ws.w, &result, &err);
    if (status != 0 && err > 100.0 * abs_tol) {
        std::ostringstream os;
        os << "area quadrature did not converge (error estimate " << err << ")";
        throw std::runtime_error(os.str());
    }
    return result;
}

struct GslFixedDeleter {
    void operator()(gsl_integration_fixed_workspace* w) const { gsl_integration_fixed_free(w); }
};

// Integral over 0 < r < R of r^{2 beta + 1} bump(r) gbar(r) dr, where bump = 1 on [0, a].
double radial_integral(double beta, double a, double R, const std::function<double(double)>& gbar,
                       const std::function<double(double)>& bump, double tol) {
    // Inner disk: with s = r^2 the integrand is s^beta gbar(sqrt s) / 2 and
    // gbar is analytic in s.
    std::unique_ptr<gsl_integration_fixed_workspace, GslFixedDeleter> ws(
        gsl_integration_fixed_alloc(gsl_integration_fixed_jacobi, kJacobiNodes, 0.0, a * a, 0.0, beta));
    if (!ws) throw std::runtime_error("failed to allocate Gauss-Jacobi rule");
    const double* nodes = gsl_integration_fixed_nodes(ws.get());
    const double* weights = gsl_integration_fixed_weights(ws.get());
    double inner = 0.0;
    for (int i = 0; i < kJacobiNodes; ++i) inner += weights[i] * gbar(std::sqrt(nodes[i]));
    inner *= 0.5;

    auto annulus = [&](double r) { return std::pow(r, 2.0 * beta + 1.0) * bump(r) * gbar(r); };
    return inner + adaptive(annulus, a, R, tol);
}

double angle_average(const std::function<double(cplx)>& g, cplx center, double r) {
    double acc = 0.0;
    for (int j = 0; j < kAngleNodes; ++j) {
        const double th = kTwoPi * (j + 0.5) / kAngleNodes;
        acc += g(center + std::polar(r, th));
    }
    return acc * kTwoPi / kAngleNodes;
}

}  // namespace

double weighted_plane_area(const std::vector<cplx>& points_in, const std::vector<double>& orders_in,
                           double rel_tol) {
    if (points_in.size() != orders_in.size()) throw InputError("points and orders differ in length");
    std::vector<cplx> pts;
    std::vector<double> ord;
    double total = 0.0;
    for (std::size_t k = 0; k < points_in.size(); ++k) {
        if (!(orders_in[k] > -1.0)) {
            std::ostringstream os;
            os << "order " << orders_in[k] << " at " << describe(SpherePoint::at(points_in[k]))
               << " is not integrable (must exceed -1)";
            throw InputError(os.str());
        }
        total += orders_in[k];
        if (orders_in[k] == 0.0) continue;  // smooth points need no special treatment
        pts.push_back(points_in[k]);
        ord.push_back(orders_in[k]);
    }
    const double beta_inf = -2.0 - total;
    if (!(beta_inf > -1.0)) {
        std::ostringstream os;
        os << "implied order at infinity " << beta_inf << " is not integrable";
        throw InputError(os.str());
    }
    const std::size_t n = pts.size();

    // Disk radii from nearest-neighbour distances.
    std::vector<double> R(n), a(n);
    double extent = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        double nn = 1e300;
        for (std::size_t j = 0; j < n; ++j)
            if (j != k) nn = std::min(nn, std::abs(pts[k] - pts[j]));
        if (nn < 1e-9) throw InputError("coincident marked points in area quadrature");
        if (nn == 1e300) nn = 2.0 * std::max(1.0, std::abs(pts[k]));
        R[k] = 0.45 * nn;
        a[k] = 0.5 * R[k];
        extent = std::max(extent, std::abs(pts[k]) + R[k]);
    }
    if (extent == 0.0) extent = 1.0;
    const double R1 = 2.2 * extent, R2 = 4.4 * extent;

    auto weight = [&](cplx x) {
        double lw = 0.0;
        for (std::size_t j = 0; j < n; ++j) lw += 2.0 * ord[j] * std::log(std::abs(x - pts[j]));
        return std::exp(lw);
    };
    auto bump_k = [&](std::size_t k, double r) { return smooth_step((r - a[k]) / (R[k] - a[k])); };
    auto bump_inf = [&](double rx) { return 1.0 - smooth_step((rx - R1) / (R2 - R1)); };

    const double tol = rel_tol * 0.1;
    double area = 0.0;

    for (std::size_t k = 0; k < n; ++k) {
        auto g = [&, k](cplx x) {
            double lw = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) lw += 2.0 * ord[j] * std::log(std::abs(x - pts[j]));
            return std::exp(lw);
        };
        auto gbar = [&, k](double r) { return angle_average(g, pts[k], r); };
        auto bump = [&, k](double r) { return bump_k(k, r); };
        area += radial_integral(ord[k], a[k], R[k], gbar, bump, tol);
    }

    // Neighbourhood of infinity in the chart y = 1/x: the weight becomes
    // |y|^{2 beta_inf} prod |1 - x_k y|^{2 beta_k}.
    {
        auto g = [&](cplx y) {
            double lw = 0.0;
            for (std::size_t j = 0; j < n; ++j) lw += 2.0 * ord[j] * std::log(std::abs(1.0 - pts[j] * y));
            return std::exp(lw);
        };
        auto gbar = [&](double rho) { return angle_average(g, 0.0, rho); };
        auto bump = [&](double rho) { return bump_inf(1.0 / rho); };
        area += radial_integral(beta_inf, 1.0 / R2, 1.0 / R1, gbar, bump, tol);
    }

    // Smooth, compactly supported remainder.
    auto remainder = [&](cplx x) {
        double cover = bump_inf(std::abs(x));
        for (std::size_t k = 0; k < n; ++k) {
            const double r = std::abs(x - pts[k]);
            if (r <= a[k]) return 0.0;
            if (r < R[k]) cover += bump_k(k, r);
        }
        if (cover >= 1.0) return 0.0;
        return (1.0 - cover) * weight(x);
    };
    // Absolute targets scaled by the singular contributions already computed.
    const double abs_tol = rel_tol * 0.1 * area;
    auto row = [&](double X) {
        const double ymax = std::sqrt(std::max(0.0, R2 * R2 - X * X));
        return adaptive_abs([&](double Y) { return remainder(cplx(X, Y)); }, -ymax, ymax, abs_tol / (4.0 * R2));
    };
    area += adaptive_abs(row, -R2, R2, abs_tol);
    return area;
}

namespace {

// Integral of the branch g along the cut x_k + s u, s in (0, inf), taken on the
// side where arg((t - x_k)/u) -> 0+.
cplx ray_integral(const std::vector<cplx>& pts, const std::vector<double>& ord, std::size_t k, cplx u,
                  double beta_inf, double s1, double S2, double tol) {
    const std::size_t n = pts.size();
    // Product over j != k with arguments measured from the cut direction in [0, 2pi).
    auto others = [&](cplx t) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            cplx z = (t - pts[j]) / u;
            double th = std::atan2(z.imag(), z.real());
            if (th < 0.0) th += kTwoPi;
            acc += ord[j] * cplx(std::log(std::abs(z)), th);
        }
        return std::exp(acc);
    };
    cplx total = 0.0;

    // Near x_k: s^{beta_k} times an analytic factor.
    {
        std::unique_ptr<gsl_integration_fixed_workspace, GslFixedDeleter> ws(
            gsl_integration_fixed_alloc(gsl_integration_fixed_jacobi, 48, 0.0, 1.0, 0.0, ord[k]));
        const double* v = gsl_integration_fixed_nodes(ws.get());
        const double* w = gsl_integration_fixed_weights(ws.get());
        cplx acc = 0.0;
        for (int i = 0; i < 48; ++i) acc += w[i] * others(pts[k] + s1 * v[i] * u);
        total += acc * std::pow(s1, ord[k] + 1.0);
    }
    // Middle section.
    {
        auto part = [&](double s, bool imag) {
            cplx val = std::pow(s, ord[k]) * others(pts[k] + s * u);
            return imag ? val.imag() : val.real();
        };
        const double re = adaptive([&](double s) { return part(s, false); }, s1, S2, tol);
        const double im = adaptive([&](double s) { return part(s, true); }, s1, S2, tol);
        total += cplx(re, im);
    }
    // Tail with s = S2 / v: the integrand becomes S2^{-1-beta_inf} v^{beta_inf} times an analytic factor.
    {
        std::unique_ptr<gsl_integration_fixed_workspace, GslFixedDeleter> ws(
            gsl_integration_fixed_alloc(gsl_integration_fixed_jacobi, 48, 0.0, 1.0, 0.0, beta_inf));
        const double* v = gsl_integration_fixed_nodes(ws.get());
        const double* w = gsl_integration_fixed_weights(ws.get());
        cplx acc = 0.0;
        for (int i = 0; i < 48; ++i) {
            const double s = S2 / v[i];
            // Full integrand times ds/dv divided by the Jacobi weight v^{beta_inf}.
            acc += w[i] * std::pow(s, ord[k]) * others(pts[k] + s * u) * (S2 / (v[i] * v[i])) /
                   std::pow(v[i], beta_inf);
        }
        total += acc;
    }
    return total * u;
}

}  // namespace

double flat_area_by_cuts(const std::vector<cplx>& points_in, const std::vector<double>& orders_in) {
    if (points_in.size() != orders_in.size()) throw InputError("points and orders differ in length");
    std::vector<cplx> pts;
    std::vector<double> ord;
    double total = 0.0;
    for (std::size_t k = 0; k < points_in.size(); ++k) {
        if (!(orders_in[k] > -1.0)) {
            std::ostringstream os;
            os << "order " << orders_in[k] << " at " << describe(SpherePoint::at(points_in[k]))
               << " is not integrable (must exceed -1)";
            throw InputError(os.str());
        }
        total += orders_in[k];
        if (orders_in[k] == 0.0) continue;
        pts.push_back(points_in[k]);
        ord.push_back(orders_in[k]);
    }
    const double beta_inf = -2.0 - total;
    if (!(beta_inf > -1.0)) {
        std::ostringstream os;
        os << "implied order at infinity " << beta_inf << " is not integrable";
        throw InputError(os.str());
    }
    const std::size_t n = pts.size();
    if (n == 0) throw InputError("area is infinite: no singular points and order -2 at infinity");

    double nn = 1e300, diam = 0.0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const double dist = std::abs(pts[a] - pts[b]);
            nn = std::min(nn, dist);
            diam = std::max(diam, dist);
        }
    if (n == 1) nn = diam = 1.0;
    if (nn < 1e-9) throw InputError("coincident marked points in area computation");

    // Pick the cut direction that keeps every cut far from the other points.
    cplx u = 1.0;
    double best = -1.0;
    for (int i = 0; i < 720; ++i) {
        const cplx cand = std::polar(1.0, kTwoPi * (i + 0.31) / 720.0);
        double worst = 1e300;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                const cplx z = (pts[j] - pts[k]) / cand;
                worst = std::min(worst, z.real() > 0.0 ? std::fabs(z.imag()) : std::abs(z));
            }
        if (worst > best) {
            best = worst;
            u = cand;
        }
    }

    const double s1 = 0.5 * nn;
    const double S2 = std::max(4.0 * diam, 2.0 * s1);
    std::vector<cplx> G(n);
    for (std::size_t k = 0; k < n; ++k) G[k] = ray_integral(pts, ord, k, u, beta_inf, s1, S2, 1e-12);

    // Values of the developing map at the cone points, normalized by F = 0 at
    // infinity. Order cuts from right to left relative to u.
    std::vector<std::size_t> idx(n);
    for (std::size_t k = 0; k < n; ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return (pts[a] / u).imag() < (pts[b] / u).imag();
    });
    std::vector<cplx> F(n);
    auto omega = [&](std::size_t k) { return std::exp(cplx(0.0, kTwoPi * ord[k])); };
    F[idx[0]] = -omega(idx[0]) * G[idx[0]];
    for (std::size_t i = 0; i + 1 < n; ++i)
        F[idx[i + 1]] = F[idx[i]] + G[idx[i]] - omega(idx[i + 1]) * G[idx[i + 1]];
    const cplx closure = F[idx[n - 1]] + G[idx[n - 1]];

    cplx acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += std::conj(F[k]) * (1.0 - omega(k)) * G[k];
    const cplx area = acc / cplx(0.0, 2.0);
    const double scale = std::abs(area);
    if (std::abs(closure) > 1e-8 * std::sqrt(scale) || std::fabs(area.imag()) > 1e-8 * scale) {
        std::ostringstream os;
        os << "area by cuts failed its consistency checks (closure " << std::abs(closure) << ", imaginary part "
           << area.imag() << ")";
        throw ConsistencyError(os.str());
    }
    return area.real();
}

}  // namespace bdet
