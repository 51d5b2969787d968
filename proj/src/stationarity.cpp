// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#include "belyidet/stationarity.hpp"

#include <cmath>
#include <sstream>

namespace bdet {

namespace {

double log_det_of(const FlatConfiguration& cfg) { return flat_log_det(cfg).log_det; }

double& order_ref(FlatConfiguration& cfg, std::size_t point) {
    return point == cfg.finite_points.size() ? cfg.order_at_infinity : cfg.orders[point];
}

}  // namespace

std::string ConfigurationPoint::label(std::size_t i) const {
    const auto& c = free.at(i);
    std::ostringstream os;
    const bool inf = c.point == cfg.finite_points.size();
    switch (c.kind) {
        case CoordKind::Re: os << "Re x" << c.point; break;
        case CoordKind::Im: os << "Im x" << c.point; break;
        case CoordKind::Order: os << "beta" << (inf ? std::string("inf") : std::to_string(c.point)); break;
    }
    return os.str();
}

ConfigurationPoint make_configuration_point(const FlatConfiguration& cfg) {
    ConfigurationPoint cp;
    cp.cfg.target_area = cfg.target_area;
    // Pulled-back orders of smooth points come out as tiny rounding residues.
    const auto smooth = [](double b) { return std::fabs(b) <= 1e-12; };
    cp.cfg.order_at_infinity = smooth(cfg.order_at_infinity) ? 0.0 : cfg.order_at_infinity;
    for (std::size_t k = 0; k < cfg.finite_points.size(); ++k)
        if (!smooth(cfg.orders[k])) {
            cp.cfg.finite_points.push_back(cfg.finite_points[k]);
            cp.cfg.orders.push_back(cfg.orders[k]);
        }
    check_configuration(cp.cfg);
    const std::size_t n = cp.cfg.finite_points.size();
    if (n < 2) throw InputError("stationarity needs at least two finite conical points");
    for (std::size_t k = 2; k < n; ++k) {
        cp.free.push_back({k, CoordKind::Re});
        cp.free.push_back({k, CoordKind::Im});
    }
    cp.compensator = 0;
    for (std::size_t k = 1; k < n; ++k) cp.free.push_back({k, CoordKind::Order});
    if (cp.cfg.order_at_infinity != 0.0) cp.free.push_back({n, CoordKind::Order});
    return cp;
}

FlatConfiguration perturbed(const ConfigurationPoint& cp, std::size_t i, double delta) {
    FlatConfiguration c = cp.cfg;
    const auto& fc = cp.free.at(i);
    switch (fc.kind) {
        case CoordKind::Re: c.finite_points[fc.point] += delta; break;
        case CoordKind::Im: c.finite_points[fc.point] += cplx(0.0, delta); break;
        case CoordKind::Order:
            order_ref(c, fc.point) += delta;
            order_ref(c, cp.compensator) -= delta;
            break;
    }
    const auto bad = [](double b) { return !(b > -1.0 && b < 0.0); };
    for (double b : c.orders)
        if (bad(b)) throw InputError("perturbation along " + cp.label(i) + " leaves the admissible orders (-1, 0)");
    if (cp.cfg.order_at_infinity != 0.0 && bad(c.order_at_infinity))
        throw InputError("perturbation along " + cp.label(i) + " leaves the admissible orders (-1, 0)");
    check_configuration(c);
    return c;
}

double central_difference(const ConfigurationPoint& cp, std::size_t i, double h) {
    return (log_det_of(perturbed(cp, i, h)) - log_det_of(perturbed(cp, i, -h))) / (2.0 * h);
}

std::vector<double> fd_gradient(const ConfigurationPoint& cp, double step) {
    if (!(step >= 1e-5 && step <= 1e-2)) throw InputError("finite-difference step must lie in [1e-5, 1e-2]");
    std::vector<double> g;
    g.reserve(cp.free.size());
    for (std::size_t i = 0; i < cp.free.size(); ++i) {
        const double d1 = central_difference(cp, i, step);
        const double d2 = central_difference(cp, i, step / 2.0);
        g.push_back((4.0 * d2 - d1) / 3.0);
    }
    return g;
}

double mobius_derivative(const FlatConfiguration& cfg, cplx a, cplx b, cplx c, double step) {
    if (c != 0.0 && cfg.order_at_infinity != 0.0)
        throw InputError("a field moving infinity needs infinity to be a smooth point");
    auto moved = [&](double t) {
        FlatConfiguration m = cfg;
        for (auto& x : m.finite_points) x += t * (a + b * x + c * x * x);
        return log_det_of(m);
    };
    const double d1 = (moved(step) - moved(-step)) / (2.0 * step);
    const double d2 = (moved(step / 2.0) - moved(-step / 2.0)) / step;
    return (4.0 * d2 - d1) / 3.0;
}

StationarityReport check_stationarity(const ConfigurationPoint& cp, double step, double tol) {
    StationarityReport r;
    r.point = cp;
    r.gradient = fd_gradient(cp, step);
    double s = 0.0;
    for (double v : r.gradient) s += v * v;
    r.gradient_norm = std::sqrt(s);
    r.tolerance = tol;
    r.pass = r.gradient_norm <= tol;
    return r;
}

StationarityReport check_platonic_stationarity(const SolidSpec& solid, double step, std::optional<double> tol) {
    if (solid.solid == Solid::Dihedron && (solid.ell < 3 || solid.ell > 6))
        throw InputError("stationarity covers dihedra with 3 to 6 vertices");
    const double t = tol ? *tol
                         : (solid.solid == Solid::Icosahedron || solid.solid == Solid::Dodecahedron ? 1e-3 : 1e-4);
    StationarityReport r = check_stationarity(make_configuration_point(platonic_flat_configuration(solid)), step, t);
    r.solid = solid;
    return r;
}

}  // namespace bdet
