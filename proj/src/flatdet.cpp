// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#include "belyidet/flatdet.hpp"

#include <cmath>
#include <sstream>

#include "belyidet/quadrature.hpp"

namespace bdet {

std::string to_string(Route r) {
    switch (r) {
        case Route::FlatFormula: return "flat-formula";
        case Route::TheoremMain: return "theorem-main";
        case Route::CyclicTheorem: return "cyclic-theorem";
        case Route::DihedralTheorem: return "dihedral-theorem";
        case Route::TetrahedralTheorem: return "tetrahedral-theorem";
        case Route::OctahedralTheorem: return "octahedral-theorem";
        case Route::IcosahedralTheorem: return "icosahedral-theorem";
        case Route::PlatonicFormula: return "platonic-formula";
        case Route::Spindle: return "spindle";
        case Route::External: return "external";
    }
    return "unknown";
}

void check_configuration(const FlatConfiguration& cfg) {
    if (cfg.finite_points.size() != cfg.orders.size())
        throw InputError("flat configuration: points and orders differ in length");
    if (!(cfg.target_area > 0.0) || !std::isfinite(cfg.target_area))
        throw InputError("flat configuration: target area must be positive");
    double sum = cfg.order_at_infinity;
    if (!(cfg.order_at_infinity > -1.0))
        throw InputError("flat configuration: order at infinity must exceed -1");
    for (std::size_t k = 0; k < cfg.orders.size(); ++k) {
        if (!(cfg.orders[k] > -1.0)) {
            std::ostringstream os;
            os << "flat configuration: order " << cfg.orders[k] << " at "
               << describe(SpherePoint::at(cfg.finite_points[k])) << " must exceed -1";
            throw InputError(os.str());
        }
        if (!std::isfinite(cfg.finite_points[k].real()) || !std::isfinite(cfg.finite_points[k].imag()))
            throw InputError("flat configuration: non-finite point");
        sum += cfg.orders[k];
        for (std::size_t j = 0; j < k; ++j)
            if (std::abs(cfg.finite_points[k] - cfg.finite_points[j]) <= 1e-9) {
                std::ostringstream os;
                os << "flat configuration: points " << describe(SpherePoint::at(cfg.finite_points[j])) << " and "
                   << describe(SpherePoint::at(cfg.finite_points[k])) << " coincide";
                throw InputError(os.str());
            }
    }
    const double tol = 1e-12 * std::max<double>(1.0, static_cast<double>(cfg.orders.size()));
    if (std::fabs(sum + 2.0) > tol) {
        std::ostringstream os;
        os.precision(15);
        os << "flat configuration: orders sum to " << sum << ", a flat sphere needs -2";
        throw InputError(os.str());
    }
}

Divisor divisor_of(const FlatConfiguration& cfg) {
    Divisor d;
    for (std::size_t k = 0; k < cfg.finite_points.size(); ++k) {
        d.points.push_back(SpherePoint::at(cfg.finite_points[k]));
        d.orders.push_back(cfg.orders[k]);
    }
    d.points.push_back(SpherePoint::infinity());
    d.orders.push_back(cfg.order_at_infinity);
    return d;
}

FlatConfiguration configuration_from_divisor(const Divisor& d, double target_area) {
    FlatConfiguration cfg;
    cfg.target_area = target_area;
    bool seen_inf = false;
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (d.points[k].inf) {
            if (seen_inf) throw InputError("divisor has two points at infinity");
            seen_inf = true;
            cfg.order_at_infinity = d.orders[k];
        } else {
            cfg.finite_points.push_back(d.points[k].z);
            cfg.orders.push_back(d.orders[k]);
        }
    }
    return cfg;
}

double metric_area(const FlatConfiguration& cfg, AreaMethod method, double rel_tol) {
    check_configuration(cfg);
    if (method == AreaMethod::Plane2D) return weighted_plane_area(cfg.finite_points, cfg.orders, rel_tol);
    return flat_area_by_cuts(cfg.finite_points, cfg.orders);
}

double flat_log_det_over_area(const FlatConfiguration& cfg) {
    check_configuration(cfg);
    const auto& x = cfg.finite_points;
    const auto& b = cfg.orders;
    double pair = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k)
        for (std::size_t l = 0; l < x.size(); ++l)
            if (k != l) pair += b[k] * b[l] / (b[k] + 1.0) * std::log(std::abs(x[k] - x[l]));
    double cc = calC(cfg.order_at_infinity);
    for (double bk : b) cc += calC(bk);
    return pair / 6.0 - cc + big_c();
}

LogDetResult flat_log_det(const FlatConfiguration& cfg, std::optional<double> raw_area, AreaMethod method) {
    const double S = raw_area ? *raw_area : metric_area(cfg, method);
    if (!(S > 0.0) || !std::isfinite(S)) throw InputError("flat configuration: area must be positive and finite");
    LogDetResult r;
    r.log_det = flat_log_det_over_area(cfg) + std::log(S);
    r.area = S;
    r.divisor = divisor_of(cfg);
    r.route = Route::FlatFormula;
    return rescale_log_det(r, cfg.target_area);
}

LogDetResult rescale_log_det(const LogDetResult& r, double new_area) {
    if (!(r.area > 0.0) || !(new_area > 0.0)) throw InputError("rescaling needs positive areas");
    LogDetResult out = r;
    out.log_det = r.log_det - zeta0(r.divisor) * std::log(new_area / r.area);
    out.area = new_area;
    return out;
}

std::vector<double> flat_unit_phi(const FlatConfiguration& cfg, std::optional<double> raw_area) {
    const double S = raw_area ? *raw_area : metric_area(cfg);
    const double shift = -0.5 * std::log(S);
    std::vector<double> phi;
    const auto& x = cfg.finite_points;
    for (std::size_t k = 0; k < x.size(); ++k) {
        double v = shift;
        for (std::size_t l = 0; l < x.size(); ++l)
            if (l != k) v += cfg.orders[l] * std::log(std::abs(x[k] - x[l]));
        phi.push_back(v);
    }
    phi.push_back(shift);
    return phi;
}

}  // namespace bdet
