// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "belyidet/specfun.hpp"

namespace bdet {

// Flat conical sphere: metric prod |x - x_k|^{2 beta_k} |dx|^2 scaled to target_area.
struct FlatConfiguration {
    std::vector<cplx> finite_points;
    std::vector<double> orders;
    double order_at_infinity = 0.0;
    double target_area = 1.0;
};

enum class Route {
    FlatFormula,
    TheoremMain,
    CyclicTheorem,
    DihedralTheorem,
    TetrahedralTheorem,
    OctahedralTheorem,
    IcosahedralTheorem,
    PlatonicFormula,
    Spindle,
    External,
};
std::string to_string(Route r);

struct LogDetResult {
    double log_det = 0.0;
    double area = 0.0;
    Divisor divisor;
    Route route = Route::FlatFormula;
};

enum class AreaMethod {
    Cuts,     // developing-map cuts (fast, near machine precision)
    Plane2D,  // partition-of-unity 2D quadrature (slow, independent)
};

// Throws InputError when orders are not integrable, do not sum to -2, or points collide.
void check_configuration(const FlatConfiguration& cfg);

Divisor divisor_of(const FlatConfiguration& cfg);

// A divisor with at most one point at infinity. Infinity gets order 0 when absent.
FlatConfiguration configuration_from_divisor(const Divisor& d, double target_area);

// Area of the unscaled metric prod |x - x_k|^{2 beta_k} |dx|^2.
double metric_area(const FlatConfiguration& cfg, AreaMethod method = AreaMethod::Cuts, double rel_tol = 1e-11);

// log(det / S) for the unscaled metric of area S (the pairwise-distance formula).
double flat_log_det_over_area(const FlatConfiguration& cfg);

// log det at cfg.target_area. When raw_area is given it replaces the area quadrature.
LogDetResult flat_log_det(const FlatConfiguration& cfg, std::optional<double> raw_area = std::nullopt,
                          AreaMethod method = AreaMethod::Cuts);

// log det' = log det - zeta0 ln(new_area / area).
LogDetResult rescale_log_det(const LogDetResult& r, double new_area);

// Coefficients phi_k of the unit-area flat potential: beta_k ln|x - x_k| + phi_k near a finite
// point and -(beta_inf + 2) ln|x| + phi_inf near infinity. Entries follow divisor_of(cfg).
std::vector<double> flat_unit_phi(const FlatConfiguration& cfg, std::optional<double> raw_area = std::nullopt);

}  // namespace bdet
