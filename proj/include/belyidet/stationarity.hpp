// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "belyidet/flatdet.hpp"
#include "belyidet/maindet.hpp"

namespace bdet {

enum class CoordKind { Re, Im, Order };

struct FreeCoordinate {
    std::size_t point;  // index into cfg.finite_points, or finite_points.size() for infinity
    CoordKind kind;
};

// A flat configuration with its gauge. Infinity and the first two finite points
// are pinned; an order change at a point is absorbed by the order of `compensator`
// so that the total stays -2.
struct ConfigurationPoint {
    FlatConfiguration cfg;
    std::vector<FreeCoordinate> free;
    std::size_t compensator = 0;

    std::string label(std::size_t i) const;
};

// Drops order-zero finite points and sets up the gauge.
ConfigurationPoint make_configuration_point(const FlatConfiguration& cfg);

// cfg moved by delta along free coordinate i. Throws InputError when the result
// leaves the admissible region (orders in (-1, 0), distinct points).
FlatConfiguration perturbed(const ConfigurationPoint& cp, std::size_t i, double delta);

// Plain central difference of flat_log_det along coordinate i.
double central_difference(const ConfigurationPoint& cp, std::size_t i, double h);

// Richardson-extrapolated central differences, (4 D(h/2) - D(h)) / 3, for every
// free coordinate. step must lie in [1e-5, 1e-2].
std::vector<double> fd_gradient(const ConfigurationPoint& cp, double step);

// Derivative of flat_log_det when every point moves along the vector field
// a + b x + c x^2. Needs c = 0 when infinity carries a nonzero order.
double mobius_derivative(const FlatConfiguration& cfg, cplx a, cplx b, cplx c, double step = 1e-3);

struct StationarityReport {
    SolidSpec solid;
    ConfigurationPoint point;
    std::vector<double> gradient;
    double gradient_norm = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

StationarityReport check_stationarity(const ConfigurationPoint& cp, double step, double tol);

// Canonical flat configuration of the solid from its catalog map.
// Default tolerance: 1e-4, or 1e-3 for the icosahedron and dodecahedron.
StationarityReport check_platonic_stationarity(const SolidSpec& solid, double step = 1e-3,
                                               std::optional<double> tol = std::nullopt);

}  // namespace bdet
