// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#pragma once

#include <vector>

#include "belyidet/belyi.hpp"
#include "belyidet/flatdet.hpp"

namespace bdet {

// Near a finite point T = s/(2 (x - x_k)^2) + h/(x - x_k) + O(1).
// Near infinity T = s/(2 x^2) + h/x^3 + O(x^-4).
struct StressPoint {
    SpherePoint location;
    double order = 0.0;
    double s = 0.0;
    cplx h{0.0, 0.0};
};

struct StressData {
    std::vector<StressPoint> points;  // finite points first, infinity last

    const StressPoint& at_infinity() const { return points.back(); }
};

// Residuals of the three identities that follow from T = O(x^-2) at infinity.
struct SumRuleResiduals {
    double sum_h = 0.0;
    double first_moment = 0.0;
    double second_moment = 0.0;
    double max() const;
};
SumRuleResiduals sum_rules(const StressData& d);

// s = -beta (beta + 2).
double second_order_weight(double beta);

// Three-point values at 0, 1 and infinity.
StressData schwarz_accessory(const TriangleDivisor& t);

// Pulled-back stress data for the metric f^* m_beta. Throws ConsistencyError
// when a sum rule fails by more than tol.
StressData pullback_accessory(const RamificationData& ram, const TriangleDivisor& t, double tol = 1e-8);

// T_{f^* phi}(x) = T_phi(f(x)) f'(x)^2 + {f, x}.
cplx stress_energy_eval(const RamificationData& ram, const TriangleDivisor& t, cplx x);

// Rebuilds T from its finite poles.
cplx stress_from_data(const StressData& d, cplx x);

struct ContourResidues {
    double s = 0.0;
    cplx h{0.0, 0.0};
    cplx s_raw{0.0, 0.0};  // before discarding the imaginary part
    double radius = 0.0;
};
// Trapezoid-rule Laurent coefficients of T around point k of ram.
ContourResidues residues_via_contour(const RamificationData& ram, const TriangleDivisor& t, std::size_t k,
                                     int nodes = 512);

// Flat metric prod |x - x_k|^{2 beta_k}|dx|^2: h_k = -beta_k sum_{l != k} beta_l / (x_k - x_l).
StressData flat_accessory(const FlatConfiguration& cfg);
cplx flat_stress_eval(const FlatConfiguration& cfg, cplx x);

// Liouville action of a flat metric, 2 pi sum_{k != l} beta_k beta_l ln|x_k - x_l|.
// It does not depend on the area normalization.
double flat_liouville_action(const FlatConfiguration& cfg);

}  // namespace bdet
