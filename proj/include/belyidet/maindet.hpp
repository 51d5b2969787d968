// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#pragma once

#include <string>
#include <vector>

#include "belyidet/basedet.hpp"
#include "belyidet/belyi.hpp"
#include "belyidet/flatdet.hpp"

namespace bdet {

// Itemized contributions to log(det / deg f).
struct GluedTerms {
    double base = 0.0;      // deg f * log det of the unit base
    double phi_sum = 0.0;   // base potential coefficients
    double logm_sum = 0.0;  // ramification logarithms
    double calC_sum = 0.0;  // calC differences
    double bigC = 0.0;      // -(deg f - 1) C
    double C_f = 0.0;
    double other = 0.0;     // closed-form remainder of a family formula

    double total() const { return base + phi_sum + logm_sum + calC_sum + bigC + C_f + other; }
};

struct GluedDeterminantReport {
    double log_det = 0.0;  // log det at area deg f, so terms.total() = log_det - ln(deg f)
    double area = 0.0;
    Divisor pullback;
    GluedTerms terms;
    Route route = Route::TheoremMain;
    bool outside_hypotheses = false;
    std::vector<std::string> notes;

    LogDetResult as_result() const { return {log_det, area, pullback, route}; }
};

// Determinant of the sphere glued from deg f copies of the unit base.
GluedDeterminantReport theorem_main(const RamificationData& ram, const BaseSurface& base);

// Coefficients (f*phi)_k of the pulled-back potential at every point of ram.
std::vector<double> pullback_phi(const RamificationData& ram, const BaseSurface& base);

// For a flat base: the area of prod |x - x_k|^{2 (f*beta)_k} |dx|^2 obtained from
// the pulled-back coefficients, and the spread of ln c_g over the finite points.
struct PullbackArea {
    double area;
    double spread;
};
PullbackArea pullback_flat_area(const RamificationData& ram, const BaseSurface& base);

enum class Family { Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral };
Family family_from_string(const std::string& s);
std::string to_string(Family f);
int family_degree(Family f, int ell);
RationalMap family_map(Family f, int ell);

// Closed-form family theorem, transcribed independently of theorem_main.
GluedDeterminantReport family_log_det(Family family, int ell, const BaseSurface& base);

enum class Solid { Tetrahedron, Octahedron, Cube, Icosahedron, Dodecahedron, Dihedron };
struct SolidSpec {
    Solid solid = Solid::Tetrahedron;
    int ell = 0;  // dihedron only
};
SolidSpec solid_from_string(const std::string& s);
std::string to_string(const SolidSpec& s);
// Order at which the solid is flat.
double flat_order(const SolidSpec& s);

struct RouteValue {
    std::string name;
    double log_det = 0.0;  // at area 4 pi
};

struct PlatonicReport {
    SolidSpec solid;
    double beta = 0.0;
    LogDetResult result;  // primary specialized formula, area 4 pi
    std::vector<RouteValue> cross_routes;
    std::vector<std::string> skipped;
    double max_deviation = 0.0;
    bool consistent = true;
};

// Specialized formula for the solid at area 4 pi, compared against every
// other route whose base the provider can serve (family theorems, theorem_main,
// and flatdet when the configuration is flat).
PlatonicReport platonic_log_det(const SolidSpec& solid, double beta, const BaseProvider& provider, double tol = 1e-7,
                                bool cross_check = true);

// The canonical flat configuration of the solid at its flat order, area 4 pi.
FlatConfiguration platonic_flat_configuration(const SolidSpec& solid);

// Liouville action from a determinant: inverts
// ln(det/S) = (|beta|+2)/6 - (S_L - pi ln H)/(12 pi) - sum calC + C,
// with ln H = 2 sum (beta_k + 1 - 1/(beta_k + 1)) phi_k.
double liouville_from_log_det(const std::vector<double>& orders, const std::vector<double>& phi,
                              double log_det_over_area);

// The same for the glued surface, with phi from pullback_phi.
double liouville_action(const RamificationData& ram, const BaseSurface& base, double glued_log_det);

struct SweepRow {
    double beta;
    double log_det_4pi;
};
// Grid "start:stop:step" with step > 0 and start <= stop.
std::vector<double> parse_grid(const std::string& spec);
std::vector<SweepRow> sweep_platonic(const SolidSpec& solid, const std::vector<double>& grid,
                                     const BaseProvider& provider);

}  // namespace bdet
