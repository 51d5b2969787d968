// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#pragma once

#include <string>
#include <vector>

#include "belyidet/polyexact.hpp"
#include "belyidet/specfun.hpp"

namespace bdet {

// f = P / Q with exact rational coefficients.
struct RationalMap {
    Poly P;
    Poly Q;
    std::string name;

    int degree() const { return std::max(P.degree(), Q.degree()); }
    // 0, 1 or 2 (infinity); throws InputError when f(inf) is not one of them.
    int value_at_infinity() const;
};

// Checks coprimality and f(inf) in {0, 1, inf}. Throws InputError.
void validate(const RationalMap& f);

// Fiber labels: 0, 1 and 2 for infinity.
constexpr int kFiberInf = 2;

struct RamifiedPoint {
    SpherePoint location;
    int fiber = 0;
    int ord = 0;
    // Leading local coefficient and the one after it. At a finite point
    // f - f(x_k) (or f at a pole) is c (x - x_k)^{+-(ord+1)} (1 + (d/c)(x - x_k) + ...).
    // At infinity the expansion variable is 1/x: f - f(inf) = c x^{-(ord+1)} (1 + (d/c)/x + ...),
    // or f = c x^{ord+1} (1 + (d/c)/x + ...) when infinity is a pole.
    cplx c;
    cplx d;
};

// f and f - 1 as products over their zeros and poles.
struct RootForm {
    cplx kappa;   // f = kappa prod (x - r)^{e}
    cplx kappa1;  // f - 1 = kappa1 prod (x - r)^{e}
    std::vector<cplx> f_roots;
    std::vector<int> f_exps;  // positive for zeros, negative for poles
    std::vector<cplx> g_roots;
    std::vector<int> g_exps;
};

// Value of f together with the logarithmic derivatives sum e/(x-r)^j.
struct MapJet {
    cplx f;
    cplx f_minus_1;
    cplx L1, L2, L3;  // L1 = f'/f, L2 = L1', L3 = L1''
};

struct RamificationData {
    std::vector<RamifiedPoint> points;  // finite points first, infinity last
    int degree = 0;
    double A_f = 0.0;
    std::vector<double> A_f_probes;
    double A_f_from_infinity = 0.0;
    double C_f = 0.0;           // local-coefficient route
    double C_f_pairwise = 0.0;  // pairwise-distance route
    RootForm form;
    std::string name;

    std::size_t infinity_index() const { return points.size() - 1; }
    MapJet jet(cplx x) const;
};

// Full ramification analysis. Throws InputError for non-Belyi input and
// ConsistencyError when independent routes disagree beyond `tol`.
RamificationData analyze(const RationalMap& f, double tol = 1e-8);

// g o h for rational maps given as P/Q pairs.
RationalMap compose(const RationalMap& g, const RationalMap& h);

// f o mu with mu(x) = (a x + b) / (c x + d).
RationalMap mobius_precompose(const RationalMap& f, const mpq_class& a, const mpq_class& b, const mpq_class& c,
                              const mpq_class& d);

// Orders (ord + 1)(beta_{f(x_k)} + 1) - 1 at the points of ram.
Divisor pullback_divisor(const RamificationData& ram, const TriangleDivisor& base);

// "cyclic", "dihedral" (with ell), "tetrahedral", "octahedral", "icosahedral".
RationalMap catalog(const std::string& name, int ell = 0);

// Parses names such as "cyclic(3)", "cyclic:3", "dihedral4" or "octahedral".
RationalMap catalog_from_string(const std::string& spec);

}  // namespace bdet
