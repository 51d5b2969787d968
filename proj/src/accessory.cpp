// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#include "belyidet/accessory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace bdet {

namespace {

struct Schwarz {
    double s0, s1, sInf;
    double h0, hInf;  // h1 = -h0
};

Schwarz schwarz_values(const TriangleDivisor& t) {
    Schwarz v{};
    v.s0 = second_order_weight(t.beta0);
    v.s1 = second_order_weight(t.beta1);
    v.sInf = second_order_weight(t.betaInf);
    v.h0 = 0.5 * (v.s0 + v.s1 - v.sInf);
    v.hInf = 0.5 * (v.s1 + v.sInf - v.s0);
    return v;
}

double nearest_distance(const RamificationData& ram, std::size_t k) {
    double nn = INFINITY;
    for (std::size_t l = 0; l < ram.points.size(); ++l)
        if (l != k && !ram.points[l].location.inf)
            nn = std::min(nn, std::abs(ram.points[l].location.z - ram.points[k].location.z));
    return nn;
}

}  // namespace

double SumRuleResiduals::max() const { return std::max({sum_h, first_moment, second_moment}); }

double second_order_weight(double beta) { return -beta * (beta + 2.0); }

SumRuleResiduals sum_rules(const StressData& d) {
    cplx r0 = 0, r1 = 0, r2 = 0;
    for (std::size_t k = 0; k + 1 < d.points.size(); ++k) {
        const auto& p = d.points[k];
        r0 += p.h;
        r1 += p.h * p.location.z + p.s / 2.0;
        r2 += p.h * p.location.z * p.location.z + p.s * p.location.z;
    }
    const auto& inf = d.at_infinity();
    SumRuleResiduals out;
    out.sum_h = std::abs(r0);
    out.first_moment = std::abs(r1 - inf.s / 2.0);
    out.second_moment = std::abs(r2 - inf.h);
    return out;
}

StressData schwarz_accessory(const TriangleDivisor& t) {
    for (int j = 0; j < 3; ++j)
        if (!(t.get(j) > -1.0)) throw InputError("orders must exceed -1");
    const Schwarz v = schwarz_values(t);
    StressData d;
    d.points.push_back({SpherePoint::at(0.0), t.beta0, v.s0, v.h0});
    d.points.push_back({SpherePoint::at(1.0), t.beta1, v.s1, -v.h0});
    d.points.push_back({SpherePoint::infinity(), t.betaInf, v.sInf, v.hInf});
    return d;
}

StressData pullback_accessory(const RamificationData& ram, const TriangleDivisor& t, double tol) {
    const Divisor pb = pullback_divisor(ram, t);
    const Schwarz v = schwarz_values(t);
    const double hj[3] = {v.h0, -v.h0, v.hInf};
    StressData out;
    for (std::size_t k = 0; k < ram.points.size(); ++k) {
        const auto& p = ram.points[k];
        const double g = pb.orders[k];
        if (!(g > -1.0)) {
            std::ostringstream os;
            os << "pulled-back order " << g << " at " << describe(p.location) << " is not above -1";
            throw InputError(os.str());
        }
        if (std::abs(p.c) == 0.0 || !std::isfinite(std::abs(p.d)))
            throw InputError("degenerate local expansion at " + describe(p.location));
        const double m = p.ord + 1.0;
        const double s = second_order_weight(g);
        const cplx dc = p.d / p.c;
        cplx h;
        if (p.fiber == kFiberInf) {
            h = -dc * s / m;
            if (p.ord == 0) h += hj[kFiberInf] / p.c;
        } else {
            h = dc * s / m;
            if (p.ord == 0) h += p.c * hj[p.fiber];
        }
        out.points.push_back({p.location, g, s, h});
    }
    const auto res = sum_rules(out);
    if (res.max() > tol) {
        std::ostringstream os;
        os << "accessory sum rules fail for " << (ram.name.empty() ? "map" : ram.name) << ": residual " << res.max();
        throw ConsistencyError(os.str());
    }
    return out;
}

cplx stress_energy_eval(const RamificationData& ram, const TriangleDivisor& t, cplx x) {
    for (const auto& p : ram.points)
        if (!p.location.inf && std::abs(x - p.location.z) <= 1e-6)
            throw InputError("stress tensor evaluated within 1e-6 of the marked point " + describe(p.location));
    const Schwarz v = schwarz_values(t);
    const MapJet j = ram.jet(x);
    if (std::abs(j.L1) == 0.0) throw InputError("stress tensor evaluated at a critical point of f");
    const cplx L1sq = j.L1 * j.L1;
    const cplx r = j.f / j.f_minus_1;  // f/(f-1)
    // h0 f L1^2 - h0 f^2 L1^2/(f-1) collapses to -h0 r L1^2, which avoids cancellation near poles.
    const cplx pulled = v.s0 * L1sq / 2.0 + v.s1 * r * r * L1sq / 2.0 - v.h0 * r * L1sq;
    const cplx q2 = (L1sq + j.L2) / j.L1;                            // f''/f'
    const cplx q3 = (L1sq * j.L1 + 3.0 * j.L1 * j.L2 + j.L3) / j.L1;  // f'''/f'
    return pulled + q3 - 1.5 * q2 * q2;
}

cplx stress_from_data(const StressData& d, cplx x) {
    cplx T = 0;
    for (std::size_t k = 0; k + 1 < d.points.size(); ++k) {
        const cplx u = 1.0 / (x - d.points[k].location.z);
        T += d.points[k].s * u * u / 2.0 + d.points[k].h * u;
    }
    return T;
}

ContourResidues residues_via_contour(const RamificationData& ram, const TriangleDivisor& t, std::size_t k,
                                     int nodes) {
    if (k >= ram.points.size()) throw InputError("point index out of range");
    if (nodes < 512) throw InputError("contour needs at least 512 nodes");
    const auto& p = ram.points[k];
    ContourResidues out;
    cplx a1 = 0, a2 = 0;
    if (!p.location.inf) {
        const double nn = nearest_distance(ram, k);
        out.radius = std::min(1e-2, 0.25 * nn);
        for (int i = 0; i < nodes; ++i) {
            const cplx e = std::polar(1.0, 2.0 * std::numbers::pi * i / nodes);
            const cplx w = out.radius * e;
            const cplx T = stress_energy_eval(ram, t, p.location.z + w);
            a1 += T * w;      // (1/2 pi i) oint T dx
            a2 += T * w * w;  // (1/2 pi i) oint T (x - x_k) dx
        }
        out.h = a1 / static_cast<double>(nodes);
        out.s_raw = 2.0 * a2 / static_cast<double>(nodes);
    } else {
        double rmax = 0.0;
        for (const auto& q : ram.points)
            if (!q.location.inf) rmax = std::max(rmax, std::abs(q.location.z));
        out.radius = 4.0 * std::max(rmax, 1.0);
        for (int i = 0; i < nodes; ++i) {
            const cplx x = std::polar(out.radius, 2.0 * std::numbers::pi * i / nodes);
            const cplx T = stress_energy_eval(ram, t, x);
            a1 += T * x * x;      // coefficient of x^-2
            a2 += T * x * x * x;  // coefficient of x^-3
        }
        out.s_raw = 2.0 * a1 / static_cast<double>(nodes);
        out.h = a2 / static_cast<double>(nodes);
    }
    out.s = out.s_raw.real();
    return out;
}

StressData flat_accessory(const FlatConfiguration& cfg) {
    check_configuration(cfg);
    StressData d;
    const auto& x = cfg.finite_points;
    const auto& b = cfg.orders;
    for (std::size_t k = 0; k < x.size(); ++k) {
        cplx acc = 0;
        for (std::size_t l = 0; l < x.size(); ++l)
            if (l != k) acc += b[l] / (x[k] - x[l]);
        d.points.push_back({SpherePoint::at(x[k]), b[k], second_order_weight(b[k]), -b[k] * acc});
    }
    // At infinity the data follow from the expansion of T.
    cplx h_inf = 0;
    for (const auto& p : d.points) h_inf += p.h * p.location.z * p.location.z + p.s * p.location.z;
    d.points.push_back({SpherePoint::infinity(), cfg.order_at_infinity, second_order_weight(cfg.order_at_infinity),
                        h_inf});
    return d;
}

cplx flat_stress_eval(const FlatConfiguration& cfg, cplx x) {
    cplx d1 = 0, d2 = 0;
    for (std::size_t k = 0; k < cfg.finite_points.size(); ++k) {
        const cplx u = 1.0 / (x - cfg.finite_points[k]);
        d1 += cfg.orders[k] * u / 2.0;
        d2 -= cfg.orders[k] * u * u / 2.0;
    }
    return 2.0 * (d2 - d1 * d1);
}

double flat_liouville_action(const FlatConfiguration& cfg) {
    check_configuration(cfg);
    double acc = 0.0;
    const auto& x = cfg.finite_points;
    for (std::size_t k = 0; k < x.size(); ++k)
        for (std::size_t l = 0; l < x.size(); ++l)
            if (k != l) acc += cfg.orders[k] * cfg.orders[l] * std::log(std::abs(x[k] - x[l]));
    return 2.0 * std::numbers::pi * acc;
}

}  // namespace bdet
