// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#include "belyidet/maindet.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace bdet {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLn2 = std::log(2.0);
const double kLn3 = std::log(3.0);
const double kLn5 = std::log(5.0);
const double kLnPi = std::log(kPi);

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(15);
    os << v;
    return os.str();
}

// Analyses of catalog maps are reused across calls.
const RamificationData& cached_analysis(const std::string& name, int ell) {
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, RamificationData> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(name, ell);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, analyze(catalog(name, ell))).first;
    return it->second;
}

}  // namespace

std::vector<double> pullback_phi(const RamificationData& ram, const BaseSurface& base) {
    std::vector<double> out;
    out.reserve(ram.points.size());
    for (const auto& p : ram.points) {
        const double bj = base.triangle.get(p.fiber);
        const double m = p.ord + 1.0;
        const double sign = p.fiber == kFiberInf ? -1.0 : 1.0;
        out.push_back(base.phi(p.fiber) + sign * (bj + 1.0) * std::log(std::abs(p.c)) + std::log(m));
    }
    return out;
}

PullbackArea pullback_flat_area(const RamificationData& ram, const BaseSurface& base) {
    const Divisor pb = pullback_divisor(ram, base.triangle);
    const auto phi = pullback_phi(ram, base);
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (std::size_t k = 0; k < ram.points.size(); ++k) {
        double lc = phi[k];
        if (!ram.points[k].location.inf) {
            for (std::size_t l = 0; l < ram.points.size(); ++l)
                if (l != k && !ram.points[l].location.inf)
                    lc -= pb.orders[l] * std::log(std::abs(ram.points[k].location.z - ram.points[l].location.z));
        }
        lo = first ? lc : std::min(lo, lc);
        hi = first ? lc : std::max(hi, lc);
        first = false;
    }
    const double ln_cg = 0.5 * (lo + hi);
    return {static_cast<double>(ram.degree) * std::exp(-2.0 * ln_cg), hi - lo};
}

GluedDeterminantReport theorem_main(const RamificationData& ram, const BaseSurface& base) {
    GluedDeterminantReport rep;
    rep.pullback = pullback_divisor(ram, base.triangle);
    const double deg = ram.degree;
    for (std::size_t k = 0; k < ram.points.size(); ++k)
        if (!(rep.pullback.orders[k] > -1.0)) {
            std::ostringstream os;
            os << "pulled-back order " << fmt(rep.pullback.orders[k]) << " at "
               << describe(ram.points[k].location) << " is not above -1";
            throw InputError(os.str());
        }
    const double gb = rep.pullback.degree() + 2.0 - deg * (base.triangle.degree() + 2.0);
    if (std::fabs(gb) > 1e-9 * deg)
        throw ConsistencyError("pulled-back divisor violates Riemann-Hurwitz: mismatch " + fmt(gb));

    GluedTerms& t = rep.terms;
    t.base = deg * base.log_det_unit;
    for (std::size_t k = 0; k < ram.points.size(); ++k) {
        const auto& p = ram.points[k];
        if (p.ord == 0) continue;
        const double m = p.ord + 1.0;
        const double bj = base.triangle.get(p.fiber);
        const double g = rep.pullback.orders[k];
        t.phi_sum += (m - 1.0 / m) * base.phi(p.fiber) / (6.0 * (bj + 1.0));
        t.logm_sum -= (g + 1.0 + 1.0 / (g + 1.0)) * std::log(m) / 6.0;
        t.calC_sum -= calC(g) - m * calC(bj);
    }
    t.bigC = -(deg - 1.0) * big_c();
    t.C_f = ram.C_f;
    rep.area = deg;
    rep.log_det = t.total() + std::log(deg);
    rep.route = Route::TheoremMain;
    for (int j = 0; j < 3; ++j)
        if (!(base.triangle.get(j) > -1.0 && base.triangle.get(j) <= 0.0)) rep.outside_hypotheses = true;
    if (base.boundary) rep.outside_hypotheses = true;
    if (rep.outside_hypotheses) rep.notes.push_back("base lies outside the hypotheses of the gluing theorem");
    return rep;
}

Family family_from_string(const std::string& s) {
    std::string n;
    for (char ch : s)
        if (std::isalpha(static_cast<unsigned char>(ch))) n.push_back(static_cast<char>(std::tolower(ch)));
    if (n == "cyclic") return Family::Cyclic;
    if (n == "dihedral") return Family::Dihedral;
    if (n == "tetrahedral") return Family::Tetrahedral;
    if (n == "octahedral") return Family::Octahedral;
    if (n == "icosahedral") return Family::Icosahedral;
    throw InputError("unknown family '" + s + "'; expected cyclic, dihedral, tetrahedral, octahedral or icosahedral");
}

std::string to_string(Family f) {
    switch (f) {
        case Family::Cyclic: return "cyclic";
        case Family::Dihedral: return "dihedral";
        case Family::Tetrahedral: return "tetrahedral";
        case Family::Octahedral: return "octahedral";
        case Family::Icosahedral: return "icosahedral";
    }
    return "unknown";
}

int family_degree(Family f, int ell) {
    switch (f) {
        case Family::Cyclic: return ell;
        case Family::Dihedral: return 2 * ell;
        case Family::Tetrahedral: return 12;
        case Family::Octahedral: return 24;
        case Family::Icosahedral: return 60;
    }
    return 0;
}

RationalMap family_map(Family f, int ell) {
    if ((f == Family::Cyclic || f == Family::Dihedral) && ell < 1)
        throw InputError(to_string(f) + " family needs ell >= 1");
    return catalog(to_string(f), ell);
}

GluedDeterminantReport family_log_det(Family family, int ell, const BaseSurface& base) {
    const double b0 = base.triangle.beta0;
    const double b1 = base.triangle.beta1;
    const double bi = base.triangle.betaInf;
    const double p0 = base.phi0;
    const double p1 = base.phi1;
    const double pi_ = base.phiInf;
    const double L = base.log_det_unit;
    const double C = big_c();
    const double sumC = calC(b0) + calC(b1) + calC(bi);
    const int deg = family_degree(family, ell);
    const double l = ell;

    GluedDeterminantReport rep;
    GluedTerms& t = rep.terms;
    t.base = deg * L;
    double rest = 0.0;  // log(det / deg) - deg L
    switch (family) {
        case Family::Cyclic: {
            rep.route = Route::CyclicTheorem;
            rest = l * (calC(b0) + calC(bi) - C) + (l - 1.0 / l) * (p0 / (b0 + 1.0) + pi_ / (bi + 1.0)) / 6.0 -
                   (l * (b0 + bi + 2.0) + 1.0 / (l * (b0 + 1.0)) + 1.0 / (l * (bi + 1.0))) * std::log(l) / 6.0 -
                   calC(l * (b0 + 1.0) - 1.0) - calC(l * (bi + 1.0) - 1.0) + C;
            break;
        }
        case Family::Dihedral: {
            rep.route = Route::DihedralTheorem;
            t.C_f = (2.0 / 3.0) * (l - 1.0 / l) * kLn2;
            rest = 2.0 * l * (sumC - C) + (l - 1.0 / l) * p0 / (3.0 * (b0 + 1.0)) +
                   (l / 4.0) * (p1 / (b1 + 1.0) + pi_ / (bi + 1.0)) -
                   (l * (b0 + 1.0) + 1.0 / (l * (b0 + 1.0))) * std::log(l) / 3.0 -
                   (l / 3.0) * (b1 + bi + 2.0 + 1.0 / (4.0 * b1 + 4.0) + 1.0 / (4.0 * bi + 4.0)) * kLn2 -
                   2.0 * calC(l * (b0 + 1.0) - 1.0) - l * (calC(2.0 * b1 + 1.0) + calC(2.0 * bi + 1.0)) + C;
            break;
        }
        case Family::Tetrahedral: {
            rep.route = Route::TetrahedralTheorem;
            t.C_f = kLn2 + 2.25 * kLn3;
            rest = 12.0 * (sumC - C) + (16.0 / 9.0) * p0 / (b0 + 1.0) + 1.5 * p1 / (b1 + 1.0) +
                   (16.0 / 9.0) * pi_ / (bi + 1.0) -
                   (2.0 / 3.0) * (3.0 * (b0 + bi + 2.0) + 1.0 / (3.0 * (bi + 1.0)) + 1.0 / (3.0 * (b0 + 1.0))) * kLn3 -
                   (2.0 * (b1 + 1.0) + 1.0 / (2.0 * (b1 + 1.0))) * kLn2 - 4.0 * calC(3.0 * b0 + 2.0) -
                   6.0 * calC(2.0 * b1 + 1.0) - 4.0 * calC(3.0 * bi + 2.0) + C;
            break;
        }
        case Family::Octahedral: {
            rep.route = Route::OctahedralTheorem;
            t.C_f = 2.25 * kLn3 + (119.0 / 18.0) * kLn2;
            rest = 24.0 * (sumC - C) + 3.75 * p0 / (b0 + 1.0) + 3.0 * p1 / (b1 + 1.0) +
                   (32.0 / 9.0) * pi_ / (bi + 1.0) -
                   (4.0 * (2.0 * b0 + b1 + 3.0) + 1.0 / (2.0 * (b0 + 1.0)) + 1.0 / (b1 + 1.0)) * kLn2 -
                   4.0 * (bi + 1.0 + 1.0 / (9.0 * (bi + 1.0))) * kLn3 - 8.0 * calC(3.0 * bi + 2.0) -
                   6.0 * calC(4.0 * b0 + 3.0) - 12.0 * calC(2.0 * b1 + 1.0) + C;
            break;
        }
        case Family::Icosahedral: {
            rep.route = Route::IcosahedralTheorem;
            t.C_f = (139.0 / 15.0) * kLn2 + 6.3 * kLn3 + (125.0 / 36.0) * kLn5;
            rest = 60.0 * (sumC - C) + 9.6 * p0 / (b0 + 1.0) + 7.5 * p1 / (b1 + 1.0) +
                   (80.0 / 9.0) * pi_ / (bi + 1.0) - 2.0 * (5.0 * (b0 + 1.0) + 1.0 / (5.0 * (b0 + 1.0))) * kLn5 -
                   5.0 * (2.0 * b1 + 2.0 + 1.0 / (2.0 * b1 + 2.0)) * kLn2 -
                   (10.0 / 3.0) * (3.0 * bi + 3.0 + 1.0 / (3.0 * bi + 3.0)) * kLn3 - 12.0 * calC(5.0 * b0 + 4.0) -
                   30.0 * calC(2.0 * b1 + 1.0) - 20.0 * calC(3.0 * bi + 2.0) + C;
            break;
        }
    }
    t.other = rest;
    rep.area = deg;
    rep.log_det = t.total() + std::log(static_cast<double>(deg));
    const auto& ram = cached_analysis(to_string(family), family == Family::Cyclic || family == Family::Dihedral ? ell : 0);
    rep.pullback = pullback_divisor(ram, base.triangle);
    for (double g : rep.pullback.orders)
        if (!(g > -1.0)) throw InputError("pulled-back order " + fmt(g) + " is not above -1");
    for (int j = 0; j < 3; ++j)
        if (!(base.triangle.get(j) > -1.0 && base.triangle.get(j) <= 0.0)) rep.outside_hypotheses = true;
    if (base.boundary) rep.outside_hypotheses = true;
    return rep;
}

SolidSpec solid_from_string(const std::string& s) {
    std::string n, digits;
    for (char ch : s) {
        if (std::isalpha(static_cast<unsigned char>(ch))) n.push_back(static_cast<char>(std::tolower(ch)));
        else if (std::isdigit(static_cast<unsigned char>(ch))) digits.push_back(ch);
    }
    if (n == "tetrahedron") return {Solid::Tetrahedron, 0};
    if (n == "octahedron") return {Solid::Octahedron, 0};
    if (n == "cube" || n == "hexahedron") return {Solid::Cube, 0};
    if (n == "icosahedron") return {Solid::Icosahedron, 0};
    if (n == "dodecahedron") return {Solid::Dodecahedron, 0};
    if (n == "dihedron") {
        if (digits.empty()) throw InputError("dihedron needs the number of vertices, e.g. dihedron(4)");
        const int ell = std::stoi(digits);
        if (ell < 2) throw InputError("dihedron needs at least 2 vertices");
        return {Solid::Dihedron, ell};
    }
    throw InputError("unknown solid '" + s +
                     "'; expected tetrahedron, octahedron, cube, icosahedron, dodecahedron or dihedron(l)");
}

std::string to_string(const SolidSpec& s) {
    switch (s.solid) {
        case Solid::Tetrahedron: return "tetrahedron";
        case Solid::Octahedron: return "octahedron";
        case Solid::Cube: return "cube";
        case Solid::Icosahedron: return "icosahedron";
        case Solid::Dodecahedron: return "dodecahedron";
        case Solid::Dihedron: return "dihedron(" + std::to_string(s.ell) + ")";
    }
    return "unknown";
}

double flat_order(const SolidSpec& s) {
    switch (s.solid) {
        case Solid::Tetrahedron: return -0.5;
        case Solid::Octahedron: return -1.0 / 3.0;
        case Solid::Cube: return -0.25;
        case Solid::Icosahedron: return -1.0 / 6.0;
        case Solid::Dodecahedron: return -0.1;
        case Solid::Dihedron: return -2.0 / s.ell;
    }
    return 0.0;
}

namespace {

struct GluingRoute {
    std::string name;
    Family family;
    int ell;
    TriangleDivisor base;
};

// The primary gluing of each solid and its alternatives.
std::vector<GluingRoute> gluings(const SolidSpec& s, double beta) {
    switch (s.solid) {
        case Solid::Tetrahedron:
            return {{"cyclic(3)", Family::Cyclic, 3, {(beta - 2.0) / 3.0, beta, -2.0 / 3.0}},
                    {"tetrahedral", Family::Tetrahedral, 0, {-2.0 / 3.0, -0.5, (beta - 2.0) / 3.0}}};
        case Solid::Octahedron:
            return {{"cyclic(4)", Family::Cyclic, 4, {(beta - 3.0) / 4.0, beta, (beta - 3.0) / 4.0}},
                    {"dihedral(2)", Family::Dihedral, 2, {(beta - 1.0) / 2.0, (beta - 1.0) / 2.0, (beta - 1.0) / 2.0}},
                    {"octahedral", Family::Octahedral, 0, {(beta - 3.0) / 4.0, -0.5, -2.0 / 3.0}}};
        case Solid::Cube: return {{"octahedral", Family::Octahedral, 0, {-0.75, -0.5, (beta - 2.0) / 3.0}}};
        case Solid::Icosahedron:
            return {{"icosahedral", Family::Icosahedral, 0, {(beta - 4.0) / 5.0, -0.5, -2.0 / 3.0}}};
        case Solid::Dodecahedron:
            return {{"icosahedral", Family::Icosahedral, 0, {-0.8, -0.5, (beta - 2.0) / 3.0}}};
        case Solid::Dihedron: {
            const double a = 1.0 / s.ell - 1.0;
            return {{"cyclic(" + std::to_string(s.ell) + ")", Family::Cyclic, s.ell, {a, beta, a}}};
        }
    }
    return {};
}

const RamificationData& route_analysis(const GluingRoute& g) {
    const bool param = g.family == Family::Cyclic || g.family == Family::Dihedral;
    return cached_analysis(to_string(g.family), param ? g.ell : 0);
}

double rescaled(const LogDetResult& r) { return rescale_log_det(r, 4.0 * kPi).log_det; }

// Specialized closed forms at area 4 pi. Index i selects the gluing from gluings().
double specialized(const SolidSpec& s, std::size_t i, double beta, const BaseSurface& b) {
    const double L = b.log_det_unit;
    const double sumC = calC(b.triangle.beta0) + calC(b.triangle.beta1) + calC(b.triangle.betaInf);
    const double C = big_c();
    const double a = beta + 1.0;
    const double e = a + 1.0 / a;
    switch (s.solid) {
        case Solid::Tetrahedron:
            if (i == 0)
                return 3.0 * (L + calC(b.triangle.beta0) + calC(b.triangle.betaInf)) +
                       (4.0 / 3.0) * (b.phi0 / a + b.phiInf) -
                       (beta - 3.0 + 1.0 / a) * (std::log(4.0 * kPi) - 0.5 * kLn3) / 3.0 - calC(beta) - 2.0 * C;
            return 12.0 * (L + sumC) + kLn2 + (7.0 / 12.0) * kLn3 + (4.0 / 3.0) * kLnPi + (16.0 / 3.0) * b.phi0 +
                   3.0 * b.phi1 + 16.0 * b.phiInf / (3.0 * a) - e * std::log(3.0 * kPi) / 3.0 - 4.0 * calC(beta) -
                   11.0 * C;
        case Solid::Octahedron:
            if (i == 0)
                return 4.0 * L - e * ((2.0 / 3.0) * kLn2 + 0.5 * kLnPi) + (5.0 / 3.0) * kLnPi +
                       2.5 * (b.phi0 + b.phiInf) / a + 2.0 * kLn2 + 8.0 * calC(b.triangle.beta0) - 2.0 * calC(beta) -
                       3.0 * C;
            if (i == 1)
                return 4.0 * L - e * (kLn2 + 0.5 * kLnPi) + (5.0 / 3.0) * kLnPi + (b.phi0 + b.phi1 + b.phiInf) / a +
                       3.0 * kLn2 + 12.0 * calC(b.triangle.beta0) - 6.0 * calC(beta) - 3.0 * C;
            return 24.0 * (L + sumC) - (13.0 / 12.0) * kLn3 + (71.0 / 18.0) * kLn2 + 15.0 * b.phi0 / a +
                   6.0 * b.phi1 + (32.0 / 3.0) * b.phiInf - 0.5 * e * std::log(8.0 * kPi / 3.0) - 6.0 * calC(beta) -
                   23.0 * C + (5.0 / 3.0) * kLnPi;
        case Solid::Cube:
            return 24.0 * (L + sumC) + 1.25 * kLn3 - (7.0 / 18.0) * kLn2 + 2.0 * kLnPi + 15.0 * b.phi0 +
                   6.0 * b.phi1 + 32.0 * b.phiInf / (3.0 * a) - (2.0 / 3.0) * e * std::log(1.5 * kPi) -
                   8.0 * calC(beta) - 23.0 * C;
        case Solid::Icosahedron:
            return 60.0 * (L + sumC) + (19.0 / 15.0) * kLn2 - (61.0 / 30.0) * kLn3 + (65.0 / 36.0) * kLn5 +
                   48.0 * b.phi0 / a + 15.0 * b.phi1 + (80.0 / 3.0) * b.phiInf - e * std::log(5.0 * kPi / 3.0) -
                   12.0 * calC(beta) - 59.0 * C + (8.0 / 3.0) * kLnPi;
        case Solid::Dodecahedron:
            return 60.0 * (L + sumC) + (19.0 / 15.0) * kLn2 + 3.3 * kLn3 - (127.0 / 36.0) * kLn5 + 48.0 * b.phi0 +
                   15.0 * b.phi1 + 80.0 * b.phiInf / (3.0 * a) - (5.0 / 3.0) * e * std::log(0.6 * kPi) -
                   20.0 * calC(beta) - 59.0 * C + 4.0 * kLnPi;
        case Solid::Dihedron: {
            // Given at area ell; rescaled below.
            const double l = s.ell;
            return l * L + 2.0 * l * calC(1.0 / l - 1.0) + (l * l - 1.0) * (b.phi0 + b.phiInf) / 6.0 +
                   std::log(l) / 3.0 + (1.0 - l) * C;
        }
    }
    return 0.0;
}

}  // namespace

FlatConfiguration platonic_flat_configuration(const SolidSpec& solid) {
    const double beta = flat_order(solid);
    const auto g = gluings(solid, beta).front();
    const auto pb = pullback_divisor(route_analysis(g), g.base);
    return configuration_from_divisor(pb, 4.0 * kPi);
}

PlatonicReport platonic_log_det(const SolidSpec& solid, double beta, const BaseProvider& provider, double tol,
                                bool cross_check) {
    if (!(beta > -1.0)) throw InputError("cone order must exceed -1; got " + fmt(beta));
    if (solid.solid == Solid::Dihedron && solid.ell < 2) throw InputError("dihedron needs at least 2 vertices");
    const auto routes = gluings(solid, beta);
    PlatonicReport rep;
    rep.solid = solid;
    rep.beta = beta;

    const BaseSurface base = provider(routes[0].base);
    const auto& ram0 = route_analysis(routes[0]);
    rep.result.divisor = pullback_divisor(ram0, routes[0].base);
    rep.result.route = Route::PlatonicFormula;
    for (double g : rep.result.divisor.orders)
        if (!(g > -1.0)) throw InputError("cone order " + fmt(beta) + " gives a non-integrable pulled-back divisor");
    if (solid.solid == Solid::Dihedron) {
        LogDetResult at_ell{specialized(solid, 0, beta, base), static_cast<double>(solid.ell), rep.result.divisor,
                            Route::PlatonicFormula};
        rep.result.log_det = rescaled(at_ell);
    } else {
        rep.result.log_det = specialized(solid, 0, beta, base);
    }
    rep.result.area = 4.0 * kPi;
    if (!cross_check) return rep;

    auto add = [&](const std::string& name, double v) {
        rep.cross_routes.push_back({name, v});
        rep.max_deviation = std::max(rep.max_deviation, std::fabs(v - rep.result.log_det));
    };
    for (std::size_t i = 0; i < routes.size(); ++i) {
        const auto& g = routes[i];
        BaseSurface b;
        try {
            b = i == 0 ? base : provider(g.base);
        } catch (const InputError& e) {
            rep.skipped.push_back(g.name + ": " + e.what());
            continue;
        }
        const auto& ram = route_analysis(g);
        if (i > 0) add("specialized via " + g.name, specialized(solid, i, beta, b));
        add("family theorem via " + g.name, rescaled(family_log_det(g.family, g.ell, b).as_result()));
        add("theorem-main via " + g.name, rescaled(theorem_main(ram, b).as_result()));
    }
    if (std::fabs(beta - flat_order(solid)) <= 1e-12) {
        const FlatConfiguration cfg = configuration_from_divisor(rep.result.divisor, 4.0 * kPi);
        add("flat formula, quadrature area", flat_log_det(cfg).log_det);
        const BaseSurface fb = base.kind == BaseKind::Flat3 ? base : make_flat3(routes[0].base);
        add("flat formula, pulled-back area", flat_log_det(cfg, pullback_flat_area(ram0, fb).area).log_det);
    }
    rep.consistent = rep.max_deviation <= tol;
    return rep;
}

double liouville_from_log_det(const std::vector<double>& orders, const std::vector<double>& phi,
                              double log_det_over_area) {
    if (orders.size() != phi.size()) throw InputError("orders and phi differ in length");
    double lnH = 0.0, sum = 0.0, cc = 0.0;
    for (std::size_t k = 0; k < orders.size(); ++k) {
        const double a = orders[k] + 1.0;
        if (orders[k] != 0.0) lnH += 2.0 * (a - 1.0 / a) * phi[k];
        sum += orders[k];
        cc += calC(orders[k]);
    }
    return kPi * lnH - 12.0 * kPi * (log_det_over_area - (sum + 2.0) / 6.0 + cc - big_c());
}

double liouville_action(const RamificationData& ram, const BaseSurface& base, double glued_log_det) {
    const Divisor pb = pullback_divisor(ram, base.triangle);
    return liouville_from_log_det(pb.orders, pullback_phi(ram, base), glued_log_det - std::log(ram.degree));
}

std::vector<double> parse_grid(const std::string& spec) {
    std::vector<double> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError("grid '" + spec + "' must look like start:stop:step");
        }
    }
    if (parts.size() != 3) throw InputError("grid '" + spec + "' must look like start:stop:step");
    const double a = parts[0], b = parts[1], h = parts[2];
    if (!(h > 0.0)) throw InputError("grid step must be positive");
    if (!(a <= b)) throw InputError("grid start must not exceed its stop");
    const auto n = static_cast<long>(std::floor((b - a) / h + 1e-9)) + 1;
    if (n > 1000000) throw InputError("grid has too many points");
    std::vector<double> out;
    for (long i = 0; i < n; ++i) {
        double v = a + static_cast<double>(i) * h;
        if (std::fabs(v) < 1e-12 * std::max(1.0, std::fabs(h))) v = 0.0;
        out.push_back(std::min(v, b));
    }
    return out;
}

std::vector<SweepRow> sweep_platonic(const SolidSpec& solid, const std::vector<double>& grid,
                                     const BaseProvider& provider) {
    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (double beta : grid) rows.push_back({beta, platonic_log_det(solid, beta, provider, 0.0, false).result.log_det});
    return rows;
}

}  // namespace bdet
