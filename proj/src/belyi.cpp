// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#include "belyidet/belyi.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <sstream>

namespace bdet {

int RationalMap::value_at_infinity() const {
    const int dp = P.degree(), dq = Q.degree();
    if (dp > dq) return kFiberInf;
    if (dp < dq) return 0;
    if (P.lead() == Q.lead()) return 1;
    std::ostringstream os;
    os << "f(inf) = " << mpq_class(P.lead() / Q.lead()).get_str()
       << " is not in {0, 1, inf}; precompose with a Moebius map (mobius_precompose) to normalize";
    throw InputError(os.str());
}

void validate(const RationalMap& f) {
    if (f.Q.is_zero()) throw InputError("denominator of the map is zero");
    if (f.P.is_zero()) throw InputError("numerator of the map is zero");
    if (f.degree() < 1) throw InputError("map is constant");
    if (gcd(f.P, f.Q).degree() > 0) throw InputError("numerator and denominator are not coprime");
    (void)f.value_at_infinity();
}

namespace {

using RootList = std::vector<std::pair<cplx, int>>;

RootList roots_of(const Poly& p) {
    RootList out;
    if (p.degree() < 1) return out;
    for (const auto& r : squarefree_roots(p)) out.emplace_back(r.z, r.mult);
    return out;
}

int squarefree_degree(const Poly& p) {
    if (p.degree() < 1) return 0;
    int n = 0;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) n += factor.degree();
    return n;
}

cplx to_cplx(const mpq_class& q) { return {q.get_d(), 0.0}; }

struct Local {
    cplx c;
    cplx d_over_c;
};

// Coefficients at a root r_i of a product representation kappa prod (x - r_j)^{e_j}.
Local local_at_root(const std::vector<cplx>& roots, const std::vector<int>& exps, cplx kappa, std::size_t i) {
    cplx logc = std::log(kappa);
    cplx dc = 0;
    for (std::size_t j = 0; j < roots.size(); ++j) {
        if (j == i) continue;
        cplx diff = roots[i] - roots[j];
        logc += static_cast<double>(exps[j]) * std::log(diff);
        dc += static_cast<double>(exps[j]) / diff;
    }
    return {std::exp(logc), dc};
}

// Coefficients at infinity in the variable 1/x.
Local local_at_infinity(const std::vector<cplx>& roots, const std::vector<int>& exps, cplx kappa) {
    cplx dc = 0;
    for (std::size_t j = 0; j < roots.size(); ++j) dc -= static_cast<double>(exps[j]) * roots[j];
    return {kappa, dc};
}

cplx log_product(const std::vector<cplx>& roots, const std::vector<int>& exps, cplx kappa, cplx x) {
    cplx acc = std::log(kappa);
    for (std::size_t j = 0; j < roots.size(); ++j) acc += static_cast<double>(exps[j]) * std::log(x - roots[j]);
    return acc;
}

double log_A_at(const RamificationData& ram, cplx x) {
    const RootForm& F = ram.form;
    double lf = log_product(F.f_roots, F.f_exps, F.kappa, x).real();
    double lg = log_product(F.g_roots, F.g_exps, F.kappa1, x).real();
    cplx L1 = 0;
    for (std::size_t j = 0; j < F.f_roots.size(); ++j) L1 += static_cast<double>(F.f_exps[j]) / (x - F.f_roots[j]);
    double lfp = lf + std::log(std::abs(L1));
    double v = -(2.0 / 3.0) * lf - (2.0 / 3.0) * lg + lfp;
    for (const auto& p : ram.points) {
        if (p.location.inf) continue;
        v -= (p.ord - 2) / 3.0 * std::log(std::abs(x - p.location.z));
    }
    return v;
}

}  // namespace

MapJet RamificationData::jet(cplx x) const {
    MapJet j;
    j.f = std::exp(log_product(form.f_roots, form.f_exps, form.kappa, x));
    j.f_minus_1 = std::exp(log_product(form.g_roots, form.g_exps, form.kappa1, x));
    j.L1 = j.L2 = j.L3 = 0;
    for (std::size_t i = 0; i < form.f_roots.size(); ++i) {
        cplx u = 1.0 / (x - form.f_roots[i]);
        double e = form.f_exps[i];
        j.L1 += e * u;
        j.L2 -= e * u * u;
        j.L3 += 2.0 * e * u * u * u;
    }
    return j;
}

RamificationData analyze(const RationalMap& f, double tol) {
    validate(f);
    RamificationData ram;
    ram.degree = f.degree();
    ram.name = f.name;
    const Poly PmQ = f.P - f.Q;
    const int fib_inf = f.value_at_infinity();

    // Exact Belyi test: #f^{-1}{0,1,inf} = deg f + 2 exactly when all
    // critical values lie in {0, 1, inf}.
    const int n_points = squarefree_degree(f.P) + squarefree_degree(PmQ) + squarefree_degree(f.Q) + 1;
    if (n_points != ram.degree + 2) {
        std::ostringstream os;
        os << "not a Belyi map: " << n_points << " points over {0,1,inf}, expected deg f + 2 = " << ram.degree + 2;
        throw InputError(os.str());
    }

    const RootList zeros = roots_of(f.P);
    const RootList ones = roots_of(PmQ);
    const RootList poles = roots_of(f.Q);

    RootForm& F = ram.form;
    F.kappa = to_cplx(mpq_class(f.P.lead() / f.Q.lead()));
    F.kappa1 = to_cplx(mpq_class(PmQ.lead() / f.Q.lead()));
    for (const auto& [z, m] : zeros) {
        F.f_roots.push_back(z);
        F.f_exps.push_back(m);
    }
    for (const auto& [z, m] : ones) {
        F.g_roots.push_back(z);
        F.g_exps.push_back(m);
    }
    for (const auto& [z, m] : poles) {
        F.f_roots.push_back(z);
        F.f_exps.push_back(-m);
        F.g_roots.push_back(z);
        F.g_exps.push_back(-m);
    }

    auto add_finite = [&](const RootList& list, int fiber) {
        for (std::size_t i = 0; i < list.size(); ++i) {
            RamifiedPoint p;
            p.location = SpherePoint::at(list[i].first);
            p.fiber = fiber;
            p.ord = list[i].second - 1;
            Local loc;
            if (fiber == 1) {
                loc = local_at_root(F.g_roots, F.g_exps, F.kappa1, i);
            } else {
                std::size_t idx = fiber == 0 ? i : zeros.size() + i;
                loc = local_at_root(F.f_roots, F.f_exps, F.kappa, idx);
            }
            p.c = loc.c;
            p.d = loc.c * loc.d_over_c;
            ram.points.push_back(p);
        }
    };
    add_finite(zeros, 0);
    add_finite(ones, 1);
    add_finite(poles, kFiberInf);

    RamifiedPoint inf;
    inf.location = SpherePoint::infinity();
    inf.fiber = fib_inf;
    const int dp = f.P.degree(), dq = f.Q.degree();
    if (fib_inf == kFiberInf) inf.ord = dp - dq - 1;
    else if (fib_inf == 0) inf.ord = dq - dp - 1;
    else inf.ord = dq - PmQ.degree() - 1;
    Local li = fib_inf == 1 ? local_at_infinity(F.g_roots, F.g_exps, F.kappa1)
                            : local_at_infinity(F.f_roots, F.f_exps, F.kappa);
    inf.c = li.c;
    inf.d = li.c * li.d_over_c;
    ram.points.push_back(inf);

    // Local-coefficient route for C_f.
    double cf = 0.0;
    for (const auto& p : ram.points) {
        const double o = p.ord, m = p.ord + 1.0;
        const double lc = std::log(std::abs(p.c));
        const double lm = std::log(m);
        const bool pole = p.fiber == kFiberInf;
        if (!p.location.inf) {
            cf += pole ? ((o + 2) / m * lc - o * lm) : (o / m * lc + (o + 2) * lm);
        } else {
            cf += pole ? (-o / m * lc - (o + 2) * lm) : (-(o + 2) / m * lc + o * lm);
        }
    }
    ram.C_f = cf / 6.0;

    // Scaling constant A_f at deterministic probe points.
    double extent = 1.0, nn = 1e300;
    for (std::size_t a = 0; a < ram.points.size(); ++a) {
        if (ram.points[a].location.inf) continue;
        extent = std::max(extent, std::abs(ram.points[a].location.z));
        for (std::size_t b = a + 1; b < ram.points.size(); ++b)
            if (!ram.points[b].location.inf)
                nn = std::min(nn, std::abs(ram.points[a].location.z - ram.points[b].location.z));
    }
    if (nn == 1e300) nn = 1.0;
    std::mt19937_64 rng(0x5eed2026ULL);
    std::uniform_real_distribution<double> unif(-1.2 * extent, 1.2 * extent);
    std::vector<double> logs;
    while (logs.size() < 5) {
        cplx x(unif(rng), unif(rng));
        bool ok = true;
        for (const auto& p : ram.points)
            if (!p.location.inf && std::abs(x - p.location.z) < 0.25 * nn) ok = false;
        if (!ok) continue;
        logs.push_back(log_A_at(ram, x));
    }
    double lo = *std::min_element(logs.begin(), logs.end());
    double hi = *std::max_element(logs.begin(), logs.end());
    for (double l : logs) ram.A_f_probes.push_back(std::exp(l));
    double logA = 0.0;
    for (double l : logs) logA += l / static_cast<double>(logs.size());
    ram.A_f = std::exp(logA);
    if (hi - lo > tol) {
        std::ostringstream os;
        os << "A_f is not constant over probe points (log spread " << hi - lo << ")";
        throw ConsistencyError(os.str());
    }
    {
        const RamifiedPoint& p = ram.points.back();
        const double third = (p.fiber == kFiberInf ? -1.0 : 1.0) / 3.0;
        ram.A_f_from_infinity = (p.ord + 1.0) * std::pow(std::abs(p.c), third);
        if (std::abs(std::log(ram.A_f_from_infinity) - logA) > tol) {
            std::ostringstream os;
            os << "A_f = " << ram.A_f << " disagrees with the value " << ram.A_f_from_infinity
               << " from the coefficient at infinity";
            throw ConsistencyError(os.str());
        }
    }

    // Pairwise-distance route for C_f.
    double pair = 0.0, sum_inv = 0.0, sum_m = 0.0;
    for (std::size_t a = 0; a < ram.points.size(); ++a) {
        const auto& pa = ram.points[a];
        const double ma = pa.ord + 1.0;
        sum_inv += 3.0 / ma;
        sum_m += (ma / 3.0 + 3.0 / ma) * std::log(ma);
        if (pa.location.inf) continue;
        for (std::size_t b = 0; b < ram.points.size(); ++b) {
            const auto& pb = ram.points[b];
            if (b == a || pb.location.inf) continue;
            pair += (pa.ord - 2.0) * (pb.ord - 2.0) / ma * std::log(std::abs(pa.location.z - pb.location.z));
        }
    }
    ram.C_f_pairwise = pair / 18.0 + sum_m / 6.0 + (ram.degree - sum_inv) * logA / 6.0;
    if (std::abs(ram.C_f - ram.C_f_pairwise) > tol) {
        std::ostringstream os;
        os.precision(15);
        os << "C_f routes disagree: local coefficients give " << ram.C_f << ", pairwise distances give "
           << ram.C_f_pairwise;
        throw ConsistencyError(os.str());
    }
    return ram;
}

RationalMap compose(const RationalMap& g, const RationalMap& h) {
    const int n = g.degree();
    std::vector<Poly> hp(static_cast<std::size_t>(n) + 1), hq(static_cast<std::size_t>(n) + 1);
    hp[0] = Poly::constant(1);
    hq[0] = Poly::constant(1);
    for (int i = 1; i <= n; ++i) {
        hp[static_cast<std::size_t>(i)] = hp[static_cast<std::size_t>(i - 1)] * h.P;
        hq[static_cast<std::size_t>(i)] = hq[static_cast<std::size_t>(i - 1)] * h.Q;
    }
    auto homogenize = [&](const Poly& p) {
        Poly acc;
        for (int i = 0; i <= p.degree(); ++i) {
            if (p.coeff(i) == 0) continue;
            acc = acc + p.coeff(i) * (hp[static_cast<std::size_t>(i)] * hq[static_cast<std::size_t>(n - i)]);
        }
        return acc;
    };
    RationalMap out{homogenize(g.P), homogenize(g.Q), g.name};
    Poly common = gcd(out.P, out.Q);
    if (common.degree() > 0) {
        out.P = divmod(out.P, common).first;
        out.Q = divmod(out.Q, common).first;
    }
    // Normalize so that the denominator is monic.
    mpq_class s = 1 / out.Q.lead();
    out.P = s * out.P;
    out.Q = s * out.Q;
    return out;
}

RationalMap mobius_precompose(const RationalMap& f, const mpq_class& a, const mpq_class& b, const mpq_class& c,
                              const mpq_class& d) {
    if (a * d - b * c == 0) throw InputError("degenerate Moebius map (ad - bc = 0)");
    RationalMap mu{Poly({b, a}), Poly({d, c}), "mobius"};
    RationalMap out = compose(f, mu);
    out.name = f.name;
    return out;
}

Divisor pullback_divisor(const RamificationData& ram, const TriangleDivisor& base) {
    for (int j = 0; j < 3; ++j)
        if (!(base.get(j) > -1.0)) throw InputError("base orders must exceed -1");
    Divisor d;
    for (const auto& p : ram.points) {
        d.points.push_back(p.location);
        d.orders.push_back((p.ord + 1.0) * (base.get(p.fiber) + 1.0) - 1.0);
    }
    return d;
}

namespace {

Poly xpow(int n) { return Poly::monomial(1, n); }
Poly cst(long v) { return Poly::constant(mpq_class(v)); }

}  // namespace

RationalMap catalog(const std::string& name, int ell) {
    if (name == "cyclic") {
        if (ell < 1) throw InputError("cyclic map needs ell >= 1");
        return {xpow(ell), cst(1), "cyclic(" + std::to_string(ell) + ")"};
    }
    if (name == "dihedral") {
        if (ell < 1) throw InputError("dihedral map needs ell >= 1");
        Poly s = xpow(ell) + cst(1);
        return {mpq_class(4) * xpow(ell), s * s, "dihedral(" + std::to_string(ell) + ")"};
    }
    if (name == "tetrahedral") {
        Poly a = xpow(3) + cst(1);
        Poly b = xpow(3) - cst(8);
        return {mpq_class(-64) * a.pow(3), b.pow(3) * xpow(3), "tetrahedral"};
    }
    if (name == "octahedral") {
        Poly a = xpow(4) + cst(1);
        Poly b = xpow(8) - mpq_class(14) * xpow(4) + cst(1);
        return {mpq_class(-108) * a.pow(4) * xpow(4), b.pow(3), "octahedral"};
    }
    if (name == "icosahedral") {
        Poly a = xpow(10) - mpq_class(11) * xpow(5) - cst(1);
        Poly b = xpow(20) + mpq_class(228) * (xpow(15) - xpow(5)) + mpq_class(494) * xpow(10) + cst(1);
        return {mpq_class(1728) * xpow(5) * a.pow(5), b.pow(3), "icosahedral"};
    }
    throw InputError("unknown catalog map '" + name + "'");
}

RationalMap catalog_from_string(const std::string& spec) {
    std::string name;
    std::string digits;
    for (char ch : spec) {
        if (std::isalpha(static_cast<unsigned char>(ch))) name.push_back(static_cast<char>(std::tolower(ch)));
        else if (std::isdigit(static_cast<unsigned char>(ch))) digits.push_back(ch);
        else if (ch == '(' || ch == ')' || ch == ':' || ch == '_' || ch == ' ' || ch == '=') continue;
        else throw InputError("cannot parse catalog name '" + spec + "'");
    }
    int ell = 0;
    if (!digits.empty()) ell = std::stoi(digits);
    if ((name == "cyclic" || name == "dihedral") && digits.empty())
        throw InputError("catalog map '" + name + "' needs a parameter, e.g. " + name + "(3)");
    return catalog(name, ell);
}

}  // namespace bdet
