// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#include <doctest.h>

#include <cmath>
#include <algorithm>

#include "belyidet/belyi.hpp"

using namespace bdet;

namespace {

const double ln2 = std::log(2.0), ln3 = std::log(3.0), ln5 = std::log(5.0);

void check_riemann_hurwitz(const RamificationData& ram) {
    int fiber_sum[3] = {0, 0, 0};
    int total_ord = 0;
    for (const auto& p : ram.points) {
        REQUIRE(p.fiber >= 0);
        REQUIRE(p.fiber <= 2);
        fiber_sum[p.fiber] += p.ord + 1;
        total_ord += p.ord;
    }
    for (int j = 0; j < 3; ++j) CHECK(fiber_sum[j] == ram.degree);
    // Only the ramified points and the poles and zeros are listed, so check the
    // ramification total rather than the point count.
    CHECK(total_ord == 2 * ram.degree - 2);
}

}  // namespace

TEST_CASE("catalog degrees and validation") {
    CHECK(catalog("cyclic", 5).degree() == 5);
    CHECK(catalog("dihedral", 3).degree() == 6);
    CHECK(catalog("tetrahedral").degree() == 12);
    CHECK(catalog("octahedral").degree() == 24);
    CHECK(catalog("icosahedral").degree() == 60);
    CHECK(catalog_from_string("Dihedral(4)").name == "dihedral(4)");
    CHECK_THROWS_AS(catalog_from_string("dihedral"), InputError);
    CHECK_THROWS_AS(catalog_from_string("nope"), InputError);
    CHECK_THROWS_AS(catalog("cyclic", 0), InputError);
}

TEST_CASE("non-Belyi maps are rejected") {
    RationalMap f;
    f.P = Poly(std::vector<mpq_class>{0, 0, 0, 1, 0});
    f.Q = Poly(std::vector<mpq_class>{1});
    f.P = f.P + Poly(std::vector<mpq_class>{0, 1});  // x^3 + x has critical values off {0, 1, inf}
    CHECK_THROWS_AS(analyze(f), InputError);
    RationalMap zero;
    zero.P = Poly();
    zero.Q = Poly(std::vector<mpq_class>{1});
    CHECK_THROWS_AS(validate(zero), InputError);
}

TEST_CASE("Riemann-Hurwitz and fiber sums are exact") {
    for (const char* name : {"cyclic(1)", "cyclic(4)", "dihedral(2)", "dihedral(5)", "tetrahedral", "octahedral",
                             "icosahedral"}) {
        CAPTURE(name);
        check_riemann_hurwitz(analyze(catalog_from_string(name)));
    }
}

TEST_CASE("C_f of the catalog maps") {
    CHECK(std::fabs(analyze(catalog("cyclic", 3)).C_f) < 1e-8);
    for (int l = 2; l <= 6; ++l) {
        CAPTURE(l);
        const auto ram = analyze(catalog("dihedral", l));
        CHECK(std::fabs(ram.C_f - 2.0 / 3 * (l - 1.0 / l) * ln2) < 1e-8);
        CHECK(std::fabs(ram.C_f - ram.C_f_pairwise) < 1e-8);
    }
    const auto tet = analyze(catalog("tetrahedral"));
    CHECK(std::fabs(tet.C_f - (ln2 + 9.0 / 4 * ln3)) < 1e-8);
    CHECK(std::fabs(tet.C_f - tet.C_f_pairwise) < 1e-8);
    const auto oct = analyze(catalog("octahedral"));
    CHECK(std::fabs(oct.C_f - (9.0 / 4 * ln3 + 119.0 / 18 * ln2)) < 1e-8);
    CHECK(std::fabs(oct.C_f - oct.C_f_pairwise) < 1e-8);
    const auto ico = analyze(catalog("icosahedral"));
    CHECK(std::fabs(ico.C_f - (139.0 / 15 * ln2 + 63.0 / 10 * ln3 + 125.0 / 36 * ln5)) < 1e-8);
    CHECK(std::fabs(ico.C_f - ico.C_f_pairwise) < 1e-8);
}

TEST_CASE("A_f of the octahedral map and probe invariance") {
    const auto oct = analyze(catalog("octahedral"));
    const double expected = 12.0 * std::cbrt(4.0);
    CHECK(std::fabs(oct.A_f - expected) < 1e-8);
    CHECK(std::fabs(oct.A_f_from_infinity - expected) < 1e-8);
    REQUIRE(oct.A_f_probes.size() >= 2);
    for (double a : oct.A_f_probes) CHECK(std::fabs(a - expected) < 1e-8);
}

TEST_CASE("local coefficients of x^l") {
    const auto ram = analyze(catalog("cyclic", 4));
    for (const auto& p : ram.points) {
        if (p.location.inf) {
            CHECK(p.ord == 3);
            CHECK(p.fiber == kFiberInf);
        } else if (std::abs(p.location.z) < 1e-12) {
            CHECK(p.ord == 3);
            CHECK(p.fiber == 0);
            CHECK(std::abs(p.c - 1.0) < 1e-12);
        } else {
            CHECK(p.ord == 0);
            CHECK(p.fiber == 1);
        }
    }
}

TEST_CASE("jet of the logarithmic derivative") {
    const auto ram = analyze(catalog("tetrahedral"));
    const cplx x{0.37, -0.21};
    const double h = 1e-5;
    const auto j = ram.jet(x);
    const auto jp = ram.jet(x + h), jm = ram.jet(x - h);
    CHECK(std::abs((jp.L1 - jm.L1) / (2 * h) - j.L2) < 1e-6 * std::max(1.0, std::abs(j.L2)));
    CHECK(std::abs((jp.L2 - jm.L2) / (2 * h) - j.L3) < 1e-5 * std::max(1.0, std::abs(j.L3)));
    CHECK(std::abs(j.f - 1.0 - j.f_minus_1) < 1e-10 * std::max(1.0, std::abs(j.f)));
}

TEST_CASE("composition multiplies degrees") {
    const RationalMap g = catalog("cyclic", 2);
    const RationalMap h = catalog("dihedral", 3);
    const RationalMap gh = compose(g, h);
    CHECK(gh.degree() == 12);
    const cplx x{0.3, 0.4};
    const cplx hx = h.P.eval(x) / h.Q.eval(x);
    CHECK(std::abs(gh.P.eval(x) / gh.Q.eval(x) - hx * hx) < 1e-12);
}

TEST_CASE("Moebius precomposition keeps the ramification profile") {
    const RationalMap f = catalog("octahedral");
    const RationalMap g = mobius_precompose(f, 0, 1, 1, 3);  // x -> 1 / (x + 3)
    const auto rf = analyze(f), rg = analyze(g);
    CHECK(rg.degree == rf.degree);
    check_riemann_hurwitz(rg);
    std::vector<int> a, b;
    for (const auto& p : rf.points) a.push_back(p.fiber * 100 + p.ord);
    for (const auto& p : rg.points) b.push_back(p.fiber * 100 + p.ord);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
}

TEST_CASE("pullback divisor degree") {
    const auto ram = analyze(catalog("icosahedral"));
    const TriangleDivisor t{-0.4, -0.5, -0.2};
    const Divisor d = pullback_divisor(ram, t);
    // f^* keeps the Euler characteristic bookkeeping: |f^*b| + 2 = deg f (|b| + 2).
    CHECK(std::fabs(d.degree() + 2.0 - 60.0 * (t.degree() + 2.0)) < 1e-12);
    for (std::size_t k = 0; k < d.size(); ++k) CHECK(d.orders[k] > -1.0);
}
