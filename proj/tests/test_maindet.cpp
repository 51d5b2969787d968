// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "belyidet/accessory.hpp"
#include "belyidet/maindet.hpp"

using namespace bdet;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZetaPrimeM1 = -0.16542114370045092921;

// Closed forms at area 4 pi, evaluated in mpmath at 30 digits. The
// dodecahedron uses the frozen calC(-1/10).
constexpr double kTetra = 1.09532607578331048;
constexpr double kOcta = 1.17690483400778898;
constexpr double kCube = 1.19047188800590133;
constexpr double kIcosa = 1.19594698310717976;
constexpr double kDodeca = 1.18972059002415145;

double at_4pi(const GluedDeterminantReport& r) { return rescale_log_det(r.as_result(), 4 * kPi).log_det; }

double glued_4pi(const char* map, TriangleDivisor t) {
    return at_4pi(theorem_main(analyze(catalog_from_string(map)), make_flat3(t)));
}

}  // namespace

TEST_CASE("closed forms match the tetrahedron formula") {
    const double tet = std::log(4.0 / 3) - 3 * std::lgamma(2.0 / 3) + 1.5 * std::log(kPi);
    CHECK(std::fabs(tet - kTetra) < 1e-14);
    const double oct = 6 * kZetaPrimeM1 + 35.0 / 24 * std::log(4.0 / 3) - 6.5 * std::lgamma(2.0 / 3) + 3.25 * std::log(kPi);
    CHECK(std::fabs(oct - kOcta) < 1e-13);
}

TEST_CASE("flat Platonic solids through theorem_main over a flat base") {
    CHECK(std::fabs(glued_4pi("tetrahedral", {-2.0 / 3, -0.5, -5.0 / 6}) - kTetra) < 1e-7);
    CHECK(std::fabs(glued_4pi("cyclic(3)", {-5.0 / 6, -0.5, -2.0 / 3}) - kTetra) < 1e-7);
    CHECK(std::fabs(glued_4pi("octahedral", {-5.0 / 6, -0.5, -2.0 / 3}) - kOcta) < 1e-7);
    CHECK(std::fabs(glued_4pi("octahedral", {-0.75, -0.5, -0.75}) - kCube) < 1e-7);
    CHECK(std::fabs(glued_4pi("icosahedral", {-5.0 / 6, -0.5, -2.0 / 3}) - kIcosa) < 1e-7);
    CHECK(std::fabs(glued_4pi("icosahedral", {-0.8, -0.5, -0.7}) - kDodeca) < 1e-7);
}

TEST_CASE("flat Platonic solids through the flat formula") {
    const struct {
        const char* name;
        double value;
    } solids[] = {{"tetrahedron", kTetra}, {"octahedron", kOcta},     {"cube", kCube},
                  {"icosahedron", kIcosa}, {"dodecahedron", kDodeca}};
    for (const auto& s : solids) {
        CAPTURE(s.name);
        const auto cfg = platonic_flat_configuration(solid_from_string(s.name));
        CHECK(std::fabs(cfg.target_area - 4 * kPi) < 1e-14);
        CHECK(std::fabs(flat_log_det(cfg).log_det - s.value) < 1e-7);
        const auto rep = platonic_log_det(solid_from_string(s.name), flat_order(solid_from_string(s.name)),
                                          default_base_provider());
        CHECK(std::fabs(rep.result.log_det - s.value) < 1e-7);
        CHECK(rep.consistent);
        CHECK(rep.max_deviation < 1e-9);
        CHECK(rep.cross_routes.size() >= 3);
    }
}

TEST_CASE("octahedron by three family theorems") {
    const double a = at_4pi(family_log_det(Family::Cyclic, 4, make_flat3({-5.0 / 6, -1.0 / 3, -5.0 / 6})));
    const double b = at_4pi(family_log_det(Family::Dihedral, 2, make_flat3({-2.0 / 3, -2.0 / 3, -2.0 / 3})));
    const double c = at_4pi(family_log_det(Family::Octahedral, 0, make_flat3({-5.0 / 6, -0.5, -2.0 / 3})));
    CHECK(std::fabs(a - b) < 1e-7);
    CHECK(std::fabs(a - c) < 1e-7);
    CHECK(std::fabs(b - c) < 1e-7);
    CHECK(std::fabs(a - kOcta) < 1e-7);
}

TEST_CASE("cyclic pullback of a spindle is a spindle") {
    for (int l = 2; l <= 4; ++l) {
        const auto ram = analyze(catalog("cyclic", l));
        for (double beta : {-0.7, -0.4, -0.1}) {
            CAPTURE(l);
            CAPTURE(beta);
            const auto rep = theorem_main(ram, make_spindle(beta));
            const double up = l * (beta + 1) - 1;
            const SpindleRaw raw = spindle_raw(up);
            LogDetResult direct{raw.log_det, raw.area,
                                Divisor{{SpherePoint::at(0.0), SpherePoint::infinity()}, {up, up}}, Route::Spindle};
            CHECK(std::fabs(rescale_log_det(direct, rep.area).log_det - rep.log_det) < 1e-9);
            CHECK(rep.outside_hypotheses);
        }
        // beta = 1/l - 1 glues to the round sphere.
        const auto round = theorem_main(ram, make_spindle(1.0 / l - 1));
        CHECK(std::fabs(at_4pi(round) - (0.5 - 4 * kZetaPrimeM1)) < 1e-9);
    }
}

TEST_CASE("itemized terms add up") {
    const auto ram = analyze(catalog("octahedral"));
    const auto rep = theorem_main(ram, make_flat3({-0.75, -0.5, -0.75}));
    CHECK(std::fabs(rep.terms.total() - (rep.log_det - std::log(24.0))) < 1e-12);
    CHECK(rep.area == 24.0);
    CHECK(std::fabs(rep.terms.C_f - ram.C_f) < 1e-15);
    const auto fam = family_log_det(Family::Octahedral, 0, make_flat3({-0.75, -0.5, -0.75}));
    CHECK(std::fabs(fam.terms.total() - (fam.log_det - std::log(24.0))) < 1e-12);
}

TEST_CASE("Moebius change of coordinates leaves the glued determinant unchanged") {
    const BaseSurface base = make_flat3({-0.75, -0.5, -0.75});
    const RationalMap f = catalog("octahedral");
    const double a = theorem_main(analyze(f), base).log_det;
    const double b = theorem_main(analyze(mobius_precompose(f, 0, 1, 1, 3)), base).log_det;
    const double c = theorem_main(analyze(mobius_precompose(f, 2, -1, 0, 1)), base).log_det;
    CHECK(std::fabs(a - b) < 1e-7);
    CHECK(std::fabs(a - c) < 1e-7);
}

TEST_CASE("Gauss-Bonnet bookkeeping of the pullback") {
    const auto ram = analyze(catalog("icosahedral"));
    const auto rep = theorem_main(ram, make_flat3({-0.8, -0.5, -0.7}));
    CHECK(std::fabs(rep.pullback.degree() + 2.0) < 1e-12);
    const auto pa = pullback_flat_area(ram, make_flat3({-0.8, -0.5, -0.7}));
    CHECK(pa.spread < 1e-9);
    const auto cfg = configuration_from_divisor(rep.pullback, 60.0);
    CHECK(std::fabs(metric_area(cfg) / pa.area - 1) < 1e-10);
}

TEST_CASE("Liouville action from the determinant matches the flat action") {
    const auto ram = analyze(catalog("tetrahedral"));
    const BaseSurface base = make_flat3({-2.0 / 3, -0.5, -5.0 / 6});
    const auto rep = theorem_main(ram, base);
    const double from_det = liouville_action(ram, base, rep.log_det);
    const auto cfg = configuration_from_divisor(rep.pullback, 12.0);
    CHECK(std::fabs(from_det - flat_liouville_action(cfg)) < 1e-9);
}

TEST_CASE("family and solid names") {
    CHECK(family_from_string("octahedral") == Family::Octahedral);
    CHECK(to_string(Family::Dihedral) == "dihedral");
    CHECK_THROWS_AS(family_from_string("square"), InputError);
    CHECK(family_degree(Family::Dihedral, 5) == 10);
    CHECK(family_degree(Family::Icosahedral, 0) == 60);
    const SolidSpec d = solid_from_string("dihedron(5)");
    CHECK(d.solid == Solid::Dihedron);
    CHECK(d.ell == 5);
    CHECK(to_string(d) == "dihedron(5)");
    CHECK_THROWS_AS(solid_from_string("dihedron"), InputError);
    CHECK_THROWS_AS(solid_from_string("torus"), InputError);
    CHECK(flat_order(solid_from_string("cube")) == -0.25);
    CHECK(flat_order(d) == doctest::Approx(-0.4));
}

TEST_CASE("dihedra") {
    const double expected[] = {0.865372419891599, 1.084741573266781, 1.136224317419826, 1.152554910376323};
    for (int l = 3; l <= 6; ++l) {
        CAPTURE(l);
        SolidSpec s{Solid::Dihedron, l};
        const auto rep = platonic_log_det(s, flat_order(s), default_base_provider());
        CHECK(rep.consistent);
        // Frozen from the flat formula on the l-th roots of unity.
        CHECK(std::fabs(rep.result.log_det - expected[l - 3]) < 1e-10);
        CHECK(std::fabs(flat_log_det(platonic_flat_configuration(s)).log_det - expected[l - 3]) < 1e-10);
    }
}

TEST_CASE("curved Platonic surfaces need a table") {
    CHECK_THROWS_AS(platonic_log_det(solid_from_string("cube"), -0.5, default_base_provider()), InputError);
    CHECK_THROWS_AS(platonic_log_det(solid_from_string("cube"), -1.0, default_base_provider()), InputError);
    // The tetrahedron at beta = 0 only needs a spindle base.
    const auto rep = platonic_log_det(solid_from_string("tetrahedron"), 0.0, default_base_provider());
    CHECK(std::fabs(rep.result.log_det - (0.5 - 4 * kZetaPrimeM1)) < 1e-9);
}

TEST_CASE("grid parsing") {
    const auto g = parse_grid("-0.95:0:0.01");
    REQUIRE(g.size() == 96);
    CHECK(g.front() == -0.95);
    CHECK(g.back() == 0.0);
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
    CHECK(parse_grid("1:1:0.5").size() == 1);
    CHECK_THROWS_AS(parse_grid("0:1:0"), InputError);
    CHECK_THROWS_AS(parse_grid("1:0:0.1"), InputError);
    CHECK_THROWS_AS(parse_grid("a:b:c"), InputError);
    CHECK_THROWS_AS(parse_grid("0:1"), InputError);
}

TEST_CASE("sweep with an external table keeps the grid order") {
    // Plumbing only: the table values are synthetic.
    std::istringstream in("beta0,beta1,betainf,phi0,phi1,phiinf,logdet_unit\n"
                          "-0.75,-0.25,-0.6666666666666666,0.1,0.2,0.3,-0.5\n");
    const ExternalTable table = read_external_table(in);
    const auto provider = default_base_provider(&table);
    const auto rows = sweep_platonic(solid_from_string("tetrahedron"), parse_grid("-0.5:0:0.25"), provider);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].beta == -0.5);
    CHECK(rows[1].beta == -0.25);
    CHECK(rows[2].beta == 0.0);
    CHECK(std::fabs(rows[0].log_det_4pi - kTetra) < 1e-9);
    CHECK(std::fabs(rows[2].log_det_4pi - (0.5 - 4 * kZetaPrimeM1)) < 1e-9);
    const auto direct = platonic_log_det(solid_from_string("tetrahedron"), -0.25, provider);
    CHECK(rows[1].log_det_4pi == doctest::Approx(direct.result.log_det).epsilon(1e-14));
    CHECK(direct.consistent);
    CHECK_FALSE(direct.skipped.empty());
}
