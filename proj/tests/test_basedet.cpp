// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "belyidet/basedet.hpp"
#include "belyidet/flatdet.hpp"

using namespace bdet;

namespace {
constexpr double kZetaPrimeM1 = -0.16542114370045092921;
constexpr double kPi = std::numbers::pi;
const char* kHeader = "beta0,beta1,betainf,phi0,phi1,phiinf,logdet_unit\n";
}  // namespace

TEST_CASE("flat base agrees with the flat determinant") {
    for (const TriangleDivisor& t : {TriangleDivisor{-2.0 / 3, -2.0 / 3, -2.0 / 3}, TriangleDivisor{-0.5, -0.75, -0.75},
                                     TriangleDivisor{-0.8, -0.5, -0.7}}) {
        const BaseSurface b = make_flat3(t);
        FlatConfiguration cfg;
        cfg.finite_points = {0.0, 1.0};
        cfg.orders = {t.beta0, t.beta1};
        cfg.order_at_infinity = t.betaInf;
        cfg.target_area = 1.0;
        const double plane = metric_area(cfg, AreaMethod::Plane2D, 1e-7);
        CHECK(std::fabs(b.log_det_unit - flat_log_det(cfg, plane).log_det) < 1e-6);
        CHECK(b.kind == BaseKind::Flat3);
        CHECK_FALSE(b.boundary);
        CHECK(b.phi(0) == b.phi0);
        CHECK(b.phi(2) == b.phiInf);
    }
}

TEST_CASE("flat base domain") {
    CHECK_THROWS_AS(make_flat3({-0.5, -0.5, -0.5}), InputError);
    CHECK_THROWS_AS(make_flat3({0.2, -1.1, -1.1}), InputError);
}

TEST_CASE("smooth spindle is the round sphere") {
    const SpindleRaw r = spindle_raw(0.0);
    CHECK(std::fabs(r.area - 4 * kPi) < 1e-14);
    CHECK(std::fabs(r.log_det - (0.5 - 4 * kZetaPrimeM1)) < 1e-12);
    CHECK(std::fabs(r.phi[0] - std::log(2.0)) < 1e-15);
    CHECK(std::fabs(r.phi[1]) < 1e-15);
}

TEST_CASE("spindle unit normalization") {
    for (double beta : {-0.7, -0.4, 0.0, 0.5}) {
        const SpindleRaw raw = spindle_raw(beta);
        const BaseSurface b = make_spindle(beta);
        CHECK(b.kind == BaseKind::Spindle);
        CHECK(b.boundary);
        CHECK(b.triangle.beta1 == 0.0);
        LogDetResult unit{b.log_det_unit, 1.0, Divisor{{SpherePoint::at(0.0), SpherePoint::infinity()}, {beta, beta}},
                          Route::Spindle};
        CHECK(std::fabs(rescale_log_det(unit, raw.area).log_det - raw.log_det) < 1e-13);
        CHECK(std::fabs(b.phi0 - (raw.phi[0] - 0.5 * std::log(raw.area))) < 1e-15);
    }
    CHECK_THROWS_AS(spindle_raw(-1.0), InputError);
}

TEST_CASE("external table parses and round-trips") {
    std::istringstream in(std::string(kHeader) +
                          "-0.3,-0.4,-0.5,0.1,0.2,0.3,-1.25\n"
                          "\n"
                          "-0.2,-0.2,-0.2,,,,0.5\r\n");
    const ExternalTable t = read_external_table(in);
    REQUIRE(t.rows.size() == 2);
    const auto row = t.find({-0.3, -0.4, -0.5});
    REQUIRE(row);
    CHECK(row->kind == BaseKind::External);
    CHECK(row->phi0 == 0.1);
    CHECK(row->phi1 == 0.2);
    CHECK(row->phiInf == 0.3);
    CHECK(row->log_det_unit == -1.25);
    // Missing coefficients fall back to Psi.
    const auto fill = t.find({-0.2, -0.2, -0.2});
    REQUIRE(fill);
    CHECK(std::fabs(fill->phi0 - psi(-0.2, -0.2, -0.2)) < 1e-15);
    CHECK_FALSE(t.find({-0.3, -0.4, -0.6}));
}

TEST_CASE("external table errors") {
    std::istringstream no_header("-0.3,-0.4,-0.5,0.1,0.2,0.3,-1.25\n");
    CHECK_THROWS_AS(read_external_table(no_header), InputError);
    std::istringstream short_row(std::string(kHeader) + "-0.3,-0.4,-0.5,0.1\n");
    CHECK_THROWS_AS(read_external_table(short_row), InputError);
    std::istringstream bad_number(std::string(kHeader) + "-0.3,x,-0.5,0.1,0.2,0.3,-1.25\n");
    CHECK_THROWS_AS(read_external_table(bad_number), InputError);
    std::istringstream bad_order(std::string(kHeader) + "-1.3,-0.4,-0.5,0.1,0.2,0.3,-1.25\n");
    CHECK_THROWS_AS(read_external_table(bad_order), InputError);
    std::istringstream empty("");
    CHECK_THROWS_AS(read_external_table(empty), InputError);
    CHECK_THROWS_AS(read_external_table_file("/nonexistent/table.csv"), InputError);
}

TEST_CASE("default provider order of preference") {
    std::istringstream in(std::string(kHeader) + "-0.5,-0.5,-1e-9,0,0,0,7\n-0.5,-0.7,-0.8,0,0,0,9\n");
    const ExternalTable table = read_external_table(in);
    const BaseProvider with_table = default_base_provider(&table);
    const BaseProvider plain = default_base_provider();
    // A table row wins over the flat formula.
    CHECK(with_table({-0.5, -0.7, -0.8}).log_det_unit == 9.0);
    CHECK(plain({-0.5, -0.7, -0.8}).kind == BaseKind::Flat3);
    CHECK(plain({-0.4, 0.0, -0.4}).kind == BaseKind::Spindle);
    CHECK_THROWS_AS(plain({-0.4, -0.1, -0.4}), InputError);
    CHECK(with_table({-0.5, -0.5, -1e-9}).kind == BaseKind::External);
}
