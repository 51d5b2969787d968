// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#pragma once

#include <array>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "belyidet/specfun.hpp"

namespace bdet {

enum class BaseKind { Flat3, Spindle, External };
std::string to_string(BaseKind k);

// A unit-area sphere with three conical points at 0, 1 and infinity.
struct BaseSurface {
    TriangleDivisor triangle;
    double phi0 = 0.0;
    double phi1 = 0.0;
    double phiInf = 0.0;
    double log_det_unit = 0.0;
    BaseKind kind = BaseKind::Flat3;
    // Set for spindles, which sit on the boundary of the existence region.
    bool boundary = false;

    double phi(int j) const;  // j = 0, 1, 2 (infinity)
};

// Flat base |beta| = -2. The value is cross-checked against the flat
// determinant formula on {0, 1, inf} at unit area; disagreement beyond tol
// raises ConsistencyError.
BaseSurface make_flat3(const TriangleDivisor& t, double tol = 1e-9);

// Constant curvature spindle with orders (beta, 0, beta).
BaseSurface make_spindle(double beta);

// Raw spindle data at its natural area 4 pi (beta + 1).
struct SpindleRaw {
    double area;
    double log_det;  // log det at that area
    std::array<double, 3> phi;
};
SpindleRaw spindle_raw(double beta);

// User-supplied base. Missing phi entries default to Psi with the orders permuted.
BaseSurface make_external(const TriangleDivisor& t, const std::array<std::optional<double>, 3>& phi,
                          double log_det_unit);

// Rows of "beta0,beta1,betainf,phi0,phi1,phiinf,logdet_unit".
struct ExternalTable {
    std::vector<BaseSurface> rows;

    // Row whose orders match t to within tol, if any.
    std::optional<BaseSurface> find(const TriangleDivisor& t, double tol = 1e-9) const;
};
ExternalTable read_external_table(std::istream& in);
ExternalTable read_external_table_file(const std::string& path);

// Supplies a base for a requested triangle divisor.
using BaseProvider = std::function<BaseSurface(const TriangleDivisor&)>;

// Table rows take precedence. Otherwise flat bases when |beta| = -2 and
// spindles for (b, 0, b); anything else raises an InputError saying that a
// curved base needs an external table.
BaseProvider default_base_provider(const ExternalTable* table = nullptr);

}  // namespace bdet
