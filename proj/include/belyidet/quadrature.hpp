// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#pragma once

#include <vector>

#include "belyidet/types.hpp"

namespace bdet {

// Integral over the plane of prod_k |x - x_k|^{2 beta_k} dA(x). The order at
// infinity is implied by the finite ones and must exceed -1 for convergence.
//
// The plane is split by a smooth partition of unity: a bump around every
// singular point, one around infinity (handled in the chart y = 1/x), and a
// compactly supported smooth remainder. Bump disks use Gauss-Jacobi nodes in
// s = r^2 for the algebraic singularity and a trapezoid rule in the angle.
double weighted_plane_area(const std::vector<cplx>& points, const std::vector<double>& orders,
                           double rel_tol = 1e-11);

// The same integral computed from the developing map F' = prod (x - x_k)^{beta_k}.
// With parallel cuts from every cone point to infinity, Stokes' theorem turns
// the area into a sum over cuts of conj(F(x_k)) (1 - e^{2 pi i beta_k}) G_k / 2i,
// where G_k is the integral of F' along the k-th cut. Only 1D integrals remain.
double flat_area_by_cuts(const std::vector<cplx>& points, const std::vector<double>& orders);

}  // namespace bdet
