// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#pragma once

#include "belyidet/types.hpp"

namespace bdet {

// Hurwitz zeta zeta_H(s, a) for real s != 1 and a > 0.
long double hurwitz_zeta(long double s, long double a);

// d/ds zeta_H(s, a) for real s != 1 and a > 0.
long double hurwitz_zeta_deriv(long double s, long double a);

// log|Gamma(x)| and the sign of Gamma(x); x must not be a pole.
long double log_abs_gamma(long double x);
int gamma_sign(long double x);

long double digamma(long double x);

// zeta_R'(-1), computed once from hurwitz_zeta_deriv(-1, 1).
double zeta_r_prime_m1();

// The constant 1/6 - (4/3)ln2 - 4 zeta_R'(-1) - ln(pi).
double big_c();

struct SpecialConstants {
    double zetaR_prime_m1;
    double bigC;
};
SpecialConstants special_constants();

// d/ds of the double zeta sum_{m,n>=0} (a m + n + 1)^{-s} at s = 0.
long double barnes_zeta_deriv0(long double a);

// The function calC(beta), beta > -1.
double calC(double beta);

struct TriangleDivisor {
    double beta0 = 0.0;
    double beta1 = 0.0;
    double betaInf = 0.0;

    double degree() const { return beta0 + beta1 + betaInf; }
    // beta_j - degree/2 > 0 for every j.
    bool exists() const;
    double get(int j) const;  // j = 0, 1, 2 (2 stands for infinity)
};

// Psi(beta0, beta1, betaInf): the constant term of the unit-area metric
// potential at the point carrying the first argument.
double psi(double beta0, double beta1, double betaInf);

// Value at s = 0 of the spectral zeta function for the given orders.
double zeta0(const std::vector<double>& orders);
double zeta0(const Divisor& d);

}  // namespace bdet
