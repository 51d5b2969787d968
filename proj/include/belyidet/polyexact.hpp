// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "belyidet/types.hpp"

namespace bdet {

// Univariate polynomial with exact rational coefficients, stored ascending.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<mpq_class> coeffs);

    static Poly constant(const mpq_class& c);
    static Poly monomial(const mpq_class& c, int power);
    static Poly x() { return monomial(1, 1); }
    // Parses decimal integer or "p/q" strings, ascending order.
    static Poly from_strings(const std::vector<std::string>& coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    mpq_class coeff(int i) const;
    const mpq_class& lead() const { return c_.back(); }

    Poly derivative() const;
    Poly pow(int n) const;
    Poly monic() const;

    cplx eval(cplx x) const;
    std::complex<long double> eval_ld(std::complex<long double> x) const;
    std::vector<std::string> to_strings() const;
    std::string to_string() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const mpq_class& s, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<mpq_class> c_;
};

// Exact Euclidean division a = q b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

// Yun's algorithm: p = lead * prod_i f_i^{m_i} with f_i monic, square-free and
// pairwise coprime. Factors are returned with their multiplicities.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

struct Root {
    cplx z;
    int mult;
};
using RootSet = std::vector<Root>;

// All complex roots of a square-free polynomial.
std::vector<cplx> simple_roots(const Poly& sf);

// Roots with multiplicities taken from the exact square-free decomposition.
RootSet squarefree_roots(const Poly& p);

// First `count` Taylor coefficients of p at x0. The expansion is carried out
// exactly on the dyadic rational value of x0 and rounded once at the end.
std::vector<cplx> taylor_coeffs_at(const Poly& p, cplx x0, int count);

}  // namespace bdet
