// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "belyidet/polyexact.hpp"

using namespace bdet;

namespace {

Poly P(std::initializer_list<long> c) {
    std::vector<mpq_class> v;
    for (long x : c) v.emplace_back(x);
    return Poly(v);
}

int total_multiplicity(const RootSet& r) {
    int n = 0;
    for (const auto& x : r) n += x.mult;
    return n;
}

}  // namespace

TEST_CASE("arithmetic and trimming") {
    const Poly a = P({1, 2, 1});  // (x + 1)^2
    const Poly b = P({1, 1});
    CHECK(a == b.pow(2));
    CHECK((a - a).is_zero());
    CHECK((a - a).degree() == -1);
    CHECK(a.derivative() == P({2, 2}));
    CHECK((mpq_class(1, 2) * P({2, 4})) == P({1, 2}));
    CHECK(P({0, 0, 3}).monic() == P({0, 0, 1}));
    CHECK(a.coeff(7) == 0);
}

TEST_CASE("decimal string round trip") {
    const std::vector<std::string> s = {"-108", "0", "123456789012345678901234567890", "1/3"};
    const Poly p = Poly::from_strings(s);
    CHECK(p.to_strings() == s);
    CHECK_THROWS(Poly::from_strings({"abc"}));
}

TEST_CASE("division with remainder") {
    const Poly a = P({-1, 0, 0, 1});  // x^3 - 1
    const Poly b = P({-1, 1});
    const auto [q, r] = divmod(a, b);
    CHECK(q == P({1, 1, 1}));
    CHECK(r.is_zero());
    const auto [q2, r2] = divmod(P({1, 0, 1}), b);
    CHECK(q2 * b + r2 == P({1, 0, 1}));
    CHECK(r2.degree() < b.degree());
}

TEST_CASE("gcd is monic and exact") {
    const Poly g = gcd(P({-1, 0, 1}) * P({2, 1}), P({-1, 1}) * P({5, 0, 1}));
    CHECK(g == P({-1, 1}));
}

TEST_CASE("square-free decomposition recovers multiplicities") {
    // x^3 (x - 1)^2 (x^2 + 1)
    const Poly p = P({0, 1}).pow(3) * P({-1, 1}).pow(2) * P({1, 0, 1});
    const auto parts = squarefree_decomposition(p);
    int deg = 0;
    for (const auto& [f, m] : parts) deg += f.degree() * m;
    CHECK(deg == p.degree());
    const RootSet roots = squarefree_roots(p);
    CHECK(total_multiplicity(roots) == 7);
    auto mult_at = [&](cplx z) {
        for (const auto& r : roots)
            if (std::abs(r.z - z) < 1e-12) return r.mult;
        return 0;
    };
    CHECK(mult_at(0.0) == 3);
    CHECK(mult_at(1.0) == 2);
    CHECK(mult_at({0.0, 1.0}) == 1);
    CHECK(mult_at({0.0, -1.0}) == 1);
}

TEST_CASE("roots of a high-degree square-free polynomial") {
    // x^11 + 11 x^6 - x: the icosahedral vertex polynomial.
    const Poly p = P({0, -1, 0, 0, 0, 0, 11, 0, 0, 0, 0, 1});
    const auto r = simple_roots(p);
    REQUIRE(r.size() == 11);
    for (const auto& z : r) CHECK(std::abs(p.eval(z)) < 1e-10 * std::max(1.0, std::pow(std::abs(z), 11)));
}

TEST_CASE("Taylor coefficients") {
    // (x - 2)^3 at 2 is t^3.
    const auto c = taylor_coeffs_at(P({-2, 1}).pow(3), 2.0, 5);
    REQUIRE(c.size() == 5);
    CHECK(std::abs(c[0]) < 1e-14);
    CHECK(std::abs(c[1]) < 1e-14);
    CHECK(std::abs(c[2]) < 1e-14);
    CHECK(std::abs(c[3] - 1.0) < 1e-14);
    CHECK(std::abs(c[4]) < 1e-14);
}

TEST_CASE("evaluation in long double agrees") {
    const Poly p = P({3, -1, 4, 1, -5});
    const cplx z{0.3, -1.2};
    const auto w = p.eval_ld(std::complex<long double>(0.3L, -1.2L));
    CHECK(std::abs(p.eval(z) - cplx(static_cast<double>(w.real()), static_cast<double>(w.imag()))) < 1e-13);
}
