// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace bdet {

using cplx = std::complex<double>;

// Raised for malformed or out-of-domain input (CLI exit code 2).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when two routes that must agree do not (CLI exit code 3).
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A point of the extended complex plane.
struct SpherePoint {
    bool inf = false;
    cplx z{0.0, 0.0};

    static SpherePoint infinity() { return {true, {0.0, 0.0}}; }
    static SpherePoint at(cplx w) { return {false, w}; }
};

// Marked points with real conical orders.
struct Divisor {
    std::vector<SpherePoint> points;
    std::vector<double> orders;

    double degree() const;
    std::size_t size() const { return points.size(); }
};

std::string describe(const SpherePoint& p);

}  // namespace bdet
