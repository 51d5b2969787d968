// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#include "belyidet/specfun.hpp"

#include <boost/math/special_functions/digamma.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace bdet {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

// Value and first derivative with respect to s.
struct Dual {
    long double v;
    long double d;
};

Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
Dual operator*(long double c, Dual a) { return {c * a.v, c * a.d}; }
Dual operator/(Dual a, Dual b) {
    return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
}

// x^{-(s + shift)} with s the differentiation variable.
Dual pow_neg(long double x, Dual s, long double shift) {
    long double lx = std::log(x);
    long double v = std::exp(-(s.v + shift) * lx);
    return {v, -lx * v * s.d};
}

// B_2, B_4, ..., B_30
constexpr std::array<long double, 15> kBernoulli = {
    1.0L / 6.0L,
    -1.0L / 30.0L,
    1.0L / 42.0L,
    -1.0L / 30.0L,
    5.0L / 66.0L,
    -691.0L / 2730.0L,
    7.0L / 6.0L,
    -3617.0L / 510.0L,
    43867.0L / 798.0L,
    -174611.0L / 330.0L,
    854513.0L / 138.0L,
    -236364091.0L / 2730.0L,
    8553103.0L / 6.0L,
    -23749461029.0L / 870.0L,
    8615841276005.0L / 14322.0L,
};

constexpr int kShift = 30;

// Euler-Maclaurin with an explicit shift count and Bernoulli tail.
Dual hurwitz_em(long double s_val, long double a) {
    if (!(a > 0.0L)) {
        std::ostringstream os;
        os << "Hurwitz zeta requires a > 0, got a = " << static_cast<double>(a);
        throw InputError(os.str());
    }
    if (s_val == 1.0L) throw InputError("Hurwitz zeta has a pole at s = 1");
    const Dual s{s_val, 1.0L};
    Dual sum{0.0L, 0.0L};
    for (int n = 0; n < kShift; ++n) sum = sum + pow_neg(a + n, s, 0.0L);
    const long double x = a + kShift;
    // x^{1-s}/(s-1)
    sum = sum + pow_neg(x, s, -1.0L) / Dual{s.v - 1.0L, 1.0L};
    sum = sum + 0.5L * pow_neg(x, s, 0.0L);
    // rising factorial s (s+1) ... (s+2j-2), kept as a dual number
    Dual rising = s;
    long double fact = 2.0L;  // (2j)!
    for (std::size_t j = 1; j <= kBernoulli.size(); ++j) {
        if (j > 1) {
            rising = rising * Dual{s.v + 2.0L * j - 3.0L, 1.0L};
            rising = rising * Dual{s.v + 2.0L * j - 2.0L, 1.0L};
            fact *= (2.0L * j - 1.0L) * (2.0L * j);
        }
        Dual term = (kBernoulli[j - 1] / fact) * (rising * pow_neg(x, s, 2.0L * j - 1.0L));
        sum = sum + term;
    }
    return sum;
}

}  // namespace

double Divisor::degree() const {
    double d = 0.0;
    for (double b : orders) d += b;
    return d;
}

std::string describe(const SpherePoint& p) {
    if (p.inf) return "inf";
    std::ostringstream os;
    os.precision(10);
    os << "(" << p.z.real() << (p.z.imag() < 0 ? "-" : "+") << std::abs(p.z.imag()) << "i)";
    return os.str();
}

long double hurwitz_zeta(long double s, long double a) { return hurwitz_em(s, a).v; }

long double hurwitz_zeta_deriv(long double s, long double a) { return hurwitz_em(s, a).d; }

long double log_abs_gamma(long double x) {
    if (x <= 0.0L && x == std::floor(x)) {
        std::ostringstream os;
        os << "Gamma has a pole at " << static_cast<double>(x);
        throw InputError(os.str());
    }
    return std::lgamma(x);
}

int gamma_sign(long double x) {
    if (x > 0.0L) return 1;
    // Gamma alternates sign between consecutive negative integers.
    long double k = std::ceil(-x);
    return (static_cast<long long>(k) % 2 == 0) ? 1 : -1;
}

long double digamma(long double x) { return boost::math::digamma(x); }

double zeta_r_prime_m1() {
    static const double value = static_cast<double>(hurwitz_zeta_deriv(-1.0L, 1.0L));
    return value;
}

double big_c() {
    static const double value = static_cast<double>(
        1.0L / 6.0L - 4.0L / 3.0L * std::log(2.0L) - 4.0L * hurwitz_zeta_deriv(-1.0L, 1.0L) -
        std::log(kPi));
    return value;
}

SpecialConstants special_constants() { return {zeta_r_prime_m1(), big_c()}; }

long double barnes_zeta_deriv0(long double a) {
    if (!(a > 0.0L)) throw InputError("double zeta requires a > 0");
    // Direct lnGamma head, then the Euler-Maclaurin remainder of
    // sum_m zeta_H'(0, 1 + a m) expressed through Hurwitz zeta in q = 1/a + M.
    const int M = std::max(static_cast<int>(std::ceil(20.0L / a)), 10);
    const long double half_log_2pi = 0.5L * std::log(2.0L * kPi);
    long double head = 0.0L;
    for (int m = 0; m < M; ++m) head += std::lgamma(1.0L + a * m) - half_log_2pi;

    const long double q = 1.0L / a + M;
    const long double la = std::log(a);
    const Dual zm1 = hurwitz_em(-1.0L, q);
    const Dual z0 = hurwitz_em(0.0L, q);
    long double tail = a * la * zm1.v - a * zm1.d - a * zm1.v;
    tail += 0.5L * (-la * z0.v + z0.d);
    tail += -(la + digamma(q)) / (12.0L * a);
    long double fact_2j = 24.0L;      // (2j)! starting at j = 2
    long double fact_2j_m2 = 2.0L;    // (2j-2)!
    for (int j = 2; j <= 11; ++j) {
        if (j > 2) {
            fact_2j *= (2.0L * j - 1.0L) * (2.0L * j);
            fact_2j_m2 *= (2.0L * j - 3.0L) * (2.0L * j - 2.0L);
        }
        tail += kBernoulli[j - 1] / fact_2j * fact_2j_m2 * std::pow(a, 1.0L - 2.0L * j) *
                hurwitz_zeta(2.0L * j - 1.0L, q);
    }
    return head + tail;
}

double calC(double beta) {
    if (!(beta > -1.0) || !std::isfinite(beta)) {
        std::ostringstream os;
        os << "calC is defined for beta > -1, got " << beta;
        throw InputError(os.str());
    }
    const long double b = beta;
    const long double a = b + 1.0L;
    long double v = 2.0L * barnes_zeta_deriv0(a) - 2.0L * hurwitz_zeta_deriv(-1.0L, 1.0L) -
                    b * b * std::log(2.0L) / (6.0L * a) - b / 12.0L + 0.5L * std::log(a);
    return static_cast<double>(v);
}

bool TriangleDivisor::exists() const {
    const double half = degree() / 2.0;
    return beta0 - half > 0.0 && beta1 - half > 0.0 && betaInf - half > 0.0;
}

double TriangleDivisor::get(int j) const {
    switch (j) {
        case 0: return beta0;
        case 1: return beta1;
        case 2: return betaInf;
        default: throw InputError("triangle index must be 0, 1 or 2 (infinity)");
    }
}

double psi(double beta0, double beta1, double betaInf) {
    std::ostringstream where;
    where << "(" << beta0 << ", " << beta1 << ", " << betaInf << ")";
    for (double b : {beta0, beta1, betaInf}) {
        if (!(b > -1.0)) throw InputError("Psi" + where.str() + ": every order must exceed -1");
    }
    const long double b0 = beta0, b1 = beta1, bi = betaInf;
    const long double B = b0 + b1 + bi;
    if (B == 0.0L) {
        throw InputError("Psi" + where.str() +
                         ": boundary case |beta| = 0 (Gamma(-|beta|/2) has a pole)");
    }
    const long double h = B / 2.0L;
    if (!(b0 - h > 0.0L && b1 - h > 0.0L && bi - h > 0.0L)) {
        throw InputError("Psi" + where.str() +
                         ": metric does not exist / boundary case (need beta_j - |beta|/2 > 0)");
    }
    const std::array<long double, 6> num = {-b0, 2.0L + h, b0 - h, 1.0L + h - b1, 1.0L + h - bi, 0.0L};
    const std::array<long double, 6> den = {1.0L + b0, -h, 1.0L + h - b0, b1 - h, bi - h, 0.0L};
    int sign = 1;
    long double first = 0.0L, second = 0.0L;
    try {
        first = log_abs_gamma(num[0]) - log_abs_gamma(den[0]);
        sign *= gamma_sign(num[0]) * gamma_sign(den[0]);
        int sign2 = 1;
        for (int i = 1; i < 5; ++i) {
            second += log_abs_gamma(num[i]) - log_abs_gamma(den[i]);
            sign2 *= gamma_sign(num[i]) * gamma_sign(den[i]);
        }
        if (sign < 0 || sign2 < 0) {
            throw InputError("negative Gamma ratio");
        }
    } catch (const InputError& e) {
        throw InputError("Psi" + where.str() + ": metric does not exist / boundary case (" +
                         e.what() + ")");
    }
    second -= std::log(kPi);
    return static_cast<double>(first + 0.5L * second);
}

double zeta0(const std::vector<double>& orders) {
    long double deg = 0.0L, corr = 0.0L;
    for (double b : orders) {
        if (!(b > -1.0)) throw InputError("zeta(0) requires every order > -1");
        deg += b;
        corr += (b + 1.0L) - 1.0L / (b + 1.0L);
    }
    return static_cast<double>((deg + 2.0L) / 6.0L - corr / 12.0L - 1.0L);
}

double zeta0(const Divisor& d) { return zeta0(d.orders); }

}  // namespace bdet
