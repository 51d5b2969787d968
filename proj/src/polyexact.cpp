// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#include "belyidet/polyexact.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace bdet {

using cld = std::complex<long double>;

Poly::Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    for (auto& q : c_) q.canonicalize();
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const mpq_class& c) { return Poly({c}); }

Poly Poly::monomial(const mpq_class& c, int power) {
    std::vector<mpq_class> v(static_cast<std::size_t>(power) + 1, mpq_class(0));
    v.back() = c;
    return Poly(std::move(v));
}

Poly Poly::from_strings(const std::vector<std::string>& coeffs) {
    std::vector<mpq_class> v;
    v.reserve(coeffs.size());
    for (const auto& s : coeffs) {
        mpq_class q;
        if (s.empty() || q.set_str(s, 10) != 0)
            throw InputError("invalid polynomial coefficient '" + s + "'");
        if (q.get_den() == 0) throw InputError("zero denominator in coefficient '" + s + "'");
        q.canonicalize();
        v.push_back(q);
    }
    return Poly(std::move(v));
}

mpq_class Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<mpq_class> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(v));
}

Poly Poly::pow(int n) const {
    Poly result = constant(1);
    Poly base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    mpq_class inv = 1 / lead();
    return inv * (*this);
}

cplx Poly::eval(cplx x) const {
    auto v = eval_ld(cld(x.real(), x.imag()));
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

cld Poly::eval_ld(cld x) const {
    cld acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + static_cast<long double>(it->get_d());
    return acc;
}

std::vector<std::string> Poly::to_strings() const {
    std::vector<std::string> out;
    for (const auto& q : c_) out.push_back(q.get_str());
    if (out.empty()) out.push_back("0");
    return out;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpq_class& q = c_[static_cast<std::size_t>(i)];
        if (q == 0) continue;
        if (!first) os << (q > 0 ? " + " : " - ");
        else if (q < 0) os << "-";
        mpq_class a = abs(q);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) os << (a != 1 ? "*x" : "x");
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<mpq_class> v(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + mpq_class(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<mpq_class> v(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

Poly operator*(const mpq_class& s, const Poly& a) {
    std::vector<mpq_class> v(a.c_);
    for (auto& q : v) q *= s;
    return Poly(std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<mpq_class> r(a.coeffs());
    int db = b.degree();
    int da = a.degree();
    if (da < db) return {Poly(), a};
    std::vector<mpq_class> q(static_cast<std::size_t>(da - db + 1), mpq_class(0));
    const mpq_class& lb = b.lead();
    for (int i = da; i >= db; --i) {
        const mpq_class t = r[static_cast<std::size_t>(i)] / lb;
        q[static_cast<std::size_t>(i - db)] = t;
        if (t == 0) continue;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= t * b.coeffs()[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        // Keeping the remainder monic bounds coefficient growth.
        y = r.monic();
    }
    return x.monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("square-free decomposition of the zero polynomial");
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() == 0) return out;
    Poly f = p.monic();
    Poly fp = f.derivative();
    Poly a = gcd(f, fp);
    Poly b = divmod(f, a).first;
    Poly c = divmod(fp, a).first;
    Poly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Poly g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

namespace {

// Fujiwara's bound on the moduli of the roots of a monic polynomial.
long double fujiwara_bound(const std::vector<long double>& a) {
    const int n = static_cast<int>(a.size()) - 1;
    long double best = 0;
    for (int k = 1; k <= n; ++k) {
        long double coef = std::fabs(a[static_cast<std::size_t>(n - k)]);
        if (k == n) coef /= 2;
        best = std::max(best, std::pow(coef, 1.0L / k));
    }
    return 2 * best;
}

void horner_with_derivative(const std::vector<long double>& a, cld z, cld& p, cld& dp) {
    p = 0;
    dp = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
    }
}

}  // namespace

std::vector<cplx> simple_roots(const Poly& sf) {
    const int n = sf.degree();
    if (n < 1) return {};
    Poly m = sf.monic();
    std::vector<long double> a;
    for (const auto& q : m.coeffs()) a.push_back(static_cast<long double>(q.get_d()));
    if (n == 1) return {cplx(-static_cast<double>(a[0]), 0.0)};

    // Deterministic start: perturbed roots of unity on a circle.
    const long double radius = std::max(fujiwara_bound(a), 1e-3L);
    std::vector<cld> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        long double ang = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
        long double r = radius * (1.0L - 0.3L * (k % 3) / 3.0L) * 0.5L;
        z[static_cast<std::size_t>(k)] = std::polar(r, ang);
    }

    const int max_iter = 2000;
    bool converged = false;
    for (int it = 0; it < max_iter && !converged; ++it) {
        converged = true;
        for (int k = 0; k < n; ++k) {
            cld p, dp;
            horner_with_derivative(a, z[static_cast<std::size_t>(k)], p, dp);
            if (p == cld(0)) continue;
            cld ratio = p / dp;
            cld sum = 0;
            for (int j = 0; j < n; ++j)
                if (j != k) sum += 1.0L / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
            cld w = ratio / (1.0L - ratio * sum);
            z[static_cast<std::size_t>(k)] -= w;
            if (std::abs(w) > 1e-17L * std::max(1.0L, std::abs(z[static_cast<std::size_t>(k)]))) converged = false;
        }
    }

    std::vector<cplx> out;
    for (auto zk : z) {
        for (int polish = 0; polish < 3; ++polish) {
            cld p, dp;
            horner_with_derivative(a, zk, p, dp);
            if (dp == cld(0)) break;
            zk -= p / dp;
        }
        cld p, dp;
        horner_with_derivative(a, zk, p, dp);
        long double scale = 0, pw = 1;
        for (long double ai : a) {
            scale += std::fabs(ai) * pw;
            pw *= std::abs(zk);
        }
        if (!(std::abs(p) <= 1e-10L * scale)) {
            std::ostringstream os;
            os << "root finding did not converge for " << sf.to_string() << " (residual " << static_cast<double>(std::abs(p))
               << " at " << static_cast<double>(zk.real()) << "+" << static_cast<double>(zk.imag()) << "i)";
            throw std::runtime_error(os.str());
        }
        out.emplace_back(static_cast<double>(zk.real()), static_cast<double>(zk.imag()));
    }
    std::sort(out.begin(), out.end(), [](cplx u, cplx v) {
        if (u.real() != v.real()) return u.real() < v.real();
        return u.imag() < v.imag();
    });
    return out;
}

RootSet squarefree_roots(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
    if (p.degree() < 1) throw std::domain_error("roots of a constant polynomial");
    RootSet out;
    for (const auto& [factor, mult] : squarefree_decomposition(p))
        for (cplx z : simple_roots(factor)) out.push_back({z, mult});
    return out;
}

namespace {

struct QComplex {
    mpq_class re, im;
};

QComplex mul(const QComplex& a, const QComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

}  // namespace

std::vector<cplx> taylor_coeffs_at(const Poly& p, cplx x0, int count) {
    if (count < 1) return {};
    const QComplex x{mpq_class(x0.real()), mpq_class(x0.imag())};
    std::vector<QComplex> a;
    for (const auto& q : p.coeffs()) a.push_back({q, mpq_class(0)});
    std::vector<cplx> out;
    // Repeated synthetic division by (t - x0): the k-th remainder is the k-th Taylor coefficient.
    for (int k = 0; k < count; ++k) {
        if (a.empty()) {
            out.emplace_back(0.0, 0.0);
            continue;
        }
        std::vector<QComplex> quotient(a.size() > 1 ? a.size() - 1 : 0);
        QComplex acc{0, 0};
        for (std::size_t i = a.size(); i-- > 0;) {
            QComplex t = mul(acc, x);
            acc = {t.re + a[i].re, t.im + a[i].im};
            if (i > 0) quotient[i - 1] = acc;
        }
        out.emplace_back(acc.re.get_d(), acc.im.get_d());
        a = std::move(quotient);
    }
    return out;
}

}  // namespace bdet
