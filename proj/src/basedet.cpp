// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#include "belyidet/basedet.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "belyidet/flatdet.hpp"

namespace bdet {

std::string to_string(BaseKind k) {
    switch (k) {
        case BaseKind::Flat3: return "flat3";
        case BaseKind::Spindle: return "spindle";
        case BaseKind::External: return "external";
    }
    return "unknown";
}

double BaseSurface::phi(int j) const {
    switch (j) {
        case 0: return phi0;
        case 1: return phi1;
        case 2: return phiInf;
        default: throw std::out_of_range("base coefficient index must be 0, 1 or 2");
    }
}

namespace {

std::array<double, 3> psi_triple(const TriangleDivisor& t) {
    return {psi(t.beta0, t.beta1, t.betaInf), psi(t.beta1, t.beta0, t.betaInf), psi(t.betaInf, t.beta1, t.beta0)};
}

}  // namespace

BaseSurface make_flat3(const TriangleDivisor& t, double tol) {
    for (int j = 0; j < 3; ++j) {
        const double b = t.get(j);
        if (!(b > -1.0 && b < 0.0)) {
            std::ostringstream os;
            os << "flat base orders must lie in (-1, 0); got " << b;
            throw InputError(os.str());
        }
    }
    if (std::fabs(t.degree() + 2.0) > 1e-12) {
        std::ostringstream os;
        os.precision(15);
        os << "flat base needs beta0 + beta1 + betainf = -2; got " << t.degree();
        throw InputError(os.str());
    }
    const auto phi = psi_triple(t);
    BaseSurface b;
    b.triangle = t;
    b.phi0 = phi[0];
    b.phi1 = phi[1];
    b.phiInf = phi[2];
    b.kind = BaseKind::Flat3;
    b.log_det_unit = (t.beta0 * phi[0] / (t.beta0 + 1.0) + t.beta1 * phi[1] / (t.beta1 + 1.0)) / 6.0 -
                     (t.betaInf + 2.0) * phi[2] / (6.0 * (t.betaInf + 1.0)) - calC(t.beta0) - calC(t.beta1) -
                     calC(t.betaInf) + big_c();

    FlatConfiguration cfg;
    cfg.finite_points = {0.0, 1.0};
    cfg.orders = {t.beta0, t.beta1};
    cfg.order_at_infinity = t.betaInf;
    cfg.target_area = 1.0;
    const double direct = flat_log_det(cfg).log_det;
    if (std::fabs(direct - b.log_det_unit) > tol) {
        std::ostringstream os;
        os.precision(15);
        os << "flat base (" << t.beta0 << ", " << t.beta1 << ", " << t.betaInf << "): coefficient formula gives "
           << b.log_det_unit << " but the flat determinant gives " << direct;
        throw ConsistencyError(os.str());
    }
    return b;
}

SpindleRaw spindle_raw(double beta) {
    if (!(beta > -1.0)) throw InputError("spindle order must exceed -1");
    const double a = beta + 1.0;
    SpindleRaw r;
    r.area = 4.0 * std::numbers::pi * a;
    const double over_area = a / 3.0 - (a + 1.0 / a) * std::log(2.0 * a) / 3.0 - 2.0 * calC(beta) + big_c();
    r.log_det = over_area + std::log(r.area);
    r.phi = {std::log(2.0 * a), std::log(a), std::log(2.0 * a)};
    return r;
}

BaseSurface make_spindle(double beta) {
    const SpindleRaw raw = spindle_raw(beta);
    BaseSurface b;
    b.triangle = {beta, 0.0, beta};
    b.kind = BaseKind::Spindle;
    b.boundary = true;
    const double half_log = 0.5 * std::log(raw.area);
    b.phi0 = raw.phi[0] - half_log;
    b.phi1 = raw.phi[1] - half_log;
    b.phiInf = raw.phi[2] - half_log;
    b.log_det_unit = raw.log_det + zeta0(std::vector<double>{beta, 0.0, beta}) * std::log(raw.area);
    return b;
}

BaseSurface make_external(const TriangleDivisor& t, const std::array<std::optional<double>, 3>& phi,
                          double log_det_unit) {
    for (int j = 0; j < 3; ++j)
        if (!(t.get(j) > -1.0) || !std::isfinite(t.get(j))) throw InputError("external base orders must exceed -1");
    if (!std::isfinite(log_det_unit)) throw InputError("external base log det must be finite");
    BaseSurface b;
    b.triangle = t;
    b.kind = BaseKind::External;
    b.log_det_unit = log_det_unit;
    double* slots[3] = {&b.phi0, &b.phi1, &b.phiInf};
    for (int j = 0; j < 3; ++j) {
        if (phi[static_cast<std::size_t>(j)]) {
            if (!std::isfinite(*phi[static_cast<std::size_t>(j)])) throw InputError("external base phi must be finite");
            *slots[j] = *phi[static_cast<std::size_t>(j)];
        } else {
            const double o0 = t.get(j);
            const double o1 = j == 1 ? t.beta0 : t.beta1;
            const double o2 = j == 0 ? t.betaInf : (j == 1 ? t.betaInf : t.beta0);
            *slots[j] = psi(o0, o1, o2);
        }
    }
    return b;
}

std::optional<BaseSurface> ExternalTable::find(const TriangleDivisor& t, double tol) const {
    for (const auto& r : rows)
        if (std::fabs(r.triangle.beta0 - t.beta0) <= tol && std::fabs(r.triangle.beta1 - t.beta1) <= tol &&
            std::fabs(r.triangle.betaInf - t.betaInf) <= tol)
            return r;
    return std::nullopt;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r' && ch != ' ' && ch != '\t') {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_number(const std::string& s, int line_no, const char* field) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        std::ostringstream os;
        os << "external table line " << line_no << ": cannot parse " << field << " '" << s << "'";
        throw InputError(os.str());
    }
}

}  // namespace

ExternalTable read_external_table(std::istream& in) {
    static const char* kHeader = "beta0,beta1,betainf,phi0,phi1,phiinf,logdet_unit";
    static const char* kFields[] = {"beta0", "beta1", "betainf", "phi0", "phi1", "phiinf", "logdet_unit"};
    ExternalTable table;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (!header_seen) {
            std::string compact;
            for (char ch : line)
                if (ch != ' ' && ch != '\t') compact.push_back(ch);
            if (compact != kHeader)
                throw InputError(std::string("external table must start with the header '") + kHeader + "'");
            header_seen = true;
            continue;
        }
        const auto cells = split_csv(line);
        if (cells.size() != 7) {
            std::ostringstream os;
            os << "external table line " << line_no << ": expected 7 fields, found " << cells.size();
            throw InputError(os.str());
        }
        TriangleDivisor t{parse_number(cells[0], line_no, kFields[0]), parse_number(cells[1], line_no, kFields[1]),
                          parse_number(cells[2], line_no, kFields[2])};
        std::array<std::optional<double>, 3> phi;
        for (int j = 0; j < 3; ++j)
            if (!cells[static_cast<std::size_t>(3 + j)].empty())
                phi[static_cast<std::size_t>(j)] = parse_number(cells[static_cast<std::size_t>(3 + j)], line_no, kFields[3 + j]);
        const double ld = parse_number(cells[6], line_no, kFields[6]);
        try {
            table.rows.push_back(make_external(t, phi, ld));
        } catch (const InputError& e) {
            std::ostringstream os;
            os << "external table line " << line_no << ": " << e.what();
            throw InputError(os.str());
        }
    }
    if (!header_seen) throw InputError(std::string("external table is empty; expected header '") + kHeader + "'");
    return table;
}

ExternalTable read_external_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open external table '" + path + "'");
    return read_external_table(in);
}

BaseProvider default_base_provider(const ExternalTable* table) {
    return [table](const TriangleDivisor& t) -> BaseSurface {
        if (table) {
            if (auto row = table->find(t)) return *row;
        }
        if (std::fabs(t.degree() + 2.0) <= 1e-12) return make_flat3(t);
        if (t.beta1 == 0.0 && std::fabs(t.beta0 - t.betaInf) <= 1e-14) return make_spindle(t.beta0);
        std::ostringstream os;
        os.precision(15);
        os << "curved base requires external table: no data for the triangle (" << t.beta0 << ", " << t.beta1 << ", "
           << t.betaInf << ")";
        throw InputError(os.str());
    };
}

}  // namespace bdet
