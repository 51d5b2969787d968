// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#include "belyidet/io.hpp"

#include <cstdio>
#include <sstream>

namespace bdet {

namespace {

json parse(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

std::vector<std::string> coefficient_list(const json& j, const char* key) {
    if (!j.contains(key)) throw InputError(std::string("map JSON needs \"") + key + "\" or \"catalog\"");
    const json& a = j.at(key);
    if (!a.is_array() || a.empty()) throw InputError(std::string("map JSON \"") + key + "\" must be a non-empty array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_string()) out.push_back(a[i].get<std::string>());
        else if (a[i].is_number_integer()) out.push_back(std::to_string(a[i].get<long long>()));
        else
            throw InputError(std::string("map JSON \"") + key + "\" entry " + std::to_string(i) +
                             " must be a decimal integer string");
    }
    return out;
}

double number_field(const json& j, const char* key, const char* where) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw InputError(std::string(where) + " needs a numeric \"" + key + "\"");
    return j.at(key).get<double>();
}

}  // namespace

RationalMap map_from_json(const std::string& text) {
    const json j = parse(text, "map");
    if (!j.is_object()) throw InputError("map JSON must be an object");
    if (j.contains("catalog") && !j.at("catalog").is_null()) {
        if (!j.at("catalog").is_string()) throw InputError("map JSON \"catalog\" must be a string");
        RationalMap f = catalog_from_string(j.at("catalog").get<std::string>());
        if (j.contains("name") && j.at("name").is_string()) f.name = j.at("name").get<std::string>();
        return f;
    }
    RationalMap f;
    try {
        f.P = Poly::from_strings(coefficient_list(j, "numerator"));
        f.Q = Poly::from_strings(coefficient_list(j, "denominator"));
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(std::string("map JSON coefficients: ") + e.what());
    }
    if (j.contains("name")) {
        if (!j.at("name").is_string()) throw InputError("map JSON \"name\" must be a string");
        f.name = j.at("name").get<std::string>();
    }
    validate(f);
    return f;
}

json map_to_json(const RationalMap& f) {
    return {{"name", f.name}, {"numerator", f.P.to_strings()}, {"denominator", f.Q.to_strings()}};
}

FlatConfiguration flat_config_from_json(const std::string& text) {
    const json j = parse(text, "flat configuration");
    if (!j.is_object()) throw InputError("flat configuration JSON must be an object");
    if (!j.contains("points") || !j.at("points").is_array())
        throw InputError("flat configuration JSON needs a \"points\" array");
    if (!j.contains("orders") || !j.at("orders").is_array())
        throw InputError("flat configuration JSON needs an \"orders\" array");
    const json& pts = j.at("points");
    const json& ords = j.at("orders");
    if (pts.size() != ords.size())
        throw InputError("flat configuration JSON: \"points\" and \"orders\" differ in length");
    FlatConfiguration cfg;
    cfg.target_area = number_field(j, "area", "flat configuration JSON");
    bool seen_inf = false;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (!ords[k].is_number())
            throw InputError("flat configuration JSON: order " + std::to_string(k) + " is not a number");
        const double b = ords[k].get<double>();
        if (pts[k].is_string() && pts[k].get<std::string>() == "inf") {
            if (seen_inf) throw InputError("flat configuration JSON lists \"inf\" twice");
            seen_inf = true;
            cfg.order_at_infinity = b;
        } else if (pts[k].is_object()) {
            const std::string where = "flat configuration JSON point " + std::to_string(k);
            cfg.finite_points.emplace_back(number_field(pts[k], "re", where.c_str()),
                                           number_field(pts[k], "im", where.c_str()));
            cfg.orders.push_back(b);
        } else {
            throw InputError("flat configuration JSON point " + std::to_string(k) +
                             " must be {\"re\": x, \"im\": y} or \"inf\"");
        }
    }
    check_configuration(cfg);
    return cfg;
}

json flat_config_to_json(const FlatConfiguration& cfg) {
    json pts = json::array(), ords = json::array();
    for (std::size_t k = 0; k < cfg.finite_points.size(); ++k) {
        pts.push_back(to_json(cfg.finite_points[k]));
        ords.push_back(cfg.orders[k]);
    }
    pts.push_back("inf");
    ords.push_back(cfg.order_at_infinity);
    return {{"points", pts}, {"orders", ords}, {"area", cfg.target_area}};
}

json to_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const SpherePoint& p) { return p.inf ? json("inf") : to_json(p.z); }

json to_json(const Divisor& d) {
    json pts = json::array();
    for (std::size_t k = 0; k < d.size(); ++k) pts.push_back({{"point", to_json(d.points[k])}, {"order", d.orders[k]}});
    return {{"points", pts}, {"degree", d.degree()}};
}

json to_json(const RamificationData& ram) {
    json pts = json::array();
    for (const auto& p : ram.points)
        pts.push_back({{"point", to_json(p.location)},
                       {"fiber", p.fiber == kFiberInf ? json("inf") : json(p.fiber)},
                       {"ord", p.ord},
                       {"c", to_json(p.c)},
                       {"d", to_json(p.d)}});
    return {{"name", ram.name},
            {"degree", ram.degree},
            {"points", pts},
            {"A_f", ram.A_f},
            {"A_f_probes", ram.A_f_probes},
            {"A_f_from_infinity", ram.A_f_from_infinity},
            {"C_f", ram.C_f},
            {"C_f_pairwise", ram.C_f_pairwise}};
}

json to_json(const LogDetResult& r) {
    return {{"log_det", r.log_det}, {"area", r.area}, {"route", to_string(r.route)}, {"divisor", to_json(r.divisor)}};
}

json to_json(const BaseSurface& b) {
    return {{"triangle", {b.triangle.beta0, b.triangle.beta1, b.triangle.betaInf}},
            {"phi", {b.phi0, b.phi1, b.phiInf}},
            {"log_det_unit", b.log_det_unit},
            {"kind", to_string(b.kind)},
            {"boundary", b.boundary}};
}

json to_json(const GluedDeterminantReport& r) {
    const auto& t = r.terms;
    return {{"log_det", r.log_det},
            {"area", r.area},
            {"route", to_string(r.route)},
            {"pullback", to_json(r.pullback)},
            {"terms",
             {{"base", t.base},
              {"phi_sum", t.phi_sum},
              {"logm_sum", t.logm_sum},
              {"calC_sum", t.calC_sum},
              {"bigC", t.bigC},
              {"C_f", t.C_f},
              {"other", t.other},
              {"total", t.total()}}},
            {"outside_hypotheses", r.outside_hypotheses},
            {"notes", r.notes}};
}

json to_json(const PlatonicReport& r) {
    json routes = json::array();
    for (const auto& c : r.cross_routes)
        routes.push_back({{"name", c.name}, {"log_det", c.log_det}, {"deviation", c.log_det - r.result.log_det}});
    return {{"solid", to_string(r.solid)},
            {"beta", r.beta},
            {"result", to_json(r.result)},
            {"cross_routes", routes},
            {"skipped", r.skipped},
            {"max_deviation", r.max_deviation},
            {"consistent", r.consistent}};
}

json to_json(const StressData& d) {
    json pts = json::array();
    for (const auto& p : d.points)
        pts.push_back({{"point", to_json(p.location)}, {"order", p.order}, {"s", p.s}, {"h", to_json(p.h)}});
    const auto res = sum_rules(d);
    return {{"points", pts},
            {"sum_rules", {{"sum_h", res.sum_h}, {"first_moment", res.first_moment}, {"second_moment", res.second_moment}}}};
}

json to_json(const ModularPoint& m) {
    return {{"tau", to_json(m.tau)},         {"q", to_json(m.q)},           {"theta2", to_json(m.theta2)},
            {"theta3", to_json(m.theta3)},   {"theta4", to_json(m.theta4)}, {"eta", to_json(m.eta)},
            {"eta_half", to_json(m.eta_half)}, {"k", to_json(m.k)},         {"K", to_json(m.K)},
            {"Kprime", to_json(m.Kprime)},   {"lambda", to_json(m.lambda)}};
}

json to_json(const StationaryPoint& s) {
    return {{"tau", to_json(s.tau)},
            {"kind", to_string(s.kind)},
            {"gradient_norm", s.gradient_norm},
            {"log_det", s.log_det},
            {"lambda", to_json(s.lambda)},
            {"hessian_eigenvalues", s.hessian_eigenvalues},
            {"iterations", s.iterations}};
}

json to_json(const StationarityReport& r) {
    json coords = json::array();
    for (std::size_t i = 0; i < r.gradient.size(); ++i)
        coords.push_back({{"coordinate", r.point.label(i)}, {"derivative", r.gradient[i]}});
    return {{"solid", to_string(r.solid)},
            {"configuration", flat_config_to_json(r.point.cfg)},
            {"gradient", coords},
            {"gradient_norm", r.gradient_norm},
            {"tolerance", r.tolerance},
            {"pass", r.pass}};
}

std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "beta,logdet_area4pi\n";
    for (const auto& r : rows) out += csv_number(r.beta) + "," + csv_number(r.log_det_4pi) + "\n";
    return out;
}

std::string elliptic_csv(const std::vector<EllipticRow>& rows) {
    std::string out = "tau_re,tau_im,logdet\n";
    for (const auto& r : rows) out += csv_number(r.tau_re) + "," + csv_number(r.tau_im) + "," + csv_number(r.logdet) + "\n";
    return out;
}

}  // namespace bdet
