// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
#include "belyidet/belyidet.h"

#include <cmath>
#include <memory>
#include <numbers>
#include <optional>
#include <string>

#include "belyidet/io.hpp"

using namespace bdet;

struct bdet_context {
    double tol = 1e-8;
    std::optional<ExternalTable> table;
    std::string error;
    std::string result;

    BaseProvider provider() const { return default_base_provider(table ? &*table : nullptr); }
};

struct bdet_map {
    RationalMap f;
    std::optional<RamificationData> ram;
};

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

template <class Fn>
bdet_status guarded(bdet_context* ctx, Fn&& fn) {
    if (!ctx) return BDET_ERR_INPUT;
    ctx->error.clear();
    ctx->result.clear();
    try {
        return fn();
    } catch (const InputError& e) {
        ctx->error = e.what();
        return BDET_ERR_INPUT;
    } catch (const ConsistencyError& e) {
        ctx->error = e.what();
        return BDET_ERR_CONSISTENCY;
    } catch (const std::exception& e) {
        ctx->error = std::string("internal error: ") + e.what();
        return BDET_ERR_INTERNAL;
    }
}

std::string str_arg(const char* s, const char* what) {
    if (!s) throw InputError(std::string(what) + " must not be null");
    return s;
}

const RamificationData& analysis(bdet_map* m, double tol) {
    if (!m) throw InputError("map handle must not be null");
    if (!m->ram) m->ram = analyze(m->f, std::max(tol, 1e-8));
    return *m->ram;
}

// Collects cross-route values against a primary value.
struct Comparison {
    double primary;
    double tol;
    json routes = json::array();
    double max_dev = 0.0;

    void add(const std::string& name, double v) {
        routes.push_back({{"name", name}, {"log_det", v}, {"deviation", v - primary}});
        max_dev = std::max(max_dev, std::fabs(v - primary));
    }
    bool ok() const { return max_dev <= tol; }
    void into(json& j) const {
        j["cross_routes"] = routes;
        j["max_deviation"] = max_dev;
        j["tolerance"] = tol;
        j["consistent"] = ok();
    }
};

bdet_status finish(bdet_context* ctx, const json& j, bool consistent, const std::string& what) {
    ctx->result = j.dump(2);
    if (consistent) return BDET_OK;
    ctx->error = what + ": routes disagree beyond the tolerance";
    return BDET_ERR_CONSISTENCY;
}

// The catalog family behind a map, if the map is literally a catalog map.
std::optional<std::pair<Family, int>> catalog_family(const RationalMap& f) {
    const std::pair<Family, int> candidates[] = {{Family::Tetrahedral, 0}, {Family::Octahedral, 0},
                                                 {Family::Icosahedral, 0}};
    auto same = [&](const RationalMap& g) { return g.P.to_strings() == f.P.to_strings() && g.Q.to_strings() == f.Q.to_strings(); };
    const int d = f.degree();
    if (d >= 1 && same(family_map(Family::Cyclic, d))) return std::make_pair(Family::Cyclic, d);
    if (d >= 2 && d % 2 == 0 && same(family_map(Family::Dihedral, d / 2))) return std::make_pair(Family::Dihedral, d / 2);
    for (const auto& c : candidates)
        if (family_degree(c.first, 0) == d && same(family_map(c.first, 0))) return c;
    return std::nullopt;
}

void flat_routes(Comparison& cmp, const RamificationData& ram, const BaseSurface& base, const Divisor& pb) {
    if (base.kind != BaseKind::Flat3) return;
    const FlatConfiguration cfg = configuration_from_divisor(pb, ram.degree);
    cmp.add("flat formula, quadrature area", flat_log_det(cfg).log_det);
    cmp.add("flat formula, pulled-back area", flat_log_det(cfg, pullback_flat_area(ram, base).area).log_det);
}

}  // namespace

extern "C" {

const char* bdet_version(void) { return "1.0.0"; }

bdet_status bdet_context_create(bdet_context** out) {
    if (!out) return BDET_ERR_INPUT;
    try {
        *out = new bdet_context();
    } catch (...) {
        return BDET_ERR_INTERNAL;
    }
    return BDET_OK;
}

void bdet_context_destroy(bdet_context* ctx) { delete ctx; }

bdet_status bdet_context_set_tolerance(bdet_context* ctx, double tol) {
    return guarded(ctx, [&] {
        if (!(tol > 0.0) || !std::isfinite(tol)) throw InputError("tolerance must be positive and finite");
        ctx->tol = tol;
        return BDET_OK;
    });
}

double bdet_context_tolerance(const bdet_context* ctx) { return ctx ? ctx->tol : NAN; }

bdet_status bdet_context_load_base_table(bdet_context* ctx, const char* path) {
    return guarded(ctx, [&] {
        ctx->table = read_external_table_file(str_arg(path, "table path"));
        ctx->result = json{{"rows", ctx->table->rows.size()}}.dump();
        return BDET_OK;
    });
}

const char* bdet_last_error(const bdet_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }

const char* bdet_result(const bdet_context* ctx) { return ctx ? ctx->result.c_str() : ""; }

bdet_status bdet_map_from_json(bdet_context* ctx, const char* text, bdet_map** out) {
    return guarded(ctx, [&] {
        if (!out) throw InputError("output handle must not be null");
        auto m = std::make_unique<bdet_map>();
        m->f = map_from_json(str_arg(text, "map JSON"));
        ctx->result = map_to_json(m->f).dump(2);
        *out = m.release();
        return BDET_OK;
    });
}

bdet_status bdet_map_from_catalog(bdet_context* ctx, const char* name, bdet_map** out) {
    return guarded(ctx, [&] {
        if (!out) throw InputError("output handle must not be null");
        auto m = std::make_unique<bdet_map>();
        m->f = catalog_from_string(str_arg(name, "catalog name"));
        ctx->result = map_to_json(m->f).dump(2);
        *out = m.release();
        return BDET_OK;
    });
}

void bdet_map_destroy(bdet_map* map) { delete map; }

bdet_status bdet_analyze(bdet_context* ctx, bdet_map* map) {
    return guarded(ctx, [&] {
        const RamificationData& ram = analysis(map, ctx->tol);
        json j = to_json(ram);
        j["map"] = map_to_json(map->f);
        const double dev = std::fabs(ram.C_f - ram.C_f_pairwise);
        j["C_f_route_deviation"] = dev;
        return finish(ctx, j, dev <= std::max(ctx->tol, 1e-8), "C_f");
    });
}

bdet_status bdet_det_flat(bdet_context* ctx, const char* config_json) {
    return guarded(ctx, [&] {
        const FlatConfiguration cfg = flat_config_from_json(str_arg(config_json, "configuration JSON"));
        const double area_cuts = metric_area(cfg, AreaMethod::Cuts);
        const LogDetResult r = flat_log_det(cfg, area_cuts);
        Comparison cmp{r.log_det, ctx->tol};
        const double area_plane = metric_area(cfg, AreaMethod::Plane2D, std::min(1e-9, ctx->tol));
        cmp.add("flat formula, 2D quadrature area", flat_log_det(cfg, area_plane).log_det);
        json j;
        j["configuration"] = flat_config_to_json(cfg);
        j["result"] = to_json(r);
        j["raw_area"] = area_cuts;
        j["phi_unit"] = flat_unit_phi(cfg, area_cuts);
        j["liouville_action"] = flat_liouville_action(cfg);
        cmp.into(j);
        return finish(ctx, j, cmp.ok(), "flat determinant");
    });
}

bdet_status bdet_det_belyi(bdet_context* ctx, bdet_map* map, double beta0, double beta1, double beta_inf) {
    return guarded(ctx, [&] {
        const RamificationData& ram = analysis(map, ctx->tol);
        const TriangleDivisor t{beta0, beta1, beta_inf};
        const BaseSurface base = ctx->provider()(t);
        const GluedDeterminantReport rep = theorem_main(ram, base);
        Comparison cmp{rep.log_det, ctx->tol};
        if (auto fam = catalog_family(map->f))
            cmp.add("family theorem (" + to_string(fam->first) + ")", family_log_det(fam->first, fam->second, base).log_det);
        flat_routes(cmp, ram, base, rep.pullback);
        json j;
        j["map"] = map->f.name;
        j["base"] = to_json(base);
        j["report"] = to_json(rep);
        j["log_det_area4pi"] = rescale_log_det(rep.as_result(), kFourPi).log_det;
        j["liouville_action"] = liouville_action(ram, base, rep.log_det);
        cmp.into(j);
        return finish(ctx, j, cmp.ok(), "glued determinant");
    });
}

bdet_status bdet_det_family(bdet_context* ctx, const char* family, int ell, double beta0, double beta1,
                            double beta_inf) {
    return guarded(ctx, [&] {
        const Family fam = family_from_string(str_arg(family, "family"));
        const bool param = fam == Family::Cyclic || fam == Family::Dihedral;
        if (param && ell < 1) throw InputError(to_string(fam) + " family needs --ell >= 1");
        const int l = param ? ell : 0;
        const TriangleDivisor t{beta0, beta1, beta_inf};
        const BaseSurface base = ctx->provider()(t);
        const GluedDeterminantReport rep = family_log_det(fam, l, base);
        Comparison cmp{rep.log_det, ctx->tol};
        const RamificationData ram = analyze(family_map(fam, l), std::max(ctx->tol, 1e-8));
        cmp.add("theorem-main", theorem_main(ram, base).log_det);
        flat_routes(cmp, ram, base, rep.pullback);
        json j;
        j["family"] = to_string(fam);
        if (param) j["ell"] = l;
        j["base"] = to_json(base);
        j["report"] = to_json(rep);
        j["log_det_area4pi"] = rescale_log_det(rep.as_result(), kFourPi).log_det;
        cmp.into(j);
        return finish(ctx, j, cmp.ok(), "family determinant");
    });
}

bdet_status bdet_det_platonic(bdet_context* ctx, const char* solid, double beta) {
    return guarded(ctx, [&] {
        const SolidSpec s = solid_from_string(str_arg(solid, "solid"));
        const PlatonicReport rep = platonic_log_det(s, beta, ctx->provider(), ctx->tol);
        json j = to_json(rep);
        j["tolerance"] = ctx->tol;
        return finish(ctx, j, rep.consistent, "Platonic determinant");
    });
}

bdet_status bdet_accessory(bdet_context* ctx, bdet_map* map, double beta0, double beta1, double beta_inf) {
    return guarded(ctx, [&] {
        const RamificationData& ram = analysis(map, ctx->tol);
        const TriangleDivisor t{beta0, beta1, beta_inf};
        const StressData sd = pullback_accessory(ram, t, std::max(ctx->tol, 1e-8));
        json j = to_json(sd);
        json contour = json::array();
        double worst = 0.0;
        for (std::size_t k = 0; k < ram.points.size(); ++k) {
            const ContourResidues c = residues_via_contour(ram, t, k);
            const double dev = std::max(std::abs(c.h - sd.points[k].h) / std::max(1.0, std::abs(sd.points[k].h)),
                                        std::abs(c.s_raw - sd.points[k].s) / std::max(1.0, std::fabs(sd.points[k].s)));
            worst = std::max(worst, dev);
            contour.push_back({{"s", c.s}, {"h", to_json(c.h)}, {"radius", c.radius}, {"deviation", dev}});
        }
        const StressData sch = schwarz_accessory(t);
        j["map"] = map->f.name;
        j["schwarz"] = to_json(sch);
        j["contour"] = contour;
        j["max_contour_deviation"] = worst;
        j["contour_tolerance"] = 1e-6;
        j["consistent"] = worst <= 1e-6;
        return finish(ctx, j, worst <= 1e-6, "accessory parameters");
    });
}

bdet_status bdet_elliptic(bdet_context* ctx, double tau_re, double tau_im) {
    return guarded(ctx, [&] {
        const cplx tau{tau_re, tau_im};
        const ModularPoint m = modular_data(tau);
        const DetLambda d = det_lambda(tau);
        const double primary = std::log(d.route_eta);
        Comparison cmp{primary, ctx->tol};
        cmp.add("modulus route", std::log(d.route_modulus));
        const FlatOracle o = det_lambda_flat_oracle(m.lambda);
        cmp.add("flat oracle", o.log_det);
        cmp.add("flat formula", o.log_det_flatdet);
        json j;
        j["modular"] = to_json(m);
        j["det"] = d.route_eta;
        j["log_det"] = primary;
        j["flat_raw_area"] = o.area;
        cmp.into(j);
        return finish(ctx, j, cmp.ok(), "elliptic determinant");
    });
}

bdet_status bdet_elliptic_stationary(bdet_context* ctx, double start_re, double start_im) {
    return guarded(ctx, [&] {
        const StationaryPoint sp = find_stationary_tau({start_re, start_im});
        json j = to_json(sp);
        j["start"] = to_json(cplx{start_re, start_im});
        j["det"] = std::exp(sp.log_det);
        ctx->result = j.dump(2);
        return BDET_OK;
    });
}

bdet_status bdet_elliptic_grid(bdet_context* ctx, const char* re_grid, const char* im_grid) {
    return guarded(ctx, [&] {
        const auto re = parse_grid(str_arg(re_grid, "real-part grid"));
        const auto im = parse_grid(str_arg(im_grid, "imaginary-part grid"));
        ctx->result = elliptic_csv(elliptic_grid(re, im));
        return BDET_OK;
    });
}

bdet_status bdet_stationarity(bdet_context* ctx, const char* solid, double step, double tol) {
    return guarded(ctx, [&] {
        const SolidSpec s = solid_from_string(str_arg(solid, "solid"));
        const StationarityReport r =
            check_platonic_stationarity(s, step, tol > 0.0 ? std::optional<double>(tol) : std::nullopt);
        return finish(ctx, to_json(r), r.pass, "stationarity");
    });
}

bdet_status bdet_sweep_platonic(bdet_context* ctx, const char* solid, const char* grid) {
    return guarded(ctx, [&] {
        const SolidSpec s = solid_from_string(str_arg(solid, "solid"));
        ctx->result = sweep_csv(sweep_platonic(s, parse_grid(str_arg(grid, "grid")), ctx->provider()));
        return BDET_OK;
    });
}

}  // extern "C"
