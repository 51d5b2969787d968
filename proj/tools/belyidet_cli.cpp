// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The belyidet authors
//
// Command-line front end. It talks to the library only through the C API and
// turns the JSON reports into text.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "belyidet/belyidet.h"

using json = nlohmann::json;

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v + 0.0);
    return buf;
}

std::string num(const json& v) { return v.is_number() ? num(v.get<double>()) : v.dump(); }

std::string cplx_str(const json& z) {
    if (z.is_string()) return z.get<std::string>();
    const double re = z.at("re").get<double>(), im = z.at("im").get<double>();
    std::string s = num(re);
    s += im < 0 ? " - " : " + ";
    s += num(std::fabs(im)) + "i";
    return s;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<double> parse_list(const std::string& s, std::size_t n, const char* what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::runtime_error(std::string(what) + ": cannot parse '" + item + "'");
        }
    }
    if (out.size() != n)
        throw std::runtime_error(std::string(what) + " needs " + std::to_string(n) + " comma-separated numbers");
    return out;
}

void print_routes(const json& j, const std::string& primary_name, double primary) {
    std::cout << "  " << primary_name << ": " << num(primary) << "\n";
    if (!j.contains("cross_routes")) return;
    for (const auto& r : j.at("cross_routes"))
        std::cout << "  " << r.at("name").get<std::string>() << ": " << num(r.at("log_det"))
                  << "  (deviation " << num(r.at("deviation")) << ")\n";
    if (j.contains("skipped"))
        for (const auto& s : j.at("skipped")) std::cout << "  skipped " << s.get<std::string>() << "\n";
    std::cout << "  max deviation " << num(j.at("max_deviation"));
    if (j.contains("tolerance")) std::cout << " (tolerance " << num(j.at("tolerance")) << ")";
    std::cout << (j.value("consistent", true) ? ", routes agree" : ", ROUTES DISAGREE") << "\n";
}

void print_divisor(const json& d) {
    for (const auto& p : d.at("points"))
        std::cout << "    " << cplx_str(p.at("point")) << "  order " << num(p.at("order")) << "\n";
}

void print_base(const json& b) {
    const auto& t = b.at("triangle");
    std::cout << "base " << b.at("kind").get<std::string>() << " (" << num(t[0]) << ", " << num(t[1]) << ", "
              << num(t[2]) << "), unit-area log det " << num(b.at("log_det_unit"))
              << (b.at("boundary").get<bool>() ? " [boundary base]" : "") << "\n";
}

void print_glued(const json& j) {
    print_base(j.at("base"));
    const auto& r = j.at("report");
    std::cout << "route " << r.at("route").get<std::string>() << ", area " << num(r.at("area")) << "\n";
    print_routes(j, "log det", r.at("log_det").get<double>());
    std::cout << "log det at area 4 pi: " << num(j.at("log_det_area4pi")) << "\n";
    if (j.contains("liouville_action")) std::cout << "Liouville action: " << num(j.at("liouville_action")) << "\n";
    const auto& t = r.at("terms");
    std::cout << "terms of log(det / deg f):\n";
    for (const char* k : {"base", "phi_sum", "logm_sum", "calC_sum", "bigC", "C_f", "other", "total"})
        std::cout << "    " << k << " " << num(t.at(k)) << "\n";
    if (r.at("outside_hypotheses").get<bool>()) std::cout << "note: base lies outside the theorem's hypotheses\n";
    std::cout << "pulled-back divisor:\n";
    print_divisor(r.at("pullback"));
}

void print_report(const std::string& cmd, const json& j) {
    if (cmd == "analyze") {
        std::cout << "map " << j.at("name").get<std::string>() << ", degree " << j.at("degree") << "\n";
        for (const auto& p : j.at("points")) {
            const auto& fib = p.at("fiber");
            std::cout << "  " << cplx_str(p.at("point")) << "  over "
                      << (fib.is_string() ? fib.get<std::string>() : std::to_string(fib.get<int>())) << "  ord "
                      << p.at("ord") << "  c " << cplx_str(p.at("c")) << "\n";
        }
        std::cout << "A_f " << num(j.at("A_f")) << " (from infinity " << num(j.at("A_f_from_infinity")) << ")\n";
        std::cout << "C_f " << num(j.at("C_f")) << " (pairwise route " << num(j.at("C_f_pairwise")) << ", deviation "
                  << num(j.at("C_f_route_deviation")) << ")\n";
    } else if (cmd == "det-flat") {
        std::cout << "flat configuration, area " << num(j.at("result").at("area")) << "\n";
        print_routes(j, "log det (cut quadrature area)", j.at("result").at("log_det").get<double>());
        std::cout << "unscaled area " << num(j.at("raw_area")) << "\n";
        std::cout << "Liouville action " << num(j.at("liouville_action")) << "\n";
    } else if (cmd == "det-belyi" || cmd == "det-family") {
        print_glued(j);
    } else if (cmd == "det-platonic") {
        std::cout << j.at("solid").get<std::string>() << ", beta " << num(j.at("beta")) << ", area 4 pi\n";
        print_routes(j, "log det (specialized formula)", j.at("result").at("log_det").get<double>());
    } else if (cmd == "accessory") {
        std::cout << "accessory parameters for " << j.at("map").get<std::string>() << "\n";
        const auto& pts = j.at("points");
        const auto& con = j.at("contour");
        for (std::size_t k = 0; k < pts.size(); ++k)
            std::cout << "  " << cplx_str(pts[k].at("point")) << "  order " << num(pts[k].at("order")) << "  s "
                      << num(pts[k].at("s")) << "  h " << cplx_str(pts[k].at("h")) << "  contour h "
                      << cplx_str(con[k].at("h")) << "\n";
        const auto& sr = j.at("sum_rules");
        std::cout << "sum rules: " << num(sr.at("sum_h")) << ", " << num(sr.at("first_moment")) << ", "
                  << num(sr.at("second_moment")) << "\n";
        std::cout << "max contour deviation " << num(j.at("max_contour_deviation"))
                  << (j.at("consistent").get<bool>() ? ", agree" : ", DISAGREE") << "\n";
    } else if (cmd == "elliptic") {
        const auto& m = j.at("modular");
        std::cout << "tau " << cplx_str(m.at("tau")) << ", lambda " << cplx_str(m.at("lambda")) << ", k "
                  << cplx_str(m.at("k")) << "\n";
        std::cout << "det " << num(j.at("det")) << "\n";
        print_routes(j, "log det (eta route)", j.at("log_det").get<double>());
    } else if (cmd == "elliptic-search") {
        std::cout << "stationary point tau* = " << cplx_str(j.at("tau")) << " (" << j.at("kind").get<std::string>()
                  << ")\n  gradient norm " << num(j.at("gradient_norm")) << "\n  det " << num(j.at("det"))
                  << "\n  lambda " << cplx_str(j.at("lambda")) << "\n";
    } else if (cmd == "stationarity") {
        std::cout << j.at("solid").get<std::string>() << ": gradient norm " << num(j.at("gradient_norm"))
                  << " (tolerance " << num(j.at("tolerance")) << ") " << (j.at("pass").get<bool>() ? "PASS" : "FAIL")
                  << "\n";
        for (const auto& c : j.at("gradient"))
            std::cout << "  " << c.at("coordinate").get<std::string>() << " " << num(c.at("derivative")) << "\n";
    }
}

struct Runner {
    bdet_context* ctx = nullptr;
    bool as_json = false;

    ~Runner() { bdet_context_destroy(ctx); }

    int emit(const std::string& cmd, bdet_status st) {
        const std::string res = bdet_result(ctx);
        if (st != BDET_OK && res.empty()) {
            std::cerr << "error: " << bdet_last_error(ctx) << "\n";
            return static_cast<int>(st);
        }
        if (as_json) std::cout << res << "\n";
        else print_report(cmd, json::parse(res));
        if (st != BDET_OK) std::cerr << "error: " << bdet_last_error(ctx) << "\n";
        return static_cast<int>(st);
    }

    int emit_text(bdet_status st, const std::string& out_path) {
        if (st != BDET_OK) {
            std::cerr << "error: " << bdet_last_error(ctx) << "\n";
            return static_cast<int>(st);
        }
        if (out_path.empty()) {
            std::cout << bdet_result(ctx);
        } else {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "error: cannot write '" << out_path << "'\n";
                return BDET_ERR_INPUT;
            }
            out << bdet_result(ctx);
        }
        return 0;
    }
};

struct MapHandle {
    bdet_map* m = nullptr;
    ~MapHandle() { bdet_map_destroy(m); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral determinants of conical spheres glued along Belyi maps"};
    app.require_subcommand(1);
    app.fallthrough();
    double tol = 1e-8;
    bool as_json = false;
    app.add_option("--tol", tol, "Tolerance for cross-route agreement")->check(CLI::PositiveNumber);
    app.add_flag("--json", as_json, "Print the JSON report instead of text");

    std::string catalog, map_file, beta3, base_table, config_file, family, solid, tau, grid, grid_re, grid_im, out_path;
    int ell = 0;
    double beta = 0.0, step = 1e-3;
    bool search = false;

    auto add_map = [&](CLI::App* s) {
        auto* g = s->add_option_group("map");
        g->add_option("--catalog", catalog, "Catalog map, e.g. cyclic(3) or icosahedral");
        g->add_option("--map", map_file, "Map JSON file");
        g->require_option(1);
    };

    auto* analyze = app.add_subcommand("analyze", "Ramification data, A_f and C_f of a Belyi map");
    add_map(analyze);

    auto* det_flat = app.add_subcommand("det-flat", "Determinant of a flat conical sphere");
    det_flat->add_option("config", config_file, "Flat configuration JSON file")->required();

    auto* det_belyi = app.add_subcommand("det-belyi", "Determinant of the pullback of a triangle metric");
    add_map(det_belyi);
    det_belyi->add_option("--beta", beta3, "Base orders beta0,beta1,betainf")->required();
    det_belyi->add_option("--base-table", base_table, "External base table (CSV)");

    auto* det_family = app.add_subcommand("det-family", "Closed-form family theorem");
    det_family->add_option("family", family, "cyclic, dihedral, tetrahedral, octahedral or icosahedral")->required();
    det_family->add_option("--ell", ell, "Parameter of the cyclic and dihedral families");
    det_family->add_option("--beta", beta3, "Base orders beta0,beta1,betainf")->required();
    det_family->add_option("--base-table", base_table, "External base table (CSV)");

    auto* det_platonic = app.add_subcommand("det-platonic", "Determinant of a Platonic surface at area 4 pi");
    det_platonic->add_option("solid", solid, "tetrahedron, octahedron, cube, icosahedron, dodecahedron, dihedron(l)")
        ->required();
    det_platonic->add_option("--beta", beta, "Order of the conical points")->required();
    det_platonic->add_option("--base-table", base_table, "External base table (CSV)");

    auto* accessory = app.add_subcommand("accessory", "Accessory parameters of a pulled-back metric");
    add_map(accessory);
    accessory->add_option("--beta", beta3, "Base orders beta0,beta1,betainf")->required();

    auto* elliptic = app.add_subcommand("elliptic", "Four half-order points and the Dedekind eta function");
    auto* tau_opt = elliptic->add_option("--tau", tau, "tau as re,im");
    elliptic->add_flag("--search", search, "Search for a stationary point starting at --tau");
    auto* gre = elliptic->add_option("--grid-re", grid_re, "Grid of Re tau as start:stop:step");
    auto* gim = elliptic->add_option("--grid-im", grid_im, "Grid of Im tau as start:stop:step");
    gre->needs(gim);
    gim->needs(gre);
    tau_opt->excludes(gre);
    elliptic->add_option("--out", out_path, "Write the CSV grid to this file");

    auto* stationarity = app.add_subcommand("stationarity", "Finite-difference stationarity of a flat Platonic surface");
    stationarity->add_option("solid", solid, "tetrahedron, octahedron, cube, icosahedron, dodecahedron, dihedron(l)")
        ->required();
    stationarity->add_option("--step", step, "Finite-difference step in [1e-5, 1e-2]");

    auto* sweep = app.add_subcommand("sweep", "CSV sweep of a Platonic determinant over the cone order");
    std::string sweep_kind;
    sweep->add_option("kind", sweep_kind, "Only 'platonic' is supported")->required()->check(CLI::IsMember({"platonic"}));
    sweep->add_option("solid", solid, "Solid name")->required();
    sweep->add_option("--grid", grid, "Cone orders as start:stop:step")->required();
    sweep->add_option("--base-table", base_table, "External base table (CSV)");
    sweep->add_option("--out", out_path, "Write the CSV to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : BDET_ERR_INPUT;
    }

    Runner run;
    run.as_json = as_json;
    if (bdet_context_create(&run.ctx) != BDET_OK) return BDET_ERR_INTERNAL;
    const bool tol_given = app.count("--tol") > 0;
    if (bdet_context_set_tolerance(run.ctx, tol) != BDET_OK) {
        std::cerr << "error: " << bdet_last_error(run.ctx) << "\n";
        return BDET_ERR_INPUT;
    }

    try {
        if (!base_table.empty()) {
            const bdet_status st = bdet_context_load_base_table(run.ctx, base_table.c_str());
            if (st != BDET_OK) {
                std::cerr << "error: " << bdet_last_error(run.ctx) << "\n";
                return st;
            }
        }
        auto load_map = [&](MapHandle& h) -> bdet_status {
            if (!catalog.empty()) return bdet_map_from_catalog(run.ctx, catalog.c_str(), &h.m);
            return bdet_map_from_json(run.ctx, read_file(map_file).c_str(), &h.m);
        };
        auto fail = [&](bdet_status st) {
            std::cerr << "error: " << bdet_last_error(run.ctx) << "\n";
            return static_cast<int>(st);
        };

        if (*analyze) {
            MapHandle h;
            if (auto st = load_map(h)) return fail(st);
            return run.emit("analyze", bdet_analyze(run.ctx, h.m));
        }
        if (*det_flat) return run.emit("det-flat", bdet_det_flat(run.ctx, read_file(config_file).c_str()));
        if (*det_belyi || *accessory) {
            MapHandle h;
            if (auto st = load_map(h)) return fail(st);
            const auto b = parse_list(beta3, 3, "--beta");
            if (*det_belyi) return run.emit("det-belyi", bdet_det_belyi(run.ctx, h.m, b[0], b[1], b[2]));
            return run.emit("accessory", bdet_accessory(run.ctx, h.m, b[0], b[1], b[2]));
        }
        if (*det_family) {
            const auto b = parse_list(beta3, 3, "--beta");
            return run.emit("det-family", bdet_det_family(run.ctx, family.c_str(), ell, b[0], b[1], b[2]));
        }
        if (*det_platonic) return run.emit("det-platonic", bdet_det_platonic(run.ctx, solid.c_str(), beta));
        if (*elliptic) {
            if (!grid_re.empty())
                return run.emit_text(bdet_elliptic_grid(run.ctx, grid_re.c_str(), grid_im.c_str()), out_path);
            if (tau.empty()) {
                std::cerr << "error: elliptic needs --tau re,im or --grid-re/--grid-im\n";
                return BDET_ERR_INPUT;
            }
            const auto t = parse_list(tau, 2, "--tau");
            if (search) return run.emit("elliptic-search", bdet_elliptic_stationary(run.ctx, t[0], t[1]));
            return run.emit("elliptic", bdet_elliptic(run.ctx, t[0], t[1]));
        }
        if (*stationarity)
            return run.emit("stationarity", bdet_stationarity(run.ctx, solid.c_str(), step, tol_given ? tol : 0.0));
        if (*sweep) return run.emit_text(bdet_sweep_platonic(run.ctx, solid.c_str(), grid.c_str()), out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BDET_ERR_INPUT;
    }
    return BDET_ERR_INPUT;
}
