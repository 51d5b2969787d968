/* SPDX-License-Identifier: Apache-2.0 */
/* Copyright 2026 The belyidet authors */
#ifndef BELYIDET_BELYIDET_H
#define BELYIDET_BELYIDET_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(BELYIDET_BUILDING)
#define BDET_API __attribute__((visibility("default")))
#else
#define BDET_API
#endif

/* Status codes double as process exit codes for the command-line tool. */
typedef enum bdet_status {
    BDET_OK = 0,
    BDET_ERR_INTERNAL = 1,
    BDET_ERR_INPUT = 2,       /* malformed or out-of-domain input */
    BDET_ERR_CONSISTENCY = 3  /* independent routes disagree beyond tolerance */
} bdet_status;

typedef struct bdet_context bdet_context;
typedef struct bdet_map bdet_map;

BDET_API const char* bdet_version(void);

BDET_API bdet_status bdet_context_create(bdet_context** out);
BDET_API void bdet_context_destroy(bdet_context* ctx);

/* Tolerance for cross-route agreement (default 1e-8). */
BDET_API bdet_status bdet_context_set_tolerance(bdet_context* ctx, double tol);
BDET_API double bdet_context_tolerance(const bdet_context* ctx);

/* External base table (CSV). Replaces any table loaded before. */
BDET_API bdet_status bdet_context_load_base_table(bdet_context* ctx, const char* path);

/* Message of the last failed call, or "" after a success. */
BDET_API const char* bdet_last_error(const bdet_context* ctx);

/* Output of the last successful call, or of a call that returned
 * BDET_ERR_CONSISTENCY: a JSON document, or CSV text for the grid calls.
 * Valid until the next call on the same context. */
BDET_API const char* bdet_result(const bdet_context* ctx);

BDET_API bdet_status bdet_map_from_json(bdet_context* ctx, const char* json, bdet_map** out);
BDET_API bdet_status bdet_map_from_catalog(bdet_context* ctx, const char* name, bdet_map** out);
BDET_API void bdet_map_destroy(bdet_map* map);

BDET_API bdet_status bdet_analyze(bdet_context* ctx, bdet_map* map);

/* Flat configuration JSON; the area is computed by two quadratures. */
BDET_API bdet_status bdet_det_flat(bdet_context* ctx, const char* config_json);

/* Determinant of f^* m_beta for the triangle (beta0, beta1, betainf). */
BDET_API bdet_status bdet_det_belyi(bdet_context* ctx, bdet_map* map, double beta0, double beta1, double beta_inf);

/* family: cyclic, dihedral, tetrahedral, octahedral or icosahedral; ell ignored
 * for the last three. */
BDET_API bdet_status bdet_det_family(bdet_context* ctx, const char* family, int ell, double beta0, double beta1,
                                     double beta_inf);

/* solid: tetrahedron, octahedron, cube, icosahedron, dodecahedron or dihedron(l). */
BDET_API bdet_status bdet_det_platonic(bdet_context* ctx, const char* solid, double beta);

BDET_API bdet_status bdet_accessory(bdet_context* ctx, bdet_map* map, double beta0, double beta1, double beta_inf);

BDET_API bdet_status bdet_elliptic(bdet_context* ctx, double tau_re, double tau_im);
BDET_API bdet_status bdet_elliptic_stationary(bdet_context* ctx, double start_re, double start_im);
/* Grids as "start:stop:step"; the result is CSV. */
BDET_API bdet_status bdet_elliptic_grid(bdet_context* ctx, const char* re_grid, const char* im_grid);

/* step in [1e-5, 1e-2]; tol <= 0 selects the default for the solid. */
BDET_API bdet_status bdet_stationarity(bdet_context* ctx, const char* solid, double step, double tol);

/* CSV with header "beta,logdet_area4pi". */
BDET_API bdet_status bdet_sweep_platonic(bdet_context* ctx, const char* solid, const char* grid);

#ifdef __cplusplus
}
#endif

#endif /* BELYIDET_BELYIDET_H */
