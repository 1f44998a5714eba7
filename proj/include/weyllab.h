/* C interface to the foliated-spacetime curvature and entropy library.
 *
 * All functions return WEYL_OK on success; on failure the return code
 * classifies the error and weyl_last_error() gives a thread-local message.
 * Strings returned through char** are heap-allocated; release them with
 * weyl_string_free.
 */
#ifndef WEYLLAB_H
#define WEYLLAB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  WEYL_OK = 0,
  WEYL_ERR_CONFIG = 1,  /* bad name, malformed JSON, invalid parameter */
  WEYL_ERR_DOMAIN = 2,  /* point outside the metric's validity domain */
  WEYL_ERR_INTERNAL = 3
} weyl_status;

/* Opaque handle to an analytic foliated metric. */
typedef struct weyl_metric weyl_metric;

/* Open a catalog metric by name; params_json may be NULL or "{}" for the
 * defaults (e.g. {"m": 1.0} for schwarzschild). */
weyl_status weyl_metric_open(const char* name, const char* params_json,
                             weyl_metric** out);

/* Open a metric from a full JSON description with expression-valued
 * lapse/metric components. */
weyl_status weyl_metric_open_custom(const char* desc_json, weyl_metric** out);

void weyl_metric_close(weyl_metric* m);

/* Catalog listing with parameters and declared classifications. */
weyl_status weyl_catalog_json(char** out);

/* Pointwise report at (t, x): classification, residuals, curvature norms,
 * entropy densities, fluid read-out. options_json may be NULL; recognized
 * keys: "tol", "zeta", "fluid" {k, alpha, kprime, alphaprime},
 * "fd" {step, order, richardson_levels}. */
weyl_status weyl_point_report_json(weyl_metric* m, double t, const double x[3],
                                   const char* options_json, char** out);

/* Region entropy at a single slice. config_json keys: "t", "region"
 * ({"shape":"box"|"ball", "box":[[a,b],[a,b],[a,b]], "center":[...],
 * "radius":r, "order":n, "panels":n}), plus the point-report options. */
weyl_status weyl_region_entropy_json(weyl_metric* m, const char* config_json,
                                     char** out);

/* Time-series scan over a region. config_json additionally takes "t0",
 * "t1", "steps" (>= 2). CSV columns:
 * t,S_U,Spf_U,area,vol,bound,quadError (header always present). */
weyl_status weyl_region_scan_csv(weyl_metric* m, const char* config_json,
                                 char** out);
weyl_status weyl_region_scan_json(weyl_metric* m, const char* config_json,
                                  char** out);

/* Verification suite. config_json may be NULL (full default suite) or
 * {"metric": name} to restrict to one metric's identity cases.
 * all_pass receives 1 iff every case passed (may be NULL). */
weyl_status weyl_verify_json(const char* config_json, char** out, int* all_pass);

void weyl_string_free(char* s);

/* Message for the most recent failure on this thread; never NULL. */
const char* weyl_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* WEYLLAB_H */
