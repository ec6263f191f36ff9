#ifndef CAYLEYWALK_CAPI_H
#define CAYLEYWALK_CAPI_H

/* C interface to the walk library.
 *
 * Conventions:
 *  - Every function returns a status code: 0 = success, 1 = a verification
 *    or validation check failed (the output payload explains why), 2 = usage
 *    or structural error (inspect cw_last_error()).
 *  - All returned strings (char** out parameters) are heap-allocated and
 *    must be released with cw_string_free(); on non-zero status with a
 *    report payload the string is still set when documented below.
 *  - Walks are opaque handles created from the JSON schema documented in
 *    the README and released with cw_walk_free().
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cw_walk cw_walk;

/* Last error message for the calling thread (empty string if none). */
const char* cw_last_error(void);

void cw_string_free(char* s);

/* --- walk lifecycle ------------------------------------------------------ */
int cw_walk_load(const char* walk_json, cw_walk** out);
void cw_walk_free(cw_walk* w);
int cw_walk_to_json(const cw_walk* w, char** out_json);

/* --- walk operations ------------------------------------------------------ */
/* Unitarity: 0 if residual <= tolerance, 1 otherwise; report always set:
 * { "residual": float, "tolerance": float, "pass": bool,
 *   "breakdown": [ { "g": str, "left": float, "right": float } ] }          */
int cw_walk_verify(const cw_walk* w, char** report_json);

/* Coarse-graining of a scalar walk; outputs the coin-|Q| walk JSON and a
 * human-readable symbol-placement listing (either output may be NULL).     */
int cw_walk_coarse_grain(const cw_walk* w, char** walk_json,
                         char** provenance_text);

/* Dispersion on an n-per-axis grid clipped to the Brillouin zone.
 * CSV columns: k_1..k_d, omega_1..omega_s (header included).               */
int cw_walk_dispersion(const cw_walk* w, int grid_points, char** csv);

/* Evolution on an L^d periodic patch. init_json is optional (NULL = delta
 * at the identity): { "type": "delta", "site"?: [int], "q"?: int } or
 * { "type": "gauss", "k0": [float], "width": float }.
 * CSV columns: x_1..x_d, q, probability.                                   */
int cw_walk_evolve(const cw_walk* w, int steps, int patch_size,
                   const char* init_json, char** csv);

/* Scalar-vs-coarse-grained evolution cross check; 0 if the maximum
 * amplitude deviation is <= tolerance, 1 otherwise.                          */
int cw_walk_compare(const cw_walk* w, int steps, int patch_size,
                    double* max_deviation);

/* Numerical search for scalar unitary assignments on the walk's generating
 * set. Output: { "quadrangular": bool, "best_residual": float,
 * "solutions": [ [ [re, im] ] ] }.                                          */
int cw_walk_search(const cw_walk* w, int restarts, unsigned seed,
                   char** result_json);

/* Quadrangularity of the walk's generating set: 0 pass, 1 fail; report:
 * { "quadrangular": bool, "violations": [ str ] }.                          */
int cw_graph_quadrangularity(const cw_walk* w, char** report_json);

/* --- extensions ----------------------------------------------------------- */
/* All non-Abelian index-2 extension classes of Z^dim (dim in {1,2,3}) as a
 * JSON array of extension objects (with names and presentations).          */
int cw_extensions_enumerate(int dim, char** json);

/* Structural validation of extension JSON: 0 valid, 1 invalid; report:
 * { "valid": bool, "violations": [ str ] }.                                 */
int cw_extension_validate(const char* extension_json, char** report_json);

/* --- catalog -------------------------------------------------------------- */
/* { name: description } of all built-in walk constructors.                 */
int cw_catalog_list(char** json);

/* Builds a named catalog walk. params_json (optional, NULL = defaults):
 * { "<param>": float, ..., "scalars"?: [ [re, im] ] }.                      */
int cw_catalog_emit(const char* name, const char* params_json,
                    char** walk_json);

/* --- no-go certificate ----------------------------------------------------- */
/* Executable certificate that no isotropic scalar walk exists on the
 * Z^d x| Z2 reflection graph: 0 if the bound holds, 1 otherwise.            */
int cw_nogo_certificate(int dim, int samples, int search_restarts,
                        unsigned seed, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* CAYLEYWALK_CAPI_H */
