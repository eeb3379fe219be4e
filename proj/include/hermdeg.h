/* hermdeg: Hermitian distance degrees of complex algebraic varieties.
 *
 * C interface to the computation core.  All functions returning
 * hermdeg_status leave an error message retrievable via hermdeg_last_error
 * on failure.  Output strings are heap-allocated and must be released with
 * hermdeg_free.
 */
#ifndef HERMDEG_H
#define HERMDEG_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    HERMDEG_OK = 0,
    HERMDEG_ERR_INPUT = 2,      /* bad syntax / arguments / unusable variety */
    HERMDEG_ERR_BUDGET = 3,     /* computation budget exceeded */
    HERMDEG_ERR_DEGENERATE = 4, /* degenerate sample; resample advised */
    HERMDEG_ERR_INTERNAL = 5
} hermdeg_status;

typedef struct hermdeg_session hermdeg_session; /* configuration + error slot */
typedef struct hermdeg_variety hermdeg_variety;

hermdeg_session* hermdeg_session_create(void);
void hermdeg_session_destroy(hermdeg_session* s);

/* Configuration keys: trials, seed, tol, residual_tol, budget, jobs,
 * fast_saturate (0/1).  Values are decimal strings. */
hermdeg_status hermdeg_session_set(hermdeg_session* s, const char* key, const char* value);
const char* hermdeg_last_error(const hermdeg_session* s);

hermdeg_status hermdeg_variety_load(hermdeg_session* s, const char* path, hermdeg_variety** out);
hermdeg_status hermdeg_variety_parse(hermdeg_session* s, const char* text, hermdeg_variety** out);
void hermdeg_variety_destroy(hermdeg_variety* v);

void hermdeg_free(char* p);

/* route: "auto", "affine", "projective" or "param"; JSON result. */
hermdeg_status hermdeg_vhd(hermdeg_session* s, const hermdeg_variety* v, const char* route, char** json_out);

/* point: comma-separated complex coordinates ("3, 0" or "1/2+3/4*i, 2"). */
hermdeg_status hermdeg_hd_sample(hermdeg_session* s, const hermdeg_variety* v, const char* point,
                                 char** json_out);

/* window bounds and step as decimal or rational strings; CSV x,y,count. */
hermdeg_status hermdeg_hd_scan(hermdeg_session* s, const hermdeg_variety* v, const char* xmin,
                               const char* xmax, const char* ymin, const char* ymax, const char* step,
                               char** csv_out);

/* point may be NULL for the symbolic (u, v) ideal; set projective != 0 for
 * the bi-homogeneous variant.  Output re-parses under the ideal grammar. */
hermdeg_status hermdeg_critical_ideal(hermdeg_session* s, const hermdeg_variety* v, const char* point,
                                      int projective, char** text_out);

hermdeg_status hermdeg_ed(hermdeg_session* s, const hermdeg_variety* v, char** json_out);

hermdeg_status hermdeg_bounds_hypersurface(hermdeg_session* s, int d, int n, char** json_out);
hermdeg_status hermdeg_bounds_parametrized(hermdeg_session* s, int d, int m, char** json_out);

/* kind: "evolute", "outward", "complex" or "complex-real". */
hermdeg_status hermdeg_evolute(hermdeg_session* s, const hermdeg_variety* v, const char* kind,
                               char** text_out);
/* Sign sampling of the same discriminant polynomial on a grid; CSV x,y,sign. */
hermdeg_status hermdeg_evolute_csv(hermdeg_session* s, const hermdeg_variety* v, const char* kind,
                                   const char* xmin, const char* xmax, const char* ymin, const char* ymax,
                                   const char* step, char** csv_out);

/* at_point NULL: symbolic vHD polynomial; otherwise HD polynomial at the
 * point (v = conj u). */
hermdeg_status hermdeg_hd_poly(hermdeg_session* s, const hermdeg_variety* v, const char* at_point,
                               char** text_out);
/* Duality identity sampling for cones; JSON {samples, matched}. */
hermdeg_status hermdeg_check_duality(hermdeg_session* s, const hermdeg_variety* v, int samples,
                                     char** json_out);

/* Dual variety of a cone, as a variety file. */
hermdeg_status hermdeg_dual(hermdeg_session* s, const hermdeg_variety* v, char** text_out);

/* Product variety X x Y, as a variety file. */
hermdeg_status hermdeg_product(hermdeg_session* s, const hermdeg_variety* a, const hermdeg_variety* b,
                               char** text_out);

#ifdef __cplusplus
}
#endif

#endif /* HERMDEG_H */
