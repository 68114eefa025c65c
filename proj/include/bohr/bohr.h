/* C interface to the radius/functional toolkit. All objects are opaque
 * handles created and destroyed here; every fallible call returns a status
 * code and writes its results through out-parameters. bohr_last_error()
 * returns a thread-local message for the most recent failure. */
#ifndef BOHR_H
#define BOHR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bohr_status {
    BOHR_OK = 0,
    BOHR_ERR_DOMAIN = 1,      /* argument outside its documented domain */
    BOHR_ERR_USAGE = 2,       /* unknown name / malformed request */
    BOHR_ERR_CONVERGENCE = 3, /* certified solve failed */
    BOHR_ERR_PRECISION = 4,   /* tail bound degenerates at the request */
    BOHR_ERR_INTERNAL = 5,
} bohr_status;

/* Functional kinds. 0..8 are the refined two-variable kinds A..I; the rest
 * are their single-variable baselines. */
enum {
    BOHR_KIND_A = 0, BOHR_KIND_B, BOHR_KIND_C, BOHR_KIND_D, BOHR_KIND_E,
    BOHR_KIND_F, BOHR_KIND_G, BOHR_KIND_H, BOHR_KIND_I,
    BOHR_KIND_THM_B1, BOHR_KIND_THM_B2, BOHR_KIND_THM_C1, BOHR_KIND_THM_C2,
    BOHR_KIND_THM_D1, BOHR_KIND_THM_D2, BOHR_KIND_THM_E1, BOHR_KIND_THM_E2,
    BOHR_KIND_THM_F,
};

typedef struct bohr_func bohr_func;       /* unit-ball member */
typedef struct bohr_schwarz bohr_schwarz; /* order-m inner map */
typedef struct bohr_report bohr_report;   /* result of a verification run */

const char* bohr_version(void);
const char* bohr_last_error(void);

/* --- constructors (pass trunc_order < 0 for the default, 128) ----------- */

bohr_status bohr_func_mobius(double a, int trunc_order, bohr_func** out);
bohr_status bohr_func_blaschke(const double* zeros_re, const double* zeros_im,
                               size_t n_zeros, double rot_re, double rot_im,
                               int trunc_order, bohr_func** out);
bohr_status bohr_func_constant(double re, double im, int trunc_order, bohr_func** out);
bohr_status bohr_func_convex(const bohr_func* f, const bohr_func* g, double t,
                             bohr_func** out);
bohr_status bohr_func_scale(const bohr_func* f, double rho, bohr_func** out);
bohr_status bohr_func_rotate(const bohr_func* f, double lambda_re, double lambda_im,
                             bohr_func** out);
/* Seeded pseudo-random member; identical seeds give identical functions. */
bohr_status bohr_func_sample(uint64_t seed, int blaschke_degree_max, int mix_depth_max,
                             bohr_func** out);
void bohr_func_free(bohr_func* f);

bohr_status bohr_schwarz_new(int m, const bohr_func* inner, bohr_schwarz** out);
void bohr_schwarz_free(bohr_schwarz* w);

/* --- evaluation ---------------------------------------------------------- */

int bohr_func_order(const bohr_func* f);
bohr_status bohr_func_coeff(const bohr_func* f, int n, double* re, double* im);
/* use_series != 0 evaluates the truncated series and reports its tail bound
 * in *err; otherwise the closed form is used and *err is 0. */
bohr_status bohr_func_eval(const bohr_func* f, double z_re, double z_im, int use_series,
                           double* re, double* im, double* err);
bohr_status bohr_func_deriv(const bohr_func* f, double z_re, double z_im, int use_series,
                            double* re, double* im, double* err);
bohr_status bohr_schwarz_eval(const bohr_schwarz* w, double z_re, double z_im,
                              double* re, double* im);

/* --- functionals ---------------------------------------------------------- */

bohr_status bohr_majorant_sum(const bohr_func* f, int k, double r, double* value,
                              double* tail);
bohr_status bohr_area_norm(const bohr_func* f, double r, double* value, double* tail);
bohr_status bohr_area_term(const bohr_func* f, double r, double* value, double* tail);
bohr_status bohr_functional(int kind, const bohr_func* f, const bohr_schwarz* omega,
                            double z_re, double z_im, double* value, double* tail);
bohr_status bohr_extremal_value(int kind, int m, double a, double r, double* out);
bohr_status bohr_coefficient_bound(double a, double r, double* out);

/* --- radii ---------------------------------------------------------------- */

typedef struct bohr_root_result {
    double root;
    double lo, hi;   /* certified bracket, width <= tol */
    double residual; /* |P(root)| */
    int iterations;
    int sign_lo, sign_hi;
} bohr_root_result;

/* `family` is one of alpha, beta, zeta, eta, gamma, delta, theta, vartheta,
 * alpha_a, beta_a, mu, nu, tau, xi, chi, xi5, delta_alt. `a` is read only by
 * the *_a families (pass anything, e.g. 0, otherwise). tol <= 0 selects the
 * default 1e-12. */
bohr_status bohr_solve_radius(const char* family, int m, double a, double tol,
                              bohr_root_result* out);
bohr_status bohr_eval_family(const char* family, int m, double a, double r, double* out);
/* `name`: thmB1, thmB2, thmC1, thmC2, thmD1, thmD2, thmE1, thmE2, thmF. */
bohr_status bohr_classical_radius(const char* name, double a, double* out);
bohr_status bohr_limit_radius(const char* family, double* out);
/* Radius a refined kind's scan runs below (family root, or 1/3 for I). */
bohr_status bohr_functional_radius(int kind, int m, double* out);

/* --- verification ---------------------------------------------------------- */

bohr_status bohr_check_theorem(int kind, int m, uint64_t seed, long trials,
                               int z_per_function, double r_fraction,
                               bohr_report** out);
bohr_status bohr_check_lemma1(uint64_t seed, long trials, bohr_report** out);
bohr_status bohr_check_lemma2(uint64_t seed, long trials, bohr_report** out);
bohr_status bohr_check_schwarz_pick(uint64_t seed, long trials, int pairs,
                                    bohr_report** out);
bohr_status bohr_check_lemma3(int m, bohr_report** out);
bohr_status bohr_check_lemma4(int m, bohr_report** out);
bohr_status bohr_check_discrepancies(bohr_report** out);
bohr_status bohr_sharpness_witness(int kind, int m, double a, double eps, double* out);
bohr_status bohr_threshold_a_star(double* out);

const char* bohr_report_subject(const bohr_report* rep);
long bohr_report_trials(const bohr_report* rep);
double bohr_report_worst_margin(const bohr_report* rep);
int bohr_report_passed(const bohr_report* rep);
long bohr_report_violation_count(const bohr_report* rep);
/* Full report as a JSON document; free with bohr_string_free. */
char* bohr_report_to_json(const bohr_report* rep);
void bohr_report_free(bohr_report* rep);
void bohr_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* BOHR_H */
