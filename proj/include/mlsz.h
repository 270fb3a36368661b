#ifndef MLSZ_H
#define MLSZ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(MLSZ_BUILDING)
#define MLSZ_API __declspec(dllexport)
#else
#define MLSZ_API __declspec(dllimport)
#endif
#else
#define MLSZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mlsz_status {
    MLSZ_OK = 0,
    MLSZ_ERR_DOMAIN = 1,   /* invalid argument or malformed input */
    MLSZ_ERR_NUMERIC = 2,  /* overflow, non-convergence, truncation */
    MLSZ_ERR_INTERNAL = 3  /* allocation failure or anything unexpected */
} mlsz_status;

/* Message for the last failing call on this thread; "" after success. */
MLSZ_API const char* mlsz_last_error(void);
MLSZ_API const char* mlsz_version(void);

/* Strings returned through char** are malloc'd; release with mlsz_string_free. */
MLSZ_API void mlsz_string_free(char* s);

/* m · 2^exp2, enough range for E_{1/ρ} at any argument. */
typedef struct mlsz_scaled {
    double re;
    double im;
    int64_t exp2;
} mlsz_scaled;

MLSZ_API mlsz_status mlsz_scaled_to_complex(mlsz_scaled v, double* re, double* im);
MLSZ_API double mlsz_scaled_log_abs(mlsz_scaled v);

/* E_{1/ρ}(w). */
MLSZ_API mlsz_status mlsz_ml_eval(double rho, double w_re, double w_im, mlsz_scaled* out);

/* ---- context: fixed (ρ, n, λ) ---- */

typedef struct mlsz_context mlsz_context;

MLSZ_API mlsz_status mlsz_context_create(double rho, int n, double lambda_re, double lambda_im, mlsz_context** out);
MLSZ_API void mlsz_context_free(mlsz_context* ctx);
MLSZ_API double mlsz_context_radius(const mlsz_context* ctx);

/* s_n(R_n z), t_n(R_n z) and I_n(R_n z; λ). */
MLSZ_API mlsz_status mlsz_section(const mlsz_context* ctx, double z_re, double z_im, mlsz_scaled* out);
MLSZ_API mlsz_status mlsz_tail(const mlsz_context* ctx, double z_re, double z_im, mlsz_scaled* out);
MLSZ_API mlsz_status mlsz_combo(const mlsz_context* ctx, double z_re, double z_im, mlsz_scaled* out);

/* ---- curves ---- */

typedef enum mlsz_branch { MLSZ_BRANCH_INNER = 0, MLSZ_BRANCH_OUTER, MLSZ_BRANCH_ARC, MLSZ_BRANCH_T } mlsz_branch;

typedef struct mlsz_curve mlsz_curve;

/* S(ρ) on three branches; samples are per branch. */
MLSZ_API mlsz_status mlsz_curve_szego(double rho, int samples, double r_max, mlsz_curve** out);
MLSZ_API mlsz_status mlsz_curve_t(double rho, int samples, double r_max, mlsz_curve** out);
/* Level set u = −h/2 of the phase function. */
MLSZ_API mlsz_status mlsz_curve_sh(double rho, double h, int samples, double r_max, mlsz_curve** out);
MLSZ_API mlsz_status mlsz_curve_from_csv(const char* text, mlsz_curve** out);
MLSZ_API void mlsz_curve_free(mlsz_curve* c);

MLSZ_API size_t mlsz_curve_size(const mlsz_curve* c);
MLSZ_API mlsz_status mlsz_curve_point(const mlsz_curve* c, size_t i, mlsz_branch* branch, double* phi, double* r);
MLSZ_API mlsz_status mlsz_curve_to_csv(const mlsz_curve* c, char** out);

/* u(z) = |z|^ρ cos(ρ arg z) − 1 − ρ ln|z|. */
MLSZ_API mlsz_status mlsz_phase_u(double z_re, double z_im, double rho, double* out);
/* Distance from z to the nearer ray arg z = ±π/(2ρ). */
MLSZ_API mlsz_status mlsz_asymptote_distance(double z_re, double z_im, double rho, double* out);

/* ---- zeros ---- */

typedef struct mlsz_window {
    double re_min, re_max, im_min, im_max;
} mlsz_window;

typedef struct mlsz_zero {
    double re, im;
    double residual_log; /* ln|I_n| at the point; -inf for an exact zero */
    int certified;
    int near_asymptote;
    int multiplicity;
} mlsz_zero;

typedef struct mlsz_zeros mlsz_zeros;

/* Zeros of I_n(R_n z; λ) in the window.  λ = 0 uses the polynomial solver.
   strip_width > 0 flags zeros closer than that to the asymptotic rays. */
MLSZ_API mlsz_status mlsz_zeros_locate(const mlsz_context* ctx, mlsz_window w, double tol, double strip_width,
                                       mlsz_zeros** out);
MLSZ_API mlsz_status mlsz_winding_number(const mlsz_context* ctx, mlsz_window w, int* out);
MLSZ_API mlsz_status mlsz_zeros_from_json(const char* text, mlsz_zeros** out);
MLSZ_API void mlsz_zeros_free(mlsz_zeros* z);

MLSZ_API size_t mlsz_zeros_size(const mlsz_zeros* z);
MLSZ_API mlsz_status mlsz_zeros_get(const mlsz_zeros* z, size_t i, mlsz_zero* out);
MLSZ_API int mlsz_zeros_masked_origin(const mlsz_zeros* z);
MLSZ_API size_t mlsz_zeros_warning_count(const mlsz_zeros* z);
MLSZ_API mlsz_status mlsz_zeros_to_json(const mlsz_zeros* z, char** out);

/* ---- verification ---- */

typedef struct mlsz_verify_config {
    double rho;
    const double* lambda_re; /* n_lambda entries each; NULL/0 selects the suite default */
    const double* lambda_im;
    size_t n_lambda;
    const int* n_list;
    size_t n_n;
    double h;
    double delta2;
    double delta3;
    int as_printed;
    mlsz_window window;
} mlsz_verify_config;

MLSZ_API void mlsz_verify_config_default(mlsz_verify_config* cfg);

typedef struct mlsz_report mlsz_report;

/* suite: theorem1, theorem2, theorem3, theorem4, lemma1, lemma4 or kn. */
MLSZ_API mlsz_status mlsz_verify_run(const char* suite, const mlsz_verify_config* cfg, mlsz_report** out);
MLSZ_API void mlsz_report_free(mlsz_report* r);
MLSZ_API int mlsz_report_pass(const mlsz_report* r);
MLSZ_API size_t mlsz_report_check_count(const mlsz_report* r);
MLSZ_API mlsz_status mlsz_report_to_json(const mlsz_report* r, char** out);

/* ---- plotting ---- */

/* SVG of the given curves and zero sets; NULL arrays are allowed when the count is 0. */
MLSZ_API mlsz_status mlsz_plot_svg(const mlsz_curve* const* curves, size_t n_curves, const mlsz_zeros* const* zeros,
                                   size_t n_zeros, char** out);
/* Same, from curve CSV and zero JSON texts. */
MLSZ_API mlsz_status mlsz_plot_svg_text(const char* const* curve_csv, size_t n_curves, const char* const* zero_json,
                                        size_t n_zeros, char** out);

#ifdef __cplusplus
}
#endif

#endif
