/*
 * lmgphase — ground-state geometric phase of collective spin models.
 *
 * C interface to the analytic Holstein-Primakoff/Bogoliubov pipeline, the
 * truncated squeezed-vacuum phase series, the exact-diagonalization oracle
 * and the parameter-sweep machinery. All functions return LMG_OK on success
 * and a nonzero status otherwise; lmg_last_error() describes the most recent
 * failure on the calling thread. Every object created by a *_create or
 * *_run function must be released with the matching *_destroy.
 */
#ifndef LMGPHASE_H
#define LMGPHASE_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define LMG_API __declspec(dllexport)
#else
#define LMG_API __attribute__((visibility("default")))
#endif

typedef enum lmg_status {
    LMG_OK = 0,
    LMG_ERR_DOMAIN = 1,              /* input outside the accepted domain   */
    LMG_ERR_NO_ROOT = 2,             /* displacement condition has no root  */
    LMG_ERR_SIZE = 3,                /* above a configured dimension limit  */
    LMG_ERR_CONVERGENCE = 4,         /* eigensolver failure                 */
    LMG_ERR_CONFIG = 5,              /* malformed axes / null arguments     */
    LMG_ERR_INSUFFICIENT_POINTS = 6, /* fits and stencils need more samples */
    LMG_ERR_UNSTABLE = 7,            /* |epsilon| > 1: stability domain left */
    LMG_ERR_INTERNAL = 8
} lmg_status;

LMG_API const char* lmg_version(void);
LMG_API const char* lmg_status_name(lmg_status status);
/* Message for the last failing call on this thread ("" if none). */
LMG_API const char* lmg_last_error(void);

/* ---- validated model parameters (opaque) ------------------------------ */

typedef struct lmg_biaxial_params lmg_biaxial_params;
typedef struct lmg_uniaxial_params lmg_uniaxial_params;

/* gamma in [0,1], h > 0, n_particles >= 2 */
LMG_API lmg_status lmg_biaxial_params_create(double gamma, double h, long n_particles,
                                             lmg_biaxial_params** out);
LMG_API void lmg_biaxial_params_destroy(lmg_biaxial_params* params);

/* h_z > 0 (h_x any sign), n_particles >= 2 */
LMG_API lmg_status lmg_uniaxial_params_create(double h_x, double h_z, long n_particles,
                                              lmg_uniaxial_params** out);
LMG_API void lmg_uniaxial_params_destroy(lmg_uniaxial_params* params);

/* ---- analytic pipeline ------------------------------------------------- */

typedef struct lmg_biaxial_result {
    double theta;      /* rotation angle onto the semiclassical axis */
    double e;          /* energy density per spin                    */
    double delta;      /* number-operator coefficient                */
    double gamma_coef; /* pair-creation coefficient                  */
    double epsilon;    /* tanh(2x) = 2*gamma_coef/delta              */
    double t_sq;       /* tanh^2(x)                                  */
    double sigma;      /* ground-energy shift                        */
    double delta_d;    /* delta*sqrt(1-epsilon^2)                    */
    double phi_g;      /* geometric phase, radians                   */
    double n_mean;     /* mean excitation of the truncated series    */
    long truncation_m; /* summation bound actually used              */
} lmg_biaxial_result;

typedef struct lmg_uniaxial_result {
    double lambda0; /* displacement amplitude, |lambda0| < 1 */
    double y;       /* 1 - 2*lambda0^2                       */
    double e0;      /* order-N + order-1 energy estimate     */
    double omega_residual;
    double delta;
    double gamma_coef;
    double epsilon;
    double t_sq;
    double sigma;
    double delta_d;
    double phi_g;
    double n_mean;
    long truncation_m;
} lmg_uniaxial_result;

/* truncation_m < 0 selects the default floor(N/2). */
LMG_API lmg_status lmg_biaxial_eval(const lmg_biaxial_params* params, long truncation_m,
                                    lmg_biaxial_result* out);
LMG_API lmg_status lmg_uniaxial_eval(const lmg_uniaxial_params* params, long truncation_m,
                                     lmg_uniaxial_result* out);

/* ---- phase series ------------------------------------------------------ */

LMG_API lmg_status lmg_tanh_sq_from_epsilon(double epsilon, double* t_sq);
/* weights must hold m+1 doubles; filled with the normalized distribution. */
LMG_API lmg_status lmg_weight_table(double t_sq, long m, double* weights);
LMG_API lmg_status lmg_phase_series(double t_sq, long m, double* phi_g, double* n_mean);
/* Closed-form m -> infinity mean, t_sq/(1-t_sq); requires t_sq < 1. */
LMG_API lmg_status lmg_untruncated_mean(double t_sq, double* n_mean);

/* ---- exact-diagonalization oracle -------------------------------------- */

typedef struct lmg_ed_options {
    long dim_limit;                 /* sector dimension cap, default 4001   */
    double splitting_threshold_rel; /* doublet recombination, default 1e-6  */
    long overlap_steps;             /* discretized-loop steps, default 10^4 */
} lmg_ed_options;

LMG_API void lmg_ed_options_init(lmg_ed_options* options);

typedef struct lmg_ed_result {
    double e0, e1;       /* two lowest sector eigenvalues            */
    double gap;          /* e1 - e0                                  */
    double parity0, parity1;
    double s_tilde_z;    /* <S~_z> in the (recombined) ground state  */
    double n_mean;       /* N/2 - <S~_z>                             */
    double phase_exact;  /* pi * <S~_z>                              */
    double phase_paper;  /* pi * (1 - n_mean)                        */
    double phase_overlap;/* discretized overlap-product phase        */
} lmg_ed_result;

LMG_API lmg_status lmg_ed_eval_biaxial(const lmg_biaxial_params* params,
                                       const lmg_ed_options* options, lmg_ed_result* out);
/* Uniaxial oracle rotates about the lab z axis (theta = 0). */
LMG_API lmg_status lmg_ed_eval_uniaxial(const lmg_uniaxial_params* params,
                                        const lmg_ed_options* options, lmg_ed_result* out);

/* Full 2^N check against the S = N/2 sector; limited to N <= 12. */
LMG_API lmg_status lmg_full_hilbert_biaxial(const lmg_biaxial_params* params,
                                            double* sector_e0, double* full_e0,
                                            int* max_spin_confirmed);
LMG_API lmg_status lmg_full_hilbert_uniaxial(const lmg_uniaxial_params* params,
                                             double* sector_e0, double* full_e0,
                                             int* max_spin_confirmed);

/* ---- sweeps and analysis ------------------------------------------------ */

typedef struct lmg_axis {
    double min;
    double max;
    long steps; /* steps == 1 pins a single value (min == max) */
} lmg_axis;

typedef struct lmg_table lmg_table; /* opaque result grid */

typedef enum lmg_model { LMG_MODEL_BIAXIAL = 0, LMG_MODEL_UNIAXIAL = 1 } lmg_model;

/* threads: 0 = hardware concurrency. Row order is grid order regardless of
 * thread count. Failed grid points keep their rows, carry NaN cells and a
 * textual error marker. */
LMG_API lmg_status lmg_run_biaxial_sweep(const lmg_axis* gamma_axis, const lmg_axis* h_axis,
                                         long n_particles, long truncation_m, int with_ed,
                                         const lmg_ed_options* ed_options, int threads,
                                         lmg_table** out);
LMG_API lmg_status lmg_run_uniaxial_sweep(const lmg_axis* hx_axis, const lmg_axis* hz_axis,
                                          long n_particles, long truncation_m, int threads,
                                          lmg_table** out);
LMG_API lmg_status lmg_run_oracle_sweep(lmg_model model, const lmg_axis* axis1,
                                        const lmg_axis* axis2, long n_particles,
                                        long truncation_m, const lmg_ed_options* ed_options,
                                        int full_check, int threads, lmg_table** out);

LMG_API void lmg_table_destroy(lmg_table* table);
LMG_API long lmg_table_rows(const lmg_table* table);
LMG_API long lmg_table_cols(const lmg_table* table);
LMG_API const char* lmg_table_column_name(const lmg_table* table, long col);
LMG_API lmg_status lmg_table_get(const lmg_table* table, long row, long col, double* value);
/* "" when the row evaluated cleanly; NULL for an invalid index. */
LMG_API const char* lmg_table_row_error(const lmg_table* table, long row);

typedef struct lmg_fit {
    double slope;
    double intercept;
    double r_sq;
} lmg_fit;

/* Least-squares fit of phi against N plus log|phi| against log N. */
LMG_API lmg_status lmg_scaling_fit(const double* n_values, const double* phi_values,
                                   long count, lmg_fit* linear, lmg_fit* loglog);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LMGPHASE_H */
