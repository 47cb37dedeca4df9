/* ktfr — learnable Wigner-Ville time-frequency analysis engine.
 *
 * C interface to the shared library. All objects are opaque handles owned
 * by the library; every function returns a ktfr_status and reports outputs
 * through pointers. On failure the thread-local message from
 * ktfr_last_error() describes what went wrong.
 */
#ifndef KTFR_H
#define KTFR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ktfr_status {
    KTFR_OK = 0,
    KTFR_ERR_INVALID = 1,  /* bad arguments or broken invariants */
    KTFR_ERR_DOMAIN = 2,   /* mathematical precondition violated */
    KTFR_ERR_IO = 3,       /* file parsing / writing */
    KTFR_ERR_PSD = 4,      /* fast path inapplicable: use the exact path */
    KTFR_ERR_INTERNAL = 5
} ktfr_status;

const char* ktfr_last_error(void);
const char* ktfr_version(void);

/* ---- signals ---------------------------------------------------------- */

typedef struct ktfr_signal ktfr_signal;

/* 16-bit PCM mono WAV, samples scaled by 1/32768. */
ktfr_status ktfr_signal_from_wav(const char* path, ktfr_signal** out);

/* Synthesis from the spec syntax, e.g. "tone:0.5pi", "chirp:0.2pi,0.8pi",
 * "noise:seed=7", sums joined with '+'. */
ktfr_status ktfr_signal_from_spec(const char* spec, size_t length, double sample_rate_hz,
                                  double amplitude, ktfr_signal** out);

ktfr_status ktfr_signal_analytic(const ktfr_signal* in, ktfr_signal** out);
ktfr_status ktfr_signal_is_real(const ktfr_signal* in, int* is_real);
ktfr_status ktfr_signal_length(const ktfr_signal* in, size_t* out);
ktfr_status ktfr_signal_sample_rate(const ktfr_signal* in, double* out);
void ktfr_signal_free(ktfr_signal* sig);

/* ---- kernel grids ----------------------------------------------------- */

typedef struct ktfr_grid ktfr_grid;

typedef struct ktfr_preset_hyper {
    double sigma_t;       /* spectrogram / mel window spread (samples) */
    double sigma0;        /* scalogram-family mother spread */
    double largest_scale; /* S */
    double widening;      /* scattering widening s */
    double chirp_rho;     /* chirpogram chirpness, |rho| < 1 */
} ktfr_preset_hyper;

/* name: spectrogram | mel_spectrogram | scalogram | scattering_layer |
 * chirpogram */
ktfr_status ktfr_grid_preset(const char* name, size_t t_out, size_t f_out,
                             const ktfr_preset_hyper* hyper, ktfr_grid** out);
ktfr_status ktfr_grid_from_csv(const char* path, ktfr_grid** out);
ktfr_status ktfr_grid_to_csv(const ktfr_grid* grid, const char* path);
ktfr_status ktfr_grid_size(const ktfr_grid* grid, size_t* t_out, size_t* f_out);
/* Per-frequency parameter record (mu_t, mu_f, sigma_t, sigma_f, rho). */
ktfr_status ktfr_grid_cell(const ktfr_grid* grid, size_t t, size_t f, double out_params[5]);
void ktfr_grid_free(ktfr_grid* grid);

/* ---- transforms ------------------------------------------------------- */

typedef struct ktfr_tfr ktfr_tfr;

ktfr_status ktfr_wvd(const ktfr_signal* x, ktfr_tfr** out);
ktfr_status ktfr_spectrogram(const ktfr_signal* x, double sigma_seconds, size_t hop,
                             size_t n_bins, ktfr_tfr** out);
ktfr_status ktfr_smoothed_pwvd(const ktfr_signal* x, double base_sigma_t, double base_sigma_f,
                               size_t hop, size_t fstep, ktfr_tfr** out);
ktfr_status ktfr_k_exact(const ktfr_signal* x, const ktfr_grid* grid, ktfr_tfr** out);
ktfr_status ktfr_k_fast(const ktfr_signal* x, const ktfr_grid* grid, double base_sigma_t,
                        double base_sigma_f, size_t hop, size_t fstep, ktfr_tfr** out);

ktfr_status ktfr_tfr_dims(const ktfr_tfr* m, size_t* rows, size_t* cols);
/* Row-major values; buffer must hold rows*cols doubles. */
ktfr_status ktfr_tfr_values(const ktfr_tfr* m, double* buffer, size_t buffer_len);
ktfr_status ktfr_tfr_save_csv(const ktfr_tfr* m, const char* path);
ktfr_status ktfr_tfr_load_csv(const char* path, ktfr_tfr** out);
/* 8-bit min-max scaled PGM plus a ".meta.csv" sidecar with the scaling. */
ktfr_status ktfr_tfr_save_pgm(const ktfr_tfr* m, const char* path);
ktfr_status ktfr_tfr_compare(const ktfr_tfr* a, const ktfr_tfr* b, double* max_rel,
                             double* mean_rel);
void ktfr_tfr_free(ktfr_tfr* m);

/* ---- diagnostics ------------------------------------------------------ */

typedef struct ktfr_interference {
    double min_value;
    double max_value;
    double negative_fraction;
    int passes_nonnegativity;
} ktfr_interference;

ktfr_status ktfr_interference_report(const ktfr_tfr* k, ktfr_interference* out);

typedef struct ktfr_logon {
    double sigma_t_rot;
    double sigma_f_rot;
    double area;
    int passes; /* area >= 1/(4 pi) */
} ktfr_logon;

ktfr_status ktfr_logon_area(const double params5[5], ktfr_logon* out);

typedef struct ktfr_lipschitz {
    double lhs;
    double rhs;
    double param_distance_sq;
    int holds;
} ktfr_lipschitz;

ktfr_status ktfr_lipschitz_bound(const ktfr_grid* g1, const ktfr_grid* g2,
                                 const ktfr_signal* x, ktfr_lipschitz* out);

ktfr_status ktfr_wvd_diagnostics(const ktfr_tfr* w, const ktfr_signal* x,
                                 double* frobenius_norm, double* norm_ratio,
                                 double* marginal_error);

/* ---- learning harness -------------------------------------------------- */

typedef struct ktfr_train_config {
    size_t n_train;        /* e.g. 200 */
    size_t n_test;         /* e.g. 100 */
    size_t signal_length;  /* e.g. 512 */
    double sample_rate_hz;
    size_t n_kernels;      /* shared-per-frequency kernel count */
    double learning_rate;
    int epochs;
    int batch_size;        /* 0 = full batch */
    uint64_t seed;
    int numeric_gradients; /* nonzero = central differences through the pipeline */
} ktfr_train_config;

typedef struct ktfr_train_stats {
    double final_test_accuracy;
    double initial_test_accuracy;
    double first_epoch_loss;
    double last_epoch_loss;
} ktfr_train_stats;

/* Runs the synthetic up/down-chirp experiment; optional checkpoint and
 * loss-curve CSV outputs (pass NULL to skip). */
ktfr_status ktfr_train_chirp(const ktfr_train_config* cfg, const char* checkpoint_csv,
                             const char* curve_csv, ktfr_train_stats* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* KTFR_H */
