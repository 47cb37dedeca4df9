#include "ktfr.h"

#include <cstring>
#include <string>

#include "core/errors.hpp"
#include "core/kernel.hpp"
#include "core/ktransform.hpp"
#include "core/learn.hpp"
#include "core/signal.hpp"
#include "core/stft.hpp"
#include "core/tfr.hpp"
#include "core/wav.hpp"
#include "core/wvd.hpp"

#define KTFR_API __attribute__((visibility("default")))

namespace {

thread_local std::string g_last_error;

ktfr_status fail(ktfr_status code, const char* what) {
    g_last_error = what ? what : "unknown error";
    return code;
}

template <typename Fn>
ktfr_status guarded(Fn&& fn) {
    try {
        fn();
        return KTFR_OK;
    } catch (const ktfr::PsdError& e) {
        return fail(KTFR_ERR_PSD, e.what());
    } catch (const ktfr::DomainError& e) {
        return fail(KTFR_ERR_DOMAIN, e.what());
    } catch (const ktfr::IoError& e) {
        return fail(KTFR_ERR_IO, e.what());
    } catch (const ktfr::InvalidArgument& e) {
        return fail(KTFR_ERR_INVALID, e.what());
    } catch (const std::exception& e) {
        return fail(KTFR_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(KTFR_ERR_INTERNAL, "unknown exception");
    }
}

ktfr::FastOptions fast_opts(size_t hop, size_t fstep) {
    ktfr::FastOptions o;
    o.hop = hop;
    o.fstep = fstep;
    return o;
}

}  // namespace

struct ktfr_signal {
    ktfr::Signal value;
};
struct ktfr_grid {
    ktfr::KernelGrid value;
};
struct ktfr_tfr {
    ktfr::TFRMatrix value;
};

extern "C" {

KTFR_API const char* ktfr_last_error(void) { return g_last_error.c_str(); }

KTFR_API const char* ktfr_version(void) { return "ktfr 1.0.0"; }

KTFR_API ktfr_status ktfr_signal_from_wav(const char* path, ktfr_signal** out) {
    if (!path || !out) return fail(KTFR_ERR_INVALID, "null argument");
    return guarded([&] { *out = new ktfr_signal{ktfr::load_wav(path)}; });
}

KTFR_API ktfr_status ktfr_signal_from_spec(const char* spec, size_t length,
                                           double sample_rate_hz, double amplitude,
                                           ktfr_signal** out) {
    if (!spec || !out) return fail(KTFR_ERR_INVALID, "null argument");
    return guarded([&] {
        *out = new ktfr_signal{
            ktfr::synth(ktfr::parse_signal_spec(spec, length, sample_rate_hz, amplitude))};
    });
}

KTFR_API ktfr_status ktfr_signal_analytic(const ktfr_signal* in, ktfr_signal** out) {
    if (!in || !out) return fail(KTFR_ERR_INVALID, "null argument");
    return guarded([&] { *out = new ktfr_signal{ktfr::analytic(in->value)}; });
}

KTFR_API ktfr_status ktfr_signal_is_real(const ktfr_signal* in, int* is_real) {
    if (!in || !is_real) return fail(KTFR_ERR_INVALID, "null argument");
    return guarded([&] { *is_real = in->value.is_real() ? 1 : 0; });
}

KTFR_API ktfr_status ktfr_signal_length(const ktfr_signal* in, size_t* out) {
    if (!in || !out) return fail(KTFR_ERR_INVALID, "null argument");
    *out = in->value.size();
    return KTFR_OK;
}

KTFR_API ktfr_status ktfr_signal_sample_rate(const ktfr_signal* in, double* out) {
    if (!in || !out) return fail(KTFR_ERR_INVALID, "null argument");
    *out = in->value.sample_rate_hz;
    return KTFR_OK;
}

KTFR_API void ktfr_signal_free(ktfr_signal* sig) { delete sig; }

KTFR_API ktfr_status ktfr_grid_preset(const char* name, size_t t_out, size_t f_out,
                                      const ktfr_preset_hyper* hyper, ktfr_grid** out) {
    if (!name || !out) return fail(KTFR_ERR_INVALID, "null argument");
    return guarded([&] {
        ktfr::Preset p;
        p.kind = ktfr::preset_kind_from_name(name);
        if (hyper) {
            p.sigma_t = hyper->sigma_t;
            p.sigma0 = hyper->sigma0;
            p.largest_scale = hyper->largest_scale;
            p.widening = hyper->widening;
            p.chirp_rho = hyper->chirp_rho;
        }
        *out = new ktfr_grid{ktfr::preset_params(p, t_out, f_out)};
    });
}

KTFR_API ktfr_status ktfr_grid_from_csv(const char* path, ktfr_grid** out) {
    if (!path || !out) return fail(KTFR_ERR_INVALID, "null argument");
    return guarded([&] { *out = new ktfr_grid{ktfr::load_grid_csv(path)}; });
}

KTFR_API ktfr_status ktfr_grid_to_csv(const ktfr_grid* grid, const char* path) {
    if (!grid || !path) return fail(KTFR_ERR_INVALID, "null argument");
    return guarded([&] { ktfr::save_grid_csv(grid->value, path); });
}

KTFR_API ktfr_status ktfr_grid_size(const ktfr_grid* grid, size_t* t_out, size_t* f_out) {
    if (!grid || !t_out || !f_out) return fail(KTFR_ERR_INVALID, "null argument");
    *t_out = grid->value.t_size();
    *f_out = grid->value.f_size();
    return KTFR_OK;
}

KTFR_API ktfr_status ktfr_grid_cell(const ktfr_grid* grid, size_t t, size_t f,
                                    double out_params[5]) {
    if (!grid || !out_params) return fail(KTFR_ERR_INVALID, "null argument");
    return guarded([&] {
        if (t >= grid->value.t_size() || f >= grid->value.f_size())
            throw ktfr::InvalidArgument("grid cell out of range");
        const ktfr::KernelParams p = grid->value.cell(t, f);
        out_params[0] = p.mu_t;
        out_params[1] = p.mu_f;
        out_params[2] = p.sigma_t;
        out_params[3] = p.sigma_f;
        out_params[4] = p.rho;
    });
}

KTFR_API void ktfr_grid_free(ktfr_grid* grid) { delete grid; }

KTFR_API ktfr_status ktfr_wvd(const ktfr_signal* x, ktfr_tfr** out) {
    if (!x || !out) return fail(KTFR_ERR_INVALID, "null argument");
    return guarded([&] { *out = new ktfr_tfr{ktfr::wvd_direct(x->value)}; });
}

KTFR_API ktfr_status ktfr_spectrogram(const ktfr_signal* x, double sigma_seconds, size_t hop,
                                      size_t n_bins, ktfr_tfr** out) {
    if (!x || !out) return fail(KTFR_ERR_INVALID, "null argument");
    return guarded([&] {
        *out = new ktfr_tfr{ktfr::spectrogram(x->value, sigma_seconds, hop ? hop : 1, n_bins)};
    });
}

KTFR_API ktfr_status ktfr_smoothed_pwvd(const ktfr_signal* x, double base_sigma_t,
                                        double base_sigma_f, size_t hop, size_t fstep,
                                        ktfr_tfr** out) {
    if (!x || !out) return fail(KTFR_ERR_INVALID, "null argument");
    return guarded([&] {
        *out = new ktfr_tfr{ktfr::smoothed_pwvd(
            x->value, ktfr::BaseSmoothing{base_sigma_t, base_sigma_f}, fast_opts(hop, fstep))};
    });
}

KTFR_API ktfr_status ktfr_k_exact(const ktfr_signal* x, const ktfr_grid* grid, ktfr_tfr** out) {
    if (!x || !grid || !out) return fail(KTFR_ERR_INVALID, "null argument");
    return guarded([&] { *out = new ktfr_tfr{ktfr::k_exact(x->value, grid->value)}; });
}

KTFR_API ktfr_status ktfr_k_fast(const ktfr_signal* x, const ktfr_grid* grid,
                                 double base_sigma_t, double base_sigma_f, size_t hop,
                                 size_t fstep, ktfr_tfr** out) {
    if (!x || !grid || !out) return fail(KTFR_ERR_INVALID, "null argument");
    return guarded([&] {
        *out = new ktfr_tfr{ktfr::k_fast(x->value, grid->value,
                                         ktfr::BaseSmoothing{base_sigma_t, base_sigma_f},
                                         fast_opts(hop, fstep))};
    });
}

KTFR_API ktfr_status ktfr_tfr_dims(const ktfr_tfr* m, size_t* rows, size_t* cols) {
    if (!m || !rows || !cols) return fail(KTFR_ERR_INVALID, "null argument");
    *rows = m->value.rows;
    *cols = m->value.cols;
    return KTFR_OK;
}

KTFR_API ktfr_status ktfr_tfr_values(const ktfr_tfr* m, double* buffer, size_t buffer_len) {
    if (!m || !buffer) return fail(KTFR_ERR_INVALID, "null argument");
    if (buffer_len < m->value.values.size())
        return fail(KTFR_ERR_INVALID, "buffer too small");
    std::memcpy(buffer, m->value.values.data(), m->value.values.size() * sizeof(double));
    return KTFR_OK;
}

KTFR_API ktfr_status ktfr_tfr_save_csv(const ktfr_tfr* m, const char* path) {
    if (!m || !path) return fail(KTFR_ERR_INVALID, "null argument");
    return guarded([&] { ktfr::save_tfr_csv(m->value, path); });
}

KTFR_API ktfr_status ktfr_tfr_load_csv(const char* path, ktfr_tfr** out) {
    if (!path || !out) return fail(KTFR_ERR_INVALID, "null argument");
    return guarded([&] { *out = new ktfr_tfr{ktfr::load_tfr_csv(path)}; });
}

KTFR_API ktfr_status ktfr_tfr_save_pgm(const ktfr_tfr* m, const char* path) {
    if (!m || !path) return fail(KTFR_ERR_INVALID, "null argument");
    return guarded([&] { ktfr::save_tfr_pgm(m->value, path); });
}

KTFR_API ktfr_status ktfr_tfr_compare(const ktfr_tfr* a, const ktfr_tfr* b, double* max_rel,
                                      double* mean_rel) {
    if (!a || !b || !max_rel || !mean_rel) return fail(KTFR_ERR_INVALID, "null argument");
    return guarded([&] {
        *max_rel = ktfr::max_rel_diff(a->value, b->value);
        *mean_rel = ktfr::mean_rel_diff(a->value, b->value);
    });
}

KTFR_API void ktfr_tfr_free(ktfr_tfr* m) { delete m; }

KTFR_API ktfr_status ktfr_interference_report(const ktfr_tfr* k, ktfr_interference* out) {
    if (!k || !out) return fail(KTFR_ERR_INVALID, "null argument");
    return guarded([&] {
        const ktfr::InterferenceReport rep = ktfr::interference_report(k->value);
        out->min_value = rep.min_value;
        out->max_value = rep.max_value;
        out->negative_fraction = rep.negative_fraction;
        out->passes_nonnegativity = rep.passes_nonnegativity ? 1 : 0;
    });
}

KTFR_API ktfr_status ktfr_logon_area(const double params5[5], ktfr_logon* out) {
    if (!params5 || !out) return fail(KTFR_ERR_INVALID, "null argument");
    return guarded([&] {
        ktfr::KernelParams p{params5[0], params5[1], params5[2], params5[3], params5[4]};
        const ktfr::LogonReport rep = ktfr::logon_area(p);
        out->sigma_t_rot = rep.sigma_t_rot;
        out->sigma_f_rot = rep.sigma_f_rot;
        out->area = rep.area;
        out->passes = rep.passes ? 1 : 0;
    });
}

KTFR_API ktfr_status ktfr_lipschitz_bound(const ktfr_grid* g1, const ktfr_grid* g2,
                                          const ktfr_signal* x, ktfr_lipschitz* out) {
    if (!g1 || !g2 || !x || !out) return fail(KTFR_ERR_INVALID, "null argument");
    return guarded([&] {
        const ktfr::LipschitzReport rep =
            ktfr::lipschitz_bound(g1->value, g2->value, x->value);
        out->lhs = rep.lhs;
        out->rhs = rep.rhs;
        out->param_distance_sq = rep.param_distance_sq;
        out->holds = rep.holds ? 1 : 0;
    });
}

KTFR_API ktfr_status ktfr_wvd_diagnostics(const ktfr_tfr* w, const ktfr_signal* x,
                                          double* frobenius_norm, double* norm_ratio,
                                          double* marginal_error) {
    if (!w || !x || !frobenius_norm || !norm_ratio || !marginal_error)
        return fail(KTFR_ERR_INVALID, "null argument");
    return guarded([&] {
        const ktfr::WvdReport rep = ktfr::wvd_diagnostics(w->value, x->value);
        *frobenius_norm = rep.frobenius_norm;
        *norm_ratio = rep.normalized_norm_ratio;
        *marginal_error = rep.time_marginal_error;
    });
}

KTFR_API ktfr_status ktfr_train_chirp(const ktfr_train_config* cfg, const char* checkpoint_csv,
                                      const char* curve_csv, ktfr_train_stats* out) {
    if (!cfg || !out) return fail(KTFR_ERR_INVALID, "null argument");
    return guarded([&] {
        ktfr::HarnessConfig hc;
        hc.n_train = cfg->n_train ? cfg->n_train : 200;
        hc.n_test = cfg->n_test ? cfg->n_test : 100;
        hc.signal_length = cfg->signal_length ? cfg->signal_length : 512;
        hc.sample_rate_hz = cfg->sample_rate_hz > 0 ? cfg->sample_rate_hz : 16000.0;
        hc.n_kernels = cfg->n_kernels ? cfg->n_kernels : 16;
        hc.train.learning_rate = cfg->learning_rate;
        hc.train.epochs = cfg->epochs;
        hc.train.batch_size = cfg->batch_size;
        hc.train.seed = cfg->seed;
        hc.train.gradient_mode = cfg->numeric_gradients ? ktfr::GradMode::NumericCentral
                                                        : ktfr::GradMode::AnalyticHeadOnly;
        const ktfr::TrainResult res = ktfr::run_chirp_harness(hc);
        if (checkpoint_csv) ktfr::save_checkpoint_csv(checkpoint_csv, hc.train, res.params, res.head);
        if (curve_csv) ktfr::save_curve_csv(curve_csv, res);
        out->final_test_accuracy = res.final_test_accuracy;
        out->initial_test_accuracy = res.initial_test_accuracy;
        out->first_epoch_loss = res.train_loss.front();
        out->last_epoch_loss = res.train_loss.back();
    });
}

}  // extern "C"
