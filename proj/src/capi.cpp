#include "lmgphase.h"

#include "biaxial.hpp"
#include "exact_diag.hpp"
#include "params.hpp"
#include "series.hpp"
#include "sweep.hpp"
#include "uniaxial.hpp"

#include <cstring>
#include <new>
#include <string>

namespace {

thread_local std::string g_last_error;

lmg_status status_of(const lmg::Error& e) {
    using Code = lmg::Error::Code;
    switch (e.code()) {
        case Code::domain: return LMG_ERR_DOMAIN;
        case Code::no_root: return LMG_ERR_NO_ROOT;
        case Code::size: return LMG_ERR_SIZE;
        case Code::convergence: return LMG_ERR_CONVERGENCE;
        case Code::config: return LMG_ERR_CONFIG;
        case Code::insufficient_points: return LMG_ERR_INSUFFICIENT_POINTS;
        case Code::unstable: return LMG_ERR_UNSTABLE;
    }
    return LMG_ERR_INTERNAL;
}

/// Runs fn() inside the exception firewall; fn returns a status itself so
/// argument checks can short-circuit.
template <typename Fn>
lmg_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const lmg::Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return LMG_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return LMG_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return LMG_ERR_INTERNAL;
    }
}

lmg_status invalid_argument(const char* what) {
    g_last_error = what;
    return LMG_ERR_CONFIG;
}

lmg::AxisSpec to_axis(const lmg_axis& axis, const char* name) {
    lmg::AxisSpec spec;
    spec.name = name;
    spec.min = axis.min;
    spec.max = axis.max;
    spec.steps = axis.steps;
    return spec;
}

lmg::EdOptions to_ed_options(const lmg_ed_options* options) {
    lmg::EdOptions opts;
    if (options != nullptr) {
        opts.dim_limit = options->dim_limit;
        opts.splitting_threshold_rel = options->splitting_threshold_rel;
        opts.overlap_steps = options->overlap_steps;
    }
    return opts;
}

template <typename Params>
lmg_status ed_eval(const Params& params, const lmg::RotationFrame& frame,
                   const lmg_ed_options* options, lmg_ed_result* out) {
    const lmg::EdOptions opts = to_ed_options(options);
    const lmg::SpinSector sector = lmg::spin_operators(params.n_particles(), opts.dim_limit);
    const lmg::GroundDoublet doublet =
        lmg::ground_doublet(lmg::build_hamiltonian(params, sector));
    const Eigen::VectorXd state =
        lmg::broken_symmetry_state(doublet, frame, sector, opts.splitting_threshold_rel);
    const lmg::BerryPhaseResult berry = lmg::berry_phase_exact(state, frame, sector);
    out->e0 = doublet.e0;
    out->e1 = doublet.e1;
    out->gap = doublet.e1 - doublet.e0;
    out->parity0 = doublet.parity0;
    out->parity1 = doublet.parity1;
    out->s_tilde_z = berry.s_tilde_z;
    out->n_mean = berry.n_mean;
    out->phase_exact = berry.phase;
    out->phase_paper = berry.phase_paper;
    out->phase_overlap = lmg::berry_phase_overlap(state, frame, sector, opts.overlap_steps);
    return LMG_OK;
}

template <typename Params>
lmg_status full_check(const Params& params, double* sector_e0, double* full_e0,
                      int* max_spin_confirmed) {
    const lmg::FullHilbertReport report = lmg::full_hilbert_check(params);
    if (sector_e0 != nullptr) *sector_e0 = report.sector_e0;
    if (full_e0 != nullptr) *full_e0 = report.full_e0;
    if (max_spin_confirmed != nullptr) *max_spin_confirmed = report.max_spin_confirmed ? 1 : 0;
    return LMG_OK;
}

} // namespace

struct lmg_biaxial_params {
    lmg::BiaxialParams params;
};

struct lmg_uniaxial_params {
    lmg::UniaxialParams params;
};

struct lmg_table {
    lmg::SweepTable table;
};

extern "C" {

const char* lmg_version(void) { return "0.1.0"; }

const char* lmg_status_name(lmg_status status) {
    switch (status) {
        case LMG_OK: return "ok";
        case LMG_ERR_DOMAIN: return "domain_error";
        case LMG_ERR_NO_ROOT: return "no_root";
        case LMG_ERR_SIZE: return "size_error";
        case LMG_ERR_CONVERGENCE: return "convergence_error";
        case LMG_ERR_CONFIG: return "config_error";
        case LMG_ERR_INSUFFICIENT_POINTS: return "insufficient_points";
        case LMG_ERR_UNSTABLE: return "unstable";
        case LMG_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* lmg_last_error(void) { return g_last_error.c_str(); }

lmg_status lmg_biaxial_params_create(double gamma, double h, long n_particles,
                                     lmg_biaxial_params** out) {
    return guarded([&]() {
        if (out == nullptr) return invalid_argument("out must not be NULL");
        *out = new lmg_biaxial_params{lmg::validate_biaxial(gamma, h, n_particles)};
        return LMG_OK;
    });
}

void lmg_biaxial_params_destroy(lmg_biaxial_params* params) { delete params; }

lmg_status lmg_uniaxial_params_create(double h_x, double h_z, long n_particles,
                                      lmg_uniaxial_params** out) {
    return guarded([&]() {
        if (out == nullptr) return invalid_argument("out must not be NULL");
        *out = new lmg_uniaxial_params{lmg::validate_uniaxial(h_x, h_z, n_particles)};
        return LMG_OK;
    });
}

void lmg_uniaxial_params_destroy(lmg_uniaxial_params* params) { delete params; }

lmg_status lmg_biaxial_eval(const lmg_biaxial_params* params, long truncation_m,
                            lmg_biaxial_result* out) {
    return guarded([&]() {
        if (params == nullptr || out == nullptr) {
            return invalid_argument("params/out must not be NULL");
        }
        const lmg::RotationFrame frame = lmg::rotation_angle(params->params.h());
        const lmg::BosonCoefficients coef = lmg::hp_coefficients(params->params, frame);
        const lmg::SqueezeSolution sol = lmg::epsilon_biaxial(params->params);
        const long m =
            truncation_m >= 0 ? truncation_m : params->params.default_truncation();
        const lmg::PhaseResult phase = lmg::geometric_phase_series(sol.t_sq, m);
        out->theta = frame.theta;
        out->e = coef.e;
        out->delta = coef.delta;
        out->gamma_coef = coef.gamma_coef;
        out->epsilon = sol.epsilon;
        out->t_sq = sol.t_sq;
        out->sigma = sol.sigma;
        out->delta_d = sol.delta_d;
        out->phi_g = phase.phi_g;
        out->n_mean = phase.n_mean;
        out->truncation_m = phase.truncation_m;
        return LMG_OK;
    });
}

lmg_status lmg_uniaxial_eval(const lmg_uniaxial_params* params, long truncation_m,
                             lmg_uniaxial_result* out) {
    return guarded([&]() {
        if (params == nullptr || out == nullptr) {
            return invalid_argument("params/out must not be NULL");
        }
        const lmg::DisplacementSolution disp = lmg::displacement_solution(params->params);
        const lmg::SqueezeSolution sol = lmg::epsilon_uniaxial(params->params);
        const long m =
            truncation_m >= 0 ? truncation_m : params->params.default_truncation();
        const lmg::PhaseResult phase = lmg::geometric_phase_series(sol.t_sq, m);
        out->lambda0 = disp.lambda0;
        out->y = disp.y;
        out->e0 = disp.e0;
        out->omega_residual = disp.omega_residual;
        out->delta = disp.delta;
        out->gamma_coef = disp.gamma_coef;
        out->epsilon = sol.epsilon;
        out->t_sq = sol.t_sq;
        out->sigma = sol.sigma;
        out->delta_d = sol.delta_d;
        out->phi_g = phase.phi_g;
        out->n_mean = phase.n_mean;
        out->truncation_m = phase.truncation_m;
        return LMG_OK;
    });
}

lmg_status lmg_tanh_sq_from_epsilon(double epsilon, double* t_sq) {
    return guarded([&]() {
        if (t_sq == nullptr) return invalid_argument("t_sq must not be NULL");
        *t_sq = lmg::tanh_sq_from_epsilon(epsilon);
        return LMG_OK;
    });
}

lmg_status lmg_weight_table(double t_sq, long m, double* weights) {
    return guarded([&]() {
        if (weights == nullptr) return invalid_argument("weights must not be NULL");
        const lmg::WeightTable table = lmg::weight_table(t_sq, m);
        std::memcpy(weights, table.weights.data(), table.weights.size() * sizeof(double));
        return LMG_OK;
    });
}

lmg_status lmg_phase_series(double t_sq, long m, double* phi_g, double* n_mean) {
    return guarded([&]() {
        if (phi_g == nullptr || n_mean == nullptr) {
            return invalid_argument("phi_g/n_mean must not be NULL");
        }
        const lmg::PhaseResult result = lmg::geometric_phase_series(t_sq, m);
        *phi_g = result.phi_g;
        *n_mean = result.n_mean;
        return LMG_OK;
    });
}

lmg_status lmg_untruncated_mean(double t_sq, double* n_mean) {
    return guarded([&]() {
        if (n_mean == nullptr) return invalid_argument("n_mean must not be NULL");
        *n_mean = lmg::untruncated_mean(t_sq);
        return LMG_OK;
    });
}

void lmg_ed_options_init(lmg_ed_options* options) {
    if (options == nullptr) return;
    options->dim_limit = lmg::kDefaultDimensionLimit;
    options->splitting_threshold_rel = 1e-6;
    options->overlap_steps = 10000;
}

lmg_status lmg_ed_eval_biaxial(const lmg_biaxial_params* params, const lmg_ed_options* options,
                               lmg_ed_result* out) {
    return guarded([&]() {
        if (params == nullptr || out == nullptr) {
            return invalid_argument("params/out must not be NULL");
        }
        return ed_eval(params->params, lmg::rotation_angle(params->params.h()), options, out);
    });
}

lmg_status lmg_ed_eval_uniaxial(const lmg_uniaxial_params* params, const lmg_ed_options* options,
                                lmg_ed_result* out) {
    return guarded([&]() {
        if (params == nullptr || out == nullptr) {
            return invalid_argument("params/out must not be NULL");
        }
        return ed_eval(params->params, lmg::RotationFrame{}, options, out);
    });
}

lmg_status lmg_full_hilbert_biaxial(const lmg_biaxial_params* params, double* sector_e0,
                                    double* full_e0, int* max_spin_confirmed) {
    return guarded([&]() {
        if (params == nullptr) return invalid_argument("params must not be NULL");
        return full_check(params->params, sector_e0, full_e0, max_spin_confirmed);
    });
}

lmg_status lmg_full_hilbert_uniaxial(const lmg_uniaxial_params* params, double* sector_e0,
                                     double* full_e0, int* max_spin_confirmed) {
    return guarded([&]() {
        if (params == nullptr) return invalid_argument("params must not be NULL");
        return full_check(params->params, sector_e0, full_e0, max_spin_confirmed);
    });
}

lmg_status lmg_run_biaxial_sweep(const lmg_axis* gamma_axis, const lmg_axis* h_axis,
                                 long n_particles, long truncation_m, int with_ed,
                                 const lmg_ed_options* ed_options, int threads,
                                 lmg_table** out) {
    return guarded([&]() {
        if (gamma_axis == nullptr || h_axis == nullptr || out == nullptr) {
            return invalid_argument("axes/out must not be NULL");
        }
        auto table = lmg::sweep_biaxial(to_axis(*gamma_axis, "gamma"), to_axis(*h_axis, "h"),
                                        n_particles, truncation_m, with_ed != 0,
                                        to_ed_options(ed_options), threads);
        *out = new lmg_table{std::move(table)};
        return LMG_OK;
    });
}

lmg_status lmg_run_uniaxial_sweep(const lmg_axis* hx_axis, const lmg_axis* hz_axis,
                                  long n_particles, long truncation_m, int threads,
                                  lmg_table** out) {
    return guarded([&]() {
        if (hx_axis == nullptr || hz_axis == nullptr || out == nullptr) {
            return invalid_argument("axes/out must not be NULL");
        }
        auto table = lmg::sweep_uniaxial(to_axis(*hx_axis, "h_x"), to_axis(*hz_axis, "h_z"),
                                         n_particles, truncation_m, threads);
        *out = new lmg_table{std::move(table)};
        return LMG_OK;
    });
}

lmg_status lmg_run_oracle_sweep(lmg_model model, const lmg_axis* axis1, const lmg_axis* axis2,
                                long n_particles, long truncation_m,
                                const lmg_ed_options* ed_options, int full_check, int threads,
                                lmg_table** out) {
    return guarded([&]() {
        if (axis1 == nullptr || axis2 == nullptr || out == nullptr) {
            return invalid_argument("axes/out must not be NULL");
        }
        const bool biaxial = model == LMG_MODEL_BIAXIAL;
        auto table = lmg::sweep_oracle(
            biaxial ? lmg::ModelKind::biaxial : lmg::ModelKind::uniaxial,
            to_axis(*axis1, biaxial ? "gamma" : "h_x"),
            to_axis(*axis2, biaxial ? "h" : "h_z"), n_particles, truncation_m,
            to_ed_options(ed_options), full_check != 0, threads);
        *out = new lmg_table{std::move(table)};
        return LMG_OK;
    });
}

void lmg_table_destroy(lmg_table* table) { delete table; }

long lmg_table_rows(const lmg_table* table) {
    return table == nullptr ? 0 : table->table.rows();
}

long lmg_table_cols(const lmg_table* table) {
    return table == nullptr ? 0 : static_cast<long>(table->table.columns.size());
}

const char* lmg_table_column_name(const lmg_table* table, long col) {
    if (table == nullptr || col < 0 || col >= lmg_table_cols(table)) return nullptr;
    return table->table.columns[static_cast<size_t>(col)].c_str();
}

lmg_status lmg_table_get(const lmg_table* table, long row, long col, double* value) {
    return guarded([&]() {
        if (table == nullptr || value == nullptr) {
            return invalid_argument("table/value must not be NULL");
        }
        if (row < 0 || row >= table->table.rows() || col < 0 || col >= lmg_table_cols(table)) {
            return invalid_argument("table index out of range");
        }
        *value = table->table.cells[static_cast<size_t>(row)][static_cast<size_t>(col)];
        return LMG_OK;
    });
}

const char* lmg_table_row_error(const lmg_table* table, long row) {
    if (table == nullptr || row < 0 || row >= table->table.rows()) return nullptr;
    return table->table.row_errors[static_cast<size_t>(row)].c_str();
}

lmg_status lmg_scaling_fit(const double* n_values, const double* phi_values, long count,
                           lmg_fit* linear, lmg_fit* loglog) {
    return guarded([&]() {
        if (n_values == nullptr || phi_values == nullptr) {
            return invalid_argument("n_values/phi_values must not be NULL");
        }
        const auto analysis =
            lmg::scaling_fit(std::span<const double>(n_values, static_cast<size_t>(count)),
                             std::span<const double>(phi_values, static_cast<size_t>(count)));
        if (linear != nullptr) {
            linear->slope = analysis.linear.slope;
            linear->intercept = analysis.linear.intercept;
            linear->r_sq = analysis.linear.r_sq;
        }
        if (loglog != nullptr) {
            loglog->slope = analysis.loglog.slope;
            loglog->intercept = analysis.loglog.intercept;
            loglog->r_sq = analysis.loglog.r_sq;
        }
        return LMG_OK;
    });
}

} // extern "C"
