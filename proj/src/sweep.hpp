#pragma once

#include "exact_diag.hpp"
#include "params.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace lmg {

/// One parameter grid: steps points from min to max inclusive (steps == 1
/// pins the single value min, which must equal max).
struct AxisSpec {
    std::string name;
    double min = 0.0;
    double max = 0.0;
    long steps = 1;
};

std::vector<double> axis_grid(const AxisSpec& axis);

/// Gridded evaluation results. One row per grid point in row-major axis
/// order; failed points keep their row with NaN cells and an error marker
/// instead of being dropped.
struct SweepTable {
    std::vector<AxisSpec> axes;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> cells; // rows x columns
    std::vector<std::string> row_errors;    // empty string = ok

    long rows() const { return static_cast<long>(cells.size()); }
    long column_index(const std::string& name) const;
    double value(long row, const std::string& column) const;
};

using RowEvaluator = std::function<std::vector<double>(std::span<const double> axis_values)>;

/// Generic grid driver: evaluates `evaluator` at every point of the one- or
/// two-axis grid, in parallel, with deterministic row order. Evaluator
/// exceptions become per-row error markers.
SweepTable sweep(const std::vector<AxisSpec>& axes, const std::vector<std::string>& columns,
                 const RowEvaluator& evaluator, int threads = 1);

/// Options controlling the exact-diagonalization columns.
struct EdOptions {
    long dim_limit = kDefaultDimensionLimit;
    double splitting_threshold_rel = 1e-6;
    long overlap_steps = 10000;
};

/// Concrete sweeps backing the CLI subcommands.
/// biaxial columns: gamma,h,N,theta,epsilon,t_sq,phi_g,n_mean[,n_mean_ed,gap_ed]
SweepTable sweep_biaxial(const AxisSpec& gamma_axis, const AxisSpec& h_axis, long n_particles,
                         long truncation_override, bool with_ed, const EdOptions& ed_options,
                         int threads);

/// uniaxial columns: h_x,h_z,N,lambda0,y,epsilon,t_sq,phi_g,n_mean,e0
SweepTable sweep_uniaxial(const AxisSpec& hx_axis, const AxisSpec& hz_axis, long n_particles,
                          long truncation_override, int threads);

enum class ModelKind { biaxial, uniaxial };

/// oracle columns: p1,p2,N,n_mean_hp,n_mean_ed,abs_diff,gap,phase_overlap,
/// phase_exact[,sector_e0,full_e0,sector_full_agree] where (p1,p2) are
/// (gamma,h) or (h_x,h_z).
SweepTable sweep_oracle(ModelKind model, const AxisSpec& axis1, const AxisSpec& axis2,
                        long n_particles, long truncation_override, const EdOptions& ed_options,
                        bool full_check, int threads);

/// Second-order derivative of `column` along the (single) axis: central
/// differences in the interior, second-order one-sided stencils at the
/// edges, exact on quadratics.
SweepTable central_derivative(const SweepTable& table, const std::string& column);

/// Axis locations where the one-sided slopes jump by more than
/// jump_threshold times the grid's median slope change (a curvature/noise
/// scale). Adjacent detections merge into the strongest cell.
std::vector<double> cusp_detect(const SweepTable& table, const std::string& column,
                                double jump_threshold = 10.0);

struct ScalingFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_sq = 0.0;
};

/// Least-squares line through (x, y); InsufficientPointsError below 3 points.
ScalingFit linear_fit(std::span<const double> x, std::span<const double> y);

struct ScalingAnalysis {
    ScalingFit linear; // phi_g vs N
    ScalingFit loglog; // log|phi_g| vs log N
};

/// Linear fit of phi_g against N plus the log-log fit of |phi_g| against N.
/// n_values must be strictly increasing.
ScalingAnalysis scaling_fit(std::span<const double> n_values,
                            std::span<const double> phi_values);

} // namespace lmg
