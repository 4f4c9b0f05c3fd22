#include "sweep.hpp"

#include "biaxial.hpp"
#include "parallel.hpp"
#include "uniaxial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace lmg {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string error_token(const std::exception& e) {
    std::string token = e.what();
    for (auto& c : token) {
        if (c == ',' || c == '\n') c = ';';
    }
    return token;
}

} // namespace

std::vector<double> axis_grid(const AxisSpec& axis) {
    if (axis.steps < 1) {
        throw ConfigError("axis '" + axis.name + "': steps must be >= 1");
    }
    if (axis.steps == 1) {
        if (axis.min != axis.max) {
            throw ConfigError("axis '" + axis.name + "': single-point axis needs min == max");
        }
        return {axis.min};
    }
    if (!(axis.min < axis.max)) {
        throw ConfigError("axis '" + axis.name + "': min must be < max");
    }
    std::vector<double> grid(static_cast<size_t>(axis.steps));
    const double span = axis.max - axis.min;
    for (long i = 0; i < axis.steps; ++i) {
        grid[static_cast<size_t>(i)] =
            axis.min + span * static_cast<double>(i) / static_cast<double>(axis.steps - 1);
    }
    grid.back() = axis.max;
    return grid;
}

long SweepTable::column_index(const std::string& name) const {
    for (size_t j = 0; j < columns.size(); ++j) {
        if (columns[j] == name) return static_cast<long>(j);
    }
    return -1;
}

double SweepTable::value(long row, const std::string& column) const {
    const long j = column_index(column);
    if (j < 0) throw ConfigError("no column named '" + column + "'");
    return cells.at(static_cast<size_t>(row)).at(static_cast<size_t>(j));
}

SweepTable sweep(const std::vector<AxisSpec>& axes, const std::vector<std::string>& columns,
                 const RowEvaluator& evaluator, int threads) {
    if (axes.empty() || axes.size() > 2) {
        throw ConfigError("sweep needs one or two axes");
    }
    std::vector<std::vector<double>> grids;
    grids.reserve(axes.size());
    long total = 1;
    for (const auto& axis : axes) {
        grids.push_back(axis_grid(axis));
        total *= static_cast<long>(grids.back().size());
    }

    SweepTable table;
    table.axes = axes;
    table.columns = columns;
    table.cells.assign(static_cast<size_t>(total),
                       std::vector<double>(columns.size(), kNaN));
    table.row_errors.assign(static_cast<size_t>(total), std::string());

    const long inner = axes.size() == 2 ? static_cast<long>(grids[1].size()) : 1;
    parallel_for(total, threads, [&](long row) {
        double point[2];
        point[0] = grids[0][static_cast<size_t>(axes.size() == 2 ? row / inner : row)];
        if (axes.size() == 2) point[1] = grids[1][static_cast<size_t>(row % inner)];
        try {
            auto values = evaluator(std::span<const double>(point, axes.size()));
            if (values.size() != columns.size()) {
                throw ConfigError("evaluator returned " + std::to_string(values.size()) +
                                  " values for " + std::to_string(columns.size()) + " columns");
            }
            table.cells[static_cast<size_t>(row)] = std::move(values);
        } catch (const std::exception& e) {
            table.row_errors[static_cast<size_t>(row)] = error_token(e);
        }
    });
    return table;
}

SweepTable sweep_biaxial(const AxisSpec& gamma_axis, const AxisSpec& h_axis, long n_particles,
                         long truncation_override, bool with_ed, const EdOptions& ed_options,
                         int threads) {
    std::vector<std::string> columns = {"gamma", "h",     "N",      "theta",
                                        "epsilon", "t_sq", "phi_g", "n_mean"};
    if (with_ed) {
        columns.push_back("n_mean_ed");
        columns.push_back("gap_ed");
    }
    const double n = static_cast<double>(n_particles);
    auto evaluator = [=](std::span<const double> point) {
        const BiaxialParams params = validate_biaxial(point[0], point[1], n_particles);
        const RotationFrame frame = rotation_angle(params.h());
        const SqueezeSolution sol = epsilon_biaxial(params);
        const long m = truncation_override >= 0 ? truncation_override
                                                : params.default_truncation();
        const PhaseResult phase = geometric_phase_series(sol.t_sq, m);
        std::vector<double> row = {params.gamma(), params.h(), n,          frame.theta,
                                   sol.epsilon,    sol.t_sq,   phase.phi_g, phase.n_mean};
        if (with_ed) {
            const SpinSector sector = spin_operators(n_particles, ed_options.dim_limit);
            const GroundDoublet doublet = ground_doublet(build_hamiltonian(params, sector));
            const Eigen::VectorXd state = broken_symmetry_state(
                doublet, frame, sector, ed_options.splitting_threshold_rel);
            const BerryPhaseResult berry = berry_phase_exact(state, frame, sector);
            row.push_back(berry.n_mean);
            row.push_back(doublet.e1 - doublet.e0);
        }
        return row;
    };
    return sweep({gamma_axis, h_axis}, columns, evaluator, threads);
}

SweepTable sweep_uniaxial(const AxisSpec& hx_axis, const AxisSpec& hz_axis, long n_particles,
                          long truncation_override, int threads) {
    const std::vector<std::string> columns = {"h_x",  "h_z",     "N",    "lambda0", "y",
                                              "epsilon", "t_sq", "phi_g", "n_mean", "e0"};
    const double n = static_cast<double>(n_particles);
    auto evaluator = [=](std::span<const double> point) {
        const UniaxialParams params = validate_uniaxial(point[0], point[1], n_particles);
        const DisplacementSolution disp = displacement_solution(params);
        const SqueezeSolution sol = epsilon_uniaxial(params);
        const long m = truncation_override >= 0 ? truncation_override
                                                : params.default_truncation();
        const PhaseResult phase = geometric_phase_series(sol.t_sq, m);
        return std::vector<double>{params.h_x(), params.h_z(), n,           disp.lambda0,
                                   disp.y,       sol.epsilon,  sol.t_sq,    phase.phi_g,
                                   phase.n_mean, disp.e0};
    };
    return sweep({hx_axis, hz_axis}, columns, evaluator, threads);
}

SweepTable sweep_oracle(ModelKind model, const AxisSpec& axis1, const AxisSpec& axis2,
                        long n_particles, long truncation_override, const EdOptions& ed_options,
                        bool full_check, int threads) {
    std::vector<std::string> columns =
        model == ModelKind::biaxial
            ? std::vector<std::string>{"gamma", "h"}
            : std::vector<std::string>{"h_x", "h_z"};
    for (const char* name : {"N", "n_mean_hp", "n_mean_ed", "abs_diff", "gap",
                             "phase_overlap", "phase_exact"}) {
        columns.emplace_back(name);
    }
    if (full_check) {
        columns.emplace_back("sector_e0");
        columns.emplace_back("full_e0");
        columns.emplace_back("sector_full_agree");
    }

    const double n = static_cast<double>(n_particles);
    auto evaluator = [=](std::span<const double> point) {
        RotationFrame frame; // uniaxial loop is about the lab z axis
        double n_mean_hp = 0.0;
        const SpinSector sector = spin_operators(n_particles, ed_options.dim_limit);
        Eigen::MatrixXd hamiltonian;
        if (model == ModelKind::biaxial) {
            const BiaxialParams params = validate_biaxial(point[0], point[1], n_particles);
            frame = rotation_angle(params.h());
            n_mean_hp = biaxial_phase(params, truncation_override).n_mean;
            hamiltonian = build_hamiltonian(params, sector);
        } else {
            const UniaxialParams params = validate_uniaxial(point[0], point[1], n_particles);
            n_mean_hp = uniaxial_phase(params, truncation_override).n_mean;
            hamiltonian = build_hamiltonian(params, sector);
        }
        const GroundDoublet doublet = ground_doublet(hamiltonian);
        const Eigen::VectorXd state =
            broken_symmetry_state(doublet, frame, sector, ed_options.splitting_threshold_rel);
        const BerryPhaseResult berry = berry_phase_exact(state, frame, sector);
        const double overlap =
            berry_phase_overlap(state, frame, sector, ed_options.overlap_steps);

        std::vector<double> row = {point[0],
                                   point[1],
                                   n,
                                   n_mean_hp,
                                   berry.n_mean,
                                   std::abs(n_mean_hp - berry.n_mean),
                                   doublet.e1 - doublet.e0,
                                   overlap,
                                   berry.phase};
        if (full_check) {
            FullHilbertReport report =
                model == ModelKind::biaxial
                    ? full_hilbert_check(validate_biaxial(point[0], point[1], n_particles))
                    : full_hilbert_check(validate_uniaxial(point[0], point[1], n_particles));
            row.push_back(report.sector_e0);
            row.push_back(report.full_e0);
            row.push_back(report.max_spin_confirmed ? 1.0 : 0.0);
        }
        return row;
    };
    return sweep({axis1, axis2}, columns, evaluator, threads);
}

namespace {

/// The single swept axis of a table (degenerate single-point axes do not
/// count). Errors when zero or two axes are swept.
const AxisSpec& swept_axis(const SweepTable& table, const char* who) {
    const AxisSpec* found = nullptr;
    for (const auto& axis : table.axes) {
        if (axis.steps > 1) {
            if (found != nullptr) {
                throw ConfigError(std::string(who) + " requires a single swept axis");
            }
            found = &axis;
        }
    }
    if (found == nullptr) {
        throw InsufficientPointsError(std::string(who) + " needs a swept axis");
    }
    return *found;
}

} // namespace

SweepTable central_derivative(const SweepTable& table, const std::string& column) {
    const AxisSpec& axis = swept_axis(table, "central_derivative");
    const long rows = table.rows();
    if (rows < 3) {
        throw InsufficientPointsError("derivative needs >= 3 points, got " +
                                      std::to_string(rows));
    }
    const long col = table.column_index(column);
    if (col < 0) throw ConfigError("no column named '" + column + "'");

    const auto grid = axis_grid(axis);
    const double dx = grid[1] - grid[0];

    SweepTable out;
    out.axes = {axis};
    out.columns = {axis.name, "d_" + column};
    out.cells.assign(static_cast<size_t>(rows), std::vector<double>(2, kNaN));
    out.row_errors.assign(static_cast<size_t>(rows), std::string());

    const auto f = [&](long i) { return table.cells[static_cast<size_t>(i)][static_cast<size_t>(col)]; };
    for (long i = 0; i < rows; ++i) {
        double d;
        if (i == 0) {
            d = (-3.0 * f(0) + 4.0 * f(1) - f(2)) / (2.0 * dx);
        } else if (i == rows - 1) {
            d = (3.0 * f(rows - 1) - 4.0 * f(rows - 2) + f(rows - 3)) / (2.0 * dx);
        } else {
            d = (f(i + 1) - f(i - 1)) / (2.0 * dx);
        }
        out.cells[static_cast<size_t>(i)][0] = grid[static_cast<size_t>(i)];
        out.cells[static_cast<size_t>(i)][1] = d;
        if (!std::isfinite(d)) out.row_errors[static_cast<size_t>(i)] = "derivative_nan";
    }
    return out;
}

std::vector<double> cusp_detect(const SweepTable& table, const std::string& column,
                                double jump_threshold) {
    const AxisSpec& axis = swept_axis(table, "cusp_detect");
    const long rows = table.rows();
    if (rows < 3) return {};
    const long col = table.column_index(column);
    if (col < 0) throw ConfigError("no column named '" + column + "'");

    const auto grid = axis_grid(axis);
    const double dx = grid[1] - grid[0];
    const auto f = [&](long i) { return table.cells[static_cast<size_t>(i)][static_cast<size_t>(col)]; };

    double max_abs = 0.0;
    for (long i = 0; i < rows; ++i) max_abs = std::max(max_abs, std::abs(f(i)));

    // Slope jumps |s_right - s_left| at every interior point.
    std::vector<double> jumps(static_cast<size_t>(rows - 2));
    for (long i = 1; i < rows - 1; ++i) {
        const double s_left = (f(i) - f(i - 1)) / dx;
        const double s_right = (f(i + 1) - f(i)) / dx;
        jumps[static_cast<size_t>(i - 1)] = std::abs(s_right - s_left);
    }

    // Reference scale: the median jump (smooth-curvature level), floored at
    // the rounding noise of the column values.
    std::vector<double> sorted = jumps;
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted[sorted.size() / 2];
    const double floor = 1e-12 * (1.0 + max_abs) / dx;
    const double scale = std::max(median, floor);

    std::vector<double> locations;
    long i = 1;
    while (i < rows - 1) {
        if (jumps[static_cast<size_t>(i - 1)] > jump_threshold * scale) {
            // Cluster adjacent detections and keep the strongest cell.
            long best = i;
            long j = i;
            while (j < rows - 1 && jumps[static_cast<size_t>(j - 1)] > jump_threshold * scale) {
                if (jumps[static_cast<size_t>(j - 1)] > jumps[static_cast<size_t>(best - 1)]) {
                    best = j;
                }
                ++j;
            }
            locations.push_back(grid[static_cast<size_t>(best)]);
            i = j;
        } else {
            ++i;
        }
    }
    return locations;
}

ScalingFit linear_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 3) {
        throw InsufficientPointsError("linear fit needs >= 3 matched samples");
    }
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) {
        throw InsufficientPointsError("linear fit needs distinct x values");
    }

    ScalingFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (syy == 0.0) {
        fit.r_sq = 1.0;
    } else {
        double ss_res = 0.0;
        for (size_t i = 0; i < x.size(); ++i) {
            const double r = y[i] - (fit.intercept + fit.slope * x[i]);
            ss_res += r * r;
        }
        fit.r_sq = 1.0 - ss_res / syy;
    }
    return fit;
}

ScalingAnalysis scaling_fit(std::span<const double> n_values,
                            std::span<const double> phi_values) {
    if (n_values.size() != phi_values.size() || n_values.size() < 3) {
        throw InsufficientPointsError("scaling fit needs >= 3 samples");
    }
    for (size_t i = 1; i < n_values.size(); ++i) {
        if (!(n_values[i] > n_values[i - 1])) {
            throw ConfigError("scaling fit needs strictly increasing N values");
        }
    }

    ScalingAnalysis analysis;
    analysis.linear = linear_fit(n_values, phi_values);

    std::vector<double> log_n(n_values.size());
    std::vector<double> log_phi(n_values.size());
    for (size_t i = 0; i < n_values.size(); ++i) {
        const double mag = std::abs(phi_values[i]);
        if (!(n_values[i] > 0.0) || !(mag > 0.0)) {
            throw DomainError("phi_g", "log-log fit needs N > 0 and phi_g != 0");
        }
        log_n[i] = std::log(n_values[i]);
        log_phi[i] = std::log(mag);
    }
    analysis.loglog = linear_fit(log_n, log_phi);
    return analysis;
}

} // namespace lmg
