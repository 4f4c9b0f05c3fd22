#include "uniaxial.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace lmg {

namespace {

constexpr long kScanCells = 10000;
constexpr double kBisectTol = 1e-14;
constexpr double kResidualTol = 1e-9;
constexpr double kRootDedupTol = 1e-10;

/// Stationarity condition of the order-N energy density (the linear boson
/// coefficient divided by sqrt(N)):
///   lambda h_z - h_x (1 - 2 lambda^2) / (2 sqrt(1-lambda^2))
///   - lambda (1 - 2 lambda^2)
double omega_residual(double lambda, double h_x, double h_z) {
    const double u = 1.0 - 2.0 * lambda * lambda;
    return lambda * h_z - 0.5 * h_x * u / std::sqrt(1.0 - lambda * lambda) - lambda * u;
}

/// Order-N energy density e_N(lambda)/N.
double energy_density(double lambda, double h_x, double h_z) {
    const double l2 = lambda * lambda;
    return -(0.5 * h_z * (1.0 - 2.0 * l2) + l2 * (1.0 - l2) +
             h_x * lambda * std::sqrt(1.0 - l2));
}

double gamma_at(double lambda, double h_x) {
    const double l2 = lambda * lambda;
    const double s3 = std::pow(1.0 - l2, 1.5);
    return -0.25 * (1.0 - 5.0 * l2) + h_x * lambda * (2.0 - l2) / (8.0 * s3);
}

double delta_at(double lambda, double h_x, double h_z) {
    const double l2 = lambda * lambda;
    const double s3 = std::pow(1.0 - l2, 1.5);
    return h_z - 0.5 * (1.0 - 7.0 * l2) + h_x * lambda * (4.0 - 3.0 * l2) / (4.0 * s3);
}

double e0_at(double lambda, double h_x, double h_z, long n_particles) {
    const double l2 = lambda * lambda;
    const double s3 = std::pow(1.0 - l2, 1.5);
    return static_cast<double>(n_particles) * energy_density(lambda, h_x, h_z) -
           (0.25 - l2) - h_x * lambda * (2.0 - l2) / (8.0 * s3);
}

double lambda_from_y(double y) { return std::sqrt(std::max(0.0, 0.5 * (1.0 - y))); }

/// Bisection refinement of a sign-changing bracket down to kBisectTol.
double bisect(const std::function<double(double)>& f, double lo, double hi, double flo) {
    for (int iter = 0; iter < 200 && hi - lo > kBisectTol; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((flo < 0.0) != (fmid < 0.0)) {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

void scan_roots(const std::function<double(double)>& f, std::vector<double>& out) {
    double prev_y = -1.0;
    double prev_f = f(prev_y);
    for (long cell = 1; cell <= kScanCells; ++cell) {
        const double y = -1.0 + 2.0 * static_cast<double>(cell) / kScanCells;
        const double fy = f(y);
        if (prev_f == 0.0) {
            out.push_back(prev_y);
        } else if (fy != 0.0 && (prev_f < 0.0) != (fy < 0.0)) {
            out.push_back(bisect(f, prev_y, y, prev_f));
        }
        prev_y = y;
        prev_f = fy;
    }
    if (prev_f == 0.0) out.push_back(prev_y);
}

} // namespace

std::vector<double> lambda_roots(double h_x, double h_z) {
    if (!(h_z > 0.0)) {
        throw DomainError("h_z", "lambda_roots requires h_z > 0, got " + std::to_string(h_z));
    }

    std::vector<double> roots;
    if (h_x == 0.0) {
        // (h_z - y)^2 (1 - y^2) = 0 factorizes directly.
        roots.push_back(-1.0);
        if (h_z < 1.0) roots.push_back(h_z);
        roots.push_back(1.0);
    } else {
        // Signed factors; the + factor corresponds to lambda0 = +sqrt((1-y)/2)
        // and the - factor to its negation.
        const auto g_plus = [&](double y) {
            return (h_z - y) * std::sqrt(std::max(0.0, 1.0 - y * y)) - h_x * y;
        };
        const auto g_minus = [&](double y) {
            return (h_z - y) * std::sqrt(std::max(0.0, 1.0 - y * y)) + h_x * y;
        };
        scan_roots(g_plus, roots);
        scan_roots(g_minus, roots);
    }

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return std::abs(a - b) < kRootDedupTol; }),
                roots.end());

    // At least one candidate with |lambda0| < 1 must re-satisfy the original
    // stationarity condition; anything else is an implementation bug.
    bool verified = false;
    for (double y : roots) {
        const double lam = lambda_from_y(y);
        if (lam >= 1.0) continue;
        if (std::abs(omega_residual(lam, h_x, h_z)) <= kResidualTol ||
            std::abs(omega_residual(-lam, h_x, h_z)) <= kResidualTol) {
            verified = true;
            break;
        }
    }
    if (!verified) {
        throw NoRootError("no admissible root of the displacement condition at h_x = " +
                          std::to_string(h_x) + ", h_z = " + std::to_string(h_z));
    }
    return roots;
}

DisplacementSolution select_lambda0(const std::vector<double>& y_candidates, double h_x,
                                    double h_z, long n_particles) {
    if (y_candidates.empty()) {
        throw NoRootError("select_lambda0 called with no candidates");
    }

    bool found = false;
    double best_lambda = 0.0;
    double best_density = std::numeric_limits<double>::infinity();
    for (double y : y_candidates) {
        const double lam_abs = lambda_from_y(y);
        if (lam_abs >= 1.0) continue; // |lambda0| = 1 is singular and rejected
        for (double lam : {lam_abs, -lam_abs}) {
            if (std::abs(omega_residual(lam, h_x, h_z)) > kResidualTol) continue;
            // Ranking uses only the order-N term; ties (the lambda -> -lambda
            // pair at h_x = 0) break toward the sign of h_x, + at h_x = 0.
            const double density = energy_density(lam, h_x, h_z);
            const bool better =
                density < best_density - 1e-15 ||
                (std::abs(density - best_density) <= 1e-15 &&
                 ((h_x >= 0.0 && lam > best_lambda) || (h_x < 0.0 && lam < best_lambda)));
            if (!found || better) {
                found = true;
                best_lambda = lam;
                best_density = density;
            }
        }
    }
    if (!found) {
        throw NoRootError("no candidate passed back-substitution at h_x = " +
                          std::to_string(h_x) + ", h_z = " + std::to_string(h_z));
    }

    DisplacementSolution sol;
    sol.lambda0 = best_lambda;
    sol.y = 1.0 - 2.0 * best_lambda * best_lambda;
    sol.omega_residual = omega_residual(best_lambda, h_x, h_z);
    sol.gamma_coef = gamma_at(best_lambda, h_x);
    sol.delta = delta_at(best_lambda, h_x, h_z);
    sol.e0 = e0_at(best_lambda, h_x, h_z, n_particles);
    return sol;
}

DisplacementSolution displacement_solution(const UniaxialParams& params) {
    const auto roots = lambda_roots(params.h_x(), params.h_z());
    return select_lambda0(roots, params.h_x(), params.h_z(), params.n_particles());
}

SqueezeSolution epsilon_uniaxial(const UniaxialParams& params) {
    const DisplacementSolution disp = displacement_solution(params);
    const double epsilon_raw = 2.0 * disp.gamma_coef / disp.delta;
    if (!std::isfinite(epsilon_raw) || std::abs(epsilon_raw) > 1.0 + 1e-12) {
        throw StabilityError("epsilon_uniaxial: |epsilon| = " + std::to_string(epsilon_raw) +
                             " outside the stability domain at h_x = " +
                             std::to_string(params.h_x()) + ", h_z = " +
                             std::to_string(params.h_z()));
    }
    double epsilon =
        std::abs(epsilon_raw) > 1.0 ? (epsilon_raw > 0.0 ? 1.0 : -1.0) : epsilon_raw;
    if (epsilon == 0.0) epsilon = 0.0; // drop the sign of -0.0
    const double root = std::sqrt(1.0 - epsilon * epsilon);

    SqueezeSolution sol;
    sol.epsilon = epsilon;
    sol.t_sq = tanh_sq_from_epsilon(epsilon);
    sol.sigma = 0.5 * disp.delta * (root - 1.0);
    sol.delta_d = disp.delta * root;
    return sol;
}

PhaseResult uniaxial_phase(const UniaxialParams& params, long truncation_override) {
    const SqueezeSolution sol = epsilon_uniaxial(params);
    const long m =
        truncation_override >= 0 ? truncation_override : params.default_truncation();
    return geometric_phase_series(sol.t_sq, m);
}

} // namespace lmg
