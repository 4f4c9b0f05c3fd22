#pragma once

#include "biaxial.hpp"
#include "params.hpp"

#include <vector>

namespace lmg {

/// Displacement amplitude lambda0 that removes the linear boson term, with
/// the quadratic coefficients and energy estimate evaluated there.
struct DisplacementSolution {
    double lambda0 = 0.0;        // |lambda0| < 1
    double y = 0.0;              // y = 1 - 2 lambda0^2
    double e0 = 0.0;             // order-N plus order-N^0 ground-energy estimate
    double omega_residual = 0.0; // linear coefficient / sqrt(N); ~0 at a solution
    double gamma_coef = 0.0;     // pair-creation coefficient at lambda0
    double delta = 0.0;          // number-operator coefficient at lambda0
};

/// All real roots y of (h_z - y)^2 (1 - y^2) - h_x^2 y^2 = 0 inside [-1, 1],
/// multiplicity collapsed, sorted ascending.
///
/// For h_x != 0 the quartic factors exactly into
///   [(h_z - y) sqrt(1-y^2) - h_x y] * [(h_z - y) sqrt(1-y^2) + h_x y],
/// whose factors have only simple sign-changing roots; each factor is scanned
/// on 10^4 cells and refined by bisection to 1e-14, so roots survive even
/// when h_x is tiny and the quartic itself only grazes zero. At h_x = 0 the
/// roots are the factorized set {h_z (if h_z <= 1), 1, -1}.
///
/// Throws NoRootError if no root with |lambda0| < 1 passes back-substitution
/// into the stationarity condition at tolerance 1e-9.
std::vector<double> lambda_roots(double h_x, double h_z);

/// Among the admissible candidates (|lambda0| < 1, both signs tested against
/// the stationarity condition), selects the one minimizing the order-N part
/// of e0. Sign rule: lambda0 >= 0 for h_x >= 0 and lambda0 <= 0 for h_x < 0,
/// which keeps sweeps through h_x = 0 deterministic.
DisplacementSolution select_lambda0(const std::vector<double>& y_candidates, double h_x,
                                    double h_z, long n_particles);

/// epsilon = 2 Gamma(lambda0) / Delta(lambda0); t_sq by the same quadratic
/// root rule as the biaxial pipeline.
SqueezeSolution epsilon_uniaxial(const UniaxialParams& params);

/// Full displacement solution for the validated parameters (root finding
/// plus selection). Exposed for the CLI columns lambda0, y, e0.
DisplacementSolution displacement_solution(const UniaxialParams& params);

/// Phase series at t_sq from epsilon_uniaxial, truncated at M = floor(N/2)
/// unless overridden.
PhaseResult uniaxial_phase(const UniaxialParams& params, long truncation_override = -1);

} // namespace lmg
