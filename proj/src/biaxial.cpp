#include "biaxial.hpp"

#include <cmath>
#include <string>

namespace lmg {

namespace {

constexpr double kEpsilonSlack = 1e-12;

/// Clamp values that overshoot |epsilon| = 1 by at most the slack; anything
/// beyond signals leaving the stability domain of the quadratic Hamiltonian.
double check_epsilon(double epsilon, const std::string& where) {
    const double mag = std::abs(epsilon);
    if (mag > 1.0 + kEpsilonSlack) {
        throw StabilityError(where + ": |epsilon| = " + std::to_string(mag) +
                             " exceeds the stability bound 1");
    }
    if (mag > 1.0) return epsilon > 0.0 ? 1.0 : -1.0;
    if (epsilon == 0.0) return 0.0; // drop the sign of -0.0
    return epsilon;
}

} // namespace

RotationFrame rotation_angle(double h) {
    if (!(h > 0.0)) {
        throw DomainError("h", "rotation angle requires h > 0, got " + std::to_string(h));
    }
    RotationFrame frame;
    frame.theta = h >= 1.0 ? 0.0 : std::acos(h);
    return frame;
}

BosonCoefficients hp_coefficients(const BiaxialParams& params, const RotationFrame& frame) {
    const double c = std::cos(frame.theta);
    const double s = std::sin(frame.theta);
    const double c2 = c * c;
    const double s2 = s * s;
    const double gamma = params.gamma();
    const double h = params.h();

    BosonCoefficients coef;
    coef.e = -0.25 * (s2 + 2.0 * h * c);
    coef.delta = s2 - 0.5 * (gamma + c2) + h * c;
    coef.gamma_coef = 0.25 * (gamma - c2);
    return coef;
}

SqueezeSolution epsilon_biaxial(const BiaxialParams& params) {
    const double gamma = params.gamma();
    const double h = params.h();

    double epsilon;
    if (h >= 1.0) {
        if (gamma == 1.0 && h == 1.0) {
            // 0/0 corner; the limit along the critical line h -> 1.
            epsilon = -1.0;
        } else {
            epsilon = -(1.0 - gamma) / (2.0 * h - 1.0 - gamma);
        }
    } else {
        // -(h^2 - gamma)/(2 - h^2 - gamma) arranged so the gamma = 1 case
        // gives exactly +1 for every h < 1 (numerator and denominator are
        // the same float), keeping the isotropic plateau exactly tied.
        const double w = 1.0 - h * h;
        epsilon = -((1.0 - gamma) - w) / ((1.0 - gamma) + w);
    }
    epsilon = check_epsilon(epsilon, "epsilon_biaxial");

    const RotationFrame frame = rotation_angle(h);
    const BosonCoefficients coef = hp_coefficients(params, frame);
    const double root = std::sqrt(1.0 - epsilon * epsilon);

    SqueezeSolution sol;
    sol.epsilon = epsilon;
    sol.t_sq = tanh_sq_from_epsilon(epsilon);
    sol.sigma = 0.5 * coef.delta * (root - 1.0);
    sol.delta_d = coef.delta * root;
    return sol;
}

PhaseResult biaxial_phase(const BiaxialParams& params, long truncation_override) {
    const SqueezeSolution sol = epsilon_biaxial(params);
    const long m =
        truncation_override >= 0 ? truncation_override : params.default_truncation();
    return geometric_phase_series(sol.t_sq, m);
}

} // namespace lmg
