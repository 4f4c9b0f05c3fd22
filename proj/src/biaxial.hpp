#pragma once

#include "params.hpp"
#include "series.hpp"

namespace lmg {

/// Coefficients of the quadratic boson Hamiltonian
///   H = N e + delta a^dag a + gamma_coef (a^dag^2 e^{-2i phi} + a^2 e^{2i phi})
/// obtained from the Holstein-Primakoff expansion about the rotated axis.
struct BosonCoefficients {
    double e = 0.0;          // energy density per spin
    double delta = 0.0;      // number-operator coefficient
    double gamma_coef = 0.0; // pair-creation coefficient, (gamma - cos^2 theta)/4
};

/// Bogoliubov solution: epsilon = tanh(2x) together with the quantities the
/// phase series and the diagnostics need. t_sq = tanh^2(x) is the only
/// squeeze variable carried downstream; it stays finite at criticality.
struct SqueezeSolution {
    double epsilon = 0.0;
    double t_sq = 0.0;
    double sigma = 0.0;   // ground-state energy shift, delta*(sqrt(1-eps^2)-1)/2
    double delta_d = 0.0; // excitation coefficient delta*sqrt(1-eps^2);
                          // need not describe the true gap of the system
};

/// theta = 0 for h >= 1, theta = arccos(h) for 0 < h < 1. Throws DomainError
/// for h <= 0.
RotationFrame rotation_angle(double h);

/// Direct evaluation of
///   e     = -(sin^2 theta + 2 h cos theta) / 4
///   delta = sin^2 theta - (gamma + cos^2 theta)/2 + h cos theta
///   gamma_coef = (gamma - cos^2 theta) / 4
BosonCoefficients hp_coefficients(const BiaxialParams& params, const RotationFrame& frame);

/// Closed-form epsilon:
///   h > 1:      -(1 - gamma) / (2h - 1 - gamma)
///   0 < h < 1:  -(h^2 - gamma) / (2 - h^2 - gamma)
/// Both branches tend to -1 at h -> 1 for gamma < 1. The corner
/// gamma = 1, h = 1 is 0/0 in either branch and is assigned epsilon = -1,
/// the limit along the critical line (only t_sq = tanh^2 x = 1 matters
/// downstream, so the sign is immaterial).
SqueezeSolution epsilon_biaxial(const BiaxialParams& params);

/// Phase series evaluated at t_sq from epsilon_biaxial, truncated at
/// M = floor(N/2) unless overridden (truncation_override >= 0).
PhaseResult biaxial_phase(const BiaxialParams& params, long truncation_override = -1);

} // namespace lmg
