#pragma once

#include "params.hpp"

#include <vector>

namespace lmg {

/// Normalized occupation weights of the truncated squeezed vacuum:
/// w_n proportional to [(2n-1)!!/(2n)!!] * t_sq^n for n = 0..m.
struct WeightTable {
    double t_sq = 0.0;
    long m = 0;
    std::vector<double> weights;
};

/// Solve tanh(2x) = epsilon for t = tanh(x) and return t^2.
///
/// Uses the quadratic eps*t^2 - 2t + eps = 0 and the root with |t| <= 1,
/// written as t = eps / (1 + sqrt(1 - eps^2)) so there is no cancellation
/// for small eps. x itself is never formed; at |eps| -> 1 it diverges
/// while t^2 -> 1 stays finite.
double tanh_sq_from_epsilon(double epsilon);

/// Weights built by the multiplicative recurrence
///   w_n / w_{n-1} = t_sq * (2n-1) / (2n),
/// never by evaluating double factorials directly, then normalized to sum 1.
WeightTable weight_table(double t_sq, long m);

/// Truncated mean excitation n_mean = sum 2n * w_n and the geometric phase
/// phi_g = pi * (1 - n_mean). Accumulates the weight recurrence with running
/// renormalization every 10^4 terms so arbitrarily large m stays in range.
PhaseResult geometric_phase_series(double t_sq, long m);

/// Closed-form mean excitation of the untruncated distribution,
/// t_sq / (1 - t_sq). Serves as the m -> infinity oracle; diverges at
/// t_sq = 1, where callers must use the truncated series instead.
double untruncated_mean(double t_sq);

} // namespace lmg
