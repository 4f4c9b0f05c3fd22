#include "series.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace lmg {

namespace {

constexpr long kRenormInterval = 10000;

void check_t_sq(double t_sq) {
    if (!(t_sq >= 0.0 && t_sq <= 1.0)) {
        throw DomainError("t_sq", "t_sq must lie in [0, 1], got " + std::to_string(t_sq));
    }
}

} // namespace

double tanh_sq_from_epsilon(double epsilon) {
    if (!(std::abs(epsilon) <= 1.0)) {
        throw DomainError("epsilon",
                          "|epsilon| must be <= 1, got " + std::to_string(epsilon));
    }
    const double t = epsilon / (1.0 + std::sqrt(1.0 - epsilon * epsilon));
    return t * t;
}

WeightTable weight_table(double t_sq, long m) {
    check_t_sq(t_sq);
    if (m < 0) {
        throw DomainError("m", "truncation m must be >= 0, got " + std::to_string(m));
    }

    WeightTable table;
    table.t_sq = t_sq;
    table.m = m;
    table.weights.resize(static_cast<size_t>(m) + 1);

    // w_n <= w_{n-1} always (the ratio is < 1), so no overflow; once a weight
    // underflows to zero the remaining tail is zero as well.
    double w = 1.0;
    double total = 1.0;
    table.weights[0] = w;
    for (long n = 1; n <= m; ++n) {
        w *= t_sq * static_cast<double>(2 * n - 1) / static_cast<double>(2 * n);
        table.weights[static_cast<size_t>(n)] = w;
        total += w;
    }
    for (auto& v : table.weights) v /= total;
    return table;
}

PhaseResult geometric_phase_series(double t_sq, long m) {
    check_t_sq(t_sq);
    if (m < 0) {
        throw DomainError("m", "truncation m must be >= 0, got " + std::to_string(m));
    }

    double w = 1.0;        // current unnormalized weight, up to a common scale
    double sum_w = 1.0;    // sum of weights
    double sum_2n_w = 0.0; // sum of 2n * weights
    for (long n = 1; n <= m; ++n) {
        w *= t_sq * static_cast<double>(2 * n - 1) / static_cast<double>(2 * n);
        if (w == 0.0) break; // tail is identically zero from here on
        sum_w += w;
        sum_2n_w += static_cast<double>(2 * n) * w;
        if (n % kRenormInterval == 0) {
            // Common rescale leaves the ratio untouched and keeps the
            // accumulators in range for very large m.
            const double scale = 1.0 / sum_w;
            w *= scale;
            sum_2n_w *= scale;
            sum_w = 1.0;
        }
    }

    PhaseResult result;
    result.n_mean = sum_2n_w / sum_w;
    result.phi_g = std::numbers::pi * (1.0 - result.n_mean);
    result.truncation_m = m;
    return result;
}

double untruncated_mean(double t_sq) {
    if (!(t_sq >= 0.0 && t_sq < 1.0)) {
        throw DomainError("t_sq",
                          "untruncated mean requires 0 <= t_sq < 1, got " +
                              std::to_string(t_sq));
    }
    return t_sq / (1.0 - t_sq);
}

} // namespace lmg
