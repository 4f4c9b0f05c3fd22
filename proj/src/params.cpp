#include "params.hpp"

#include <cmath>
#include <string>

namespace lmg {

namespace {

void require_finite(const char* field, double value) {
    if (!std::isfinite(value)) {
        throw DomainError(field, std::string(field) + " must be finite, got " +
                                     std::to_string(value));
    }
}

} // namespace

BiaxialParams::BiaxialParams(double gamma, double h, long n_particles)
    : gamma_(gamma), h_(h), n_particles_(n_particles) {
    require_finite("gamma", gamma);
    require_finite("h", h);
    if (gamma < 0.0 || gamma > 1.0) {
        throw DomainError("gamma", "gamma must lie in [0, 1], got " + std::to_string(gamma));
    }
    if (h <= 0.0) {
        throw DomainError("h", "h must be > 0, got " + std::to_string(h));
    }
    if (n_particles < 2) {
        throw DomainError("n_particles",
                          "n_particles must be >= 2, got " + std::to_string(n_particles));
    }
}

UniaxialParams::UniaxialParams(double h_x, double h_z, long n_particles)
    : h_x_(h_x), h_z_(h_z), n_particles_(n_particles) {
    require_finite("h_x", h_x);
    require_finite("h_z", h_z);
    if (h_z <= 0.0) {
        throw DomainError("h_z", "h_z must be > 0, got " + std::to_string(h_z));
    }
    if (n_particles < 2) {
        throw DomainError("n_particles",
                          "n_particles must be >= 2, got " + std::to_string(n_particles));
    }
}

BiaxialParams validate_biaxial(double gamma, double h, long n_particles) {
    return BiaxialParams(gamma, h, n_particles);
}

UniaxialParams validate_uniaxial(double h_x, double h_z, long n_particles) {
    return UniaxialParams(h_x, h_z, n_particles);
}

} // namespace lmg
