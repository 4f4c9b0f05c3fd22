#pragma once

#include "errors.hpp"

namespace lmg {

/// Validated parameters of the anisotropic collective-spin model
///   H = -(1/N) (S_x^2 + gamma S_y^2) - h S_z
/// with gamma in [0,1], h > 0 and N >= 2 spins.
class BiaxialParams {
public:
    BiaxialParams(double gamma, double h, long n_particles);

    double gamma() const noexcept { return gamma_; }
    double h() const noexcept { return h_; }
    long n_particles() const noexcept { return n_particles_; }

    /// Default series truncation M = floor(N/2).
    long default_truncation() const noexcept { return n_particles_ / 2; }

private:
    double gamma_;
    double h_;
    long n_particles_;
};

/// Validated parameters of the uniaxial model
///   H = -(1/N) S_x^2 - h_x S_x - h_z S_z
/// with h_z > 0; h_x may take any sign.
class UniaxialParams {
public:
    UniaxialParams(double h_x, double h_z, long n_particles);

    double h_x() const noexcept { return h_x_; }
    double h_z() const noexcept { return h_z_; }
    long n_particles() const noexcept { return n_particles_; }

    long default_truncation() const noexcept { return n_particles_ / 2; }

private:
    double h_x_;
    double h_z_;
    long n_particles_;
};

/// Rotation about the y axis taking the lab z axis onto the semiclassical
/// magnetization: theta = 0 for h >= 1, theta = arccos(h) for 0 < h < 1.
struct RotationFrame {
    double theta = 0.0;
};

/// Geometric phase plus the mean excitation it derives from.
/// phi_g = pi * (1 - n_mean) holds exactly by construction.
struct PhaseResult {
    double phi_g = 0.0;
    double n_mean = 0.0;
    long truncation_m = 0;
};

BiaxialParams validate_biaxial(double gamma, double h, long n_particles);
UniaxialParams validate_uniaxial(double h_x, double h_z, long n_particles);

} // namespace lmg
