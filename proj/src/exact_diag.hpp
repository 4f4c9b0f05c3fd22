#pragma once

#include "params.hpp"

#include <Eigen/Dense>

namespace lmg {

/// Collective spin operators in the maximal sector S = N/2, S_z eigenbasis
/// with rows labeled m = S, S-1, ..., -S. sx and sz are real; sy is purely
/// imaginary and stored as the real antisymmetric matrix sy_imag with
/// s_y = i * sy_imag, so every Hamiltonian here stays real symmetric.
struct SpinSector {
    long n_particles = 0;
    long dimension = 0;
    Eigen::MatrixXd sx;
    Eigen::MatrixXd sy_imag;
    Eigen::MatrixXd sz;
    Eigen::VectorXd m_values;
};

/// Two lowest eigenpairs of a sector Hamiltonian. parity0/1 are the
/// expectation values of the spin-flip parity (+-1 when conserved).
struct GroundDoublet {
    double e0 = 0.0;
    double e1 = 0.0;
    Eigen::VectorXd v0;
    Eigen::VectorXd v1;
    double parity0 = 0.0;
    double parity1 = 0.0;
};

struct BerryPhaseResult {
    double phase = 0.0;       // pi * <S~_z>
    double s_tilde_z = 0.0;   // <S~_z> in the supplied state
    double n_mean = 0.0;      // N/2 - <S~_z>, sector analogue of the boson number
    double phase_paper = 0.0; // pi * (1 - n_mean), for comparison with the series
};

struct FullHilbertReport {
    double sector_e0 = 0.0;
    double full_e0 = 0.0;
    bool max_spin_confirmed = false;
};

constexpr long kDefaultDimensionLimit = 4001;
constexpr long kFullHilbertMaxParticles = 12;

/// Standard angular-momentum matrices for S = N/2. Throws SizeError when the
/// sector dimension N+1 exceeds dim_limit.
SpinSector spin_operators(long n_particles, long dim_limit = kDefaultDimensionLimit);

/// Dense sector Hamiltonians; asserted real symmetric to 1e-12.
Eigen::MatrixXd build_hamiltonian(const BiaxialParams& params, const SpinSector& sector);
Eigen::MatrixXd build_hamiltonian(const UniaxialParams& params, const SpinSector& sector);

/// Two lowest eigenpairs. When H conserves the spin-flip parity (exactly
/// zero couplings between the even and odd m-index sublattices) the two
/// parity blocks are diagonalized separately, which keeps near-degenerate
/// broken-phase doublets parity-pure.
GroundDoublet ground_doublet(const Eigen::MatrixXd& hamiltonian);

/// Returns v0 when the doublet is split by more than
/// splitting_threshold_rel * |e0|; otherwise the combination (v0 +- v1)/sqrt(2)
/// maximizing <S~_z>, where S~_z = -sin(theta) sx + cos(theta) sz. Exact
/// eigenstates in the broken phase are parity eigenstates with <S_x> = 0;
/// this recombination restores the symmetry-broken frame the analytic
/// pipeline expands about.
Eigen::VectorXd broken_symmetry_state(const GroundDoublet& doublet, const RotationFrame& frame,
                                      const SpinSector& sector,
                                      double splitting_threshold_rel = 1e-6);

/// The loop |g(phi)> = exp(i phi S~_z)|g(0)> has constant connection, so the
/// accumulated phase over phi in [0, pi] is exactly pi * <S~_z>.
BerryPhaseResult berry_phase_exact(const Eigen::VectorXd& state, const RotationFrame& frame,
                                   const SpinSector& sector);

/// Discretized overlap product: sum_k arg <g(phi_k)|g(phi_{k+1})> over a
/// uniform grid on [0, pi]. Converges quadratically in the step size.
double berry_phase_overlap(const Eigen::VectorXd& state, const RotationFrame& frame,
                           const SpinSector& sector, long steps);

/// Builds the full 2^N Hamiltonian from single-site Pauli operators and
/// compares its ground energy with the S = N/2 sector result. N <= 12.
FullHilbertReport full_hilbert_check(const BiaxialParams& params);
FullHilbertReport full_hilbert_check(const UniaxialParams& params);

} // namespace lmg
