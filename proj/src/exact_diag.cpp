#include "exact_diag.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

namespace lmg {

namespace {

constexpr double kHermiticityTol = 1e-12;

void check_symmetric(const Eigen::MatrixXd& h) {
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    const double dev = (h - h.transpose()).cwiseAbs().maxCoeff();
    if (dev > kHermiticityTol * scale) {
        throw ConvergenceError("sector Hamiltonian is not symmetric; deviation " +
                               std::to_string(dev));
    }
}

/// True when H has no coupling between even and odd m-index sublattices,
/// i.e. when the spin-flip parity (-1)^(S-m) is conserved exactly.
bool parity_blocks_decoupled(const Eigen::MatrixXd& h) {
    const long n = h.rows();
    for (long i = 0; i < n; ++i) {
        for (long j = (i % 2 == 0) ? 1 : 0; j < n; j += 2) {
            if (h(i, j) != 0.0) return false;
        }
    }
    return true;
}

Eigen::MatrixXd s_tilde_z(const RotationFrame& frame, const SpinSector& sector) {
    return -std::sin(frame.theta) * sector.sx +
           std::cos(frame.theta) * sector.sz;
}

struct EigenPair {
    double value;
    Eigen::VectorXd vector;
    int block; // 0 = even sublattice, 1 = odd, -1 = full solve
};

} // namespace

SpinSector spin_operators(long n_particles, long dim_limit) {
    if (n_particles < 2) {
        throw DomainError("n_particles",
                          "spin sector requires n_particles >= 2, got " +
                              std::to_string(n_particles));
    }
    const long dim = n_particles + 1;
    if (dim > dim_limit) {
        throw SizeError("sector dimension " + std::to_string(dim) +
                        " exceeds the limit " + std::to_string(dim_limit));
    }

    const double s = 0.5 * static_cast<double>(n_particles);
    SpinSector sector;
    sector.n_particles = n_particles;
    sector.dimension = dim;
    sector.sx = Eigen::MatrixXd::Zero(dim, dim);
    sector.sy_imag = Eigen::MatrixXd::Zero(dim, dim);
    sector.sz = Eigen::MatrixXd::Zero(dim, dim);
    sector.m_values.resize(dim);

    for (long i = 0; i < dim; ++i) {
        const double m = s - static_cast<double>(i);
        sector.m_values(i) = m;
        sector.sz(i, i) = m;
        if (i > 0) {
            // S+ |s, m> = c(m) |s, m+1>, row index i-1.
            const double c = std::sqrt(s * (s + 1.0) - m * (m + 1.0));
            sector.sx(i - 1, i) = 0.5 * c;
            sector.sx(i, i - 1) = 0.5 * c;
            sector.sy_imag(i - 1, i) = -0.5 * c;
            sector.sy_imag(i, i - 1) = 0.5 * c;
        }
    }
    return sector;
}

Eigen::MatrixXd build_hamiltonian(const BiaxialParams& params, const SpinSector& sector) {
    if (params.n_particles() != sector.n_particles) {
        throw ConfigError("parameter/sector particle-number mismatch");
    }
    const double n = static_cast<double>(params.n_particles());
    // s_y^2 = (i A)^2 = -A A with A = sy_imag.
    Eigen::MatrixXd h = -(1.0 / n) * (sector.sx * sector.sx -
                                      params.gamma() * (sector.sy_imag * sector.sy_imag)) -
                        params.h() * sector.sz;
    check_symmetric(h);
    return h;
}

Eigen::MatrixXd build_hamiltonian(const UniaxialParams& params, const SpinSector& sector) {
    if (params.n_particles() != sector.n_particles) {
        throw ConfigError("parameter/sector particle-number mismatch");
    }
    const double n = static_cast<double>(params.n_particles());
    Eigen::MatrixXd h = -(1.0 / n) * (sector.sx * sector.sx) - params.h_x() * sector.sx -
                        params.h_z() * sector.sz;
    check_symmetric(h);
    return h;
}

GroundDoublet ground_doublet(const Eigen::MatrixXd& hamiltonian) {
    const long dim = hamiltonian.rows();
    if (dim < 2) {
        throw ConfigError("ground_doublet needs dimension >= 2");
    }

    std::vector<EigenPair> lowest;
    if (parity_blocks_decoupled(hamiltonian)) {
        for (int block = 0; block < 2; ++block) {
            const long bdim = (dim - block + 1) / 2;
            if (bdim == 0) continue;
            Eigen::MatrixXd sub(bdim, bdim);
            for (long i = 0; i < bdim; ++i)
                for (long j = 0; j < bdim; ++j)
                    sub(i, j) = hamiltonian(2 * i + block, 2 * j + block);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sub);
            if (solver.info() != Eigen::Success) {
                throw ConvergenceError("eigensolver failed on a parity block");
            }
            const long take = std::min<long>(2, bdim);
            for (long k = 0; k < take; ++k) {
                Eigen::VectorXd full = Eigen::VectorXd::Zero(dim);
                for (long i = 0; i < bdim; ++i) full(2 * i + block) = solver.eigenvectors()(i, k);
                lowest.push_back({solver.eigenvalues()(k), std::move(full), block});
            }
        }
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian);
        if (solver.info() != Eigen::Success) {
            throw ConvergenceError("eigensolver failed on the sector Hamiltonian");
        }
        for (long k = 0; k < 2; ++k) {
            lowest.push_back({solver.eigenvalues()(k), solver.eigenvectors().col(k), -1});
        }
    }

    std::sort(lowest.begin(), lowest.end(),
              [](const EigenPair& a, const EigenPair& b) { return a.value < b.value; });

    const auto parity_of = [dim](const EigenPair& p) {
        if (p.block == 0) return 1.0;
        if (p.block == 1) return -1.0;
        double val = 0.0;
        for (long i = 0; i < dim; ++i) {
            val += (i % 2 == 0 ? 1.0 : -1.0) * p.vector(i) * p.vector(i);
        }
        return val;
    };

    GroundDoublet doublet;
    doublet.e0 = lowest[0].value;
    doublet.e1 = lowest[1].value;
    doublet.parity0 = parity_of(lowest[0]);
    doublet.parity1 = parity_of(lowest[1]);
    doublet.v0 = std::move(lowest[0].vector);
    doublet.v1 = std::move(lowest[1].vector);
    return doublet;
}

Eigen::VectorXd broken_symmetry_state(const GroundDoublet& doublet, const RotationFrame& frame,
                                      const SpinSector& sector,
                                      double splitting_threshold_rel) {
    const double threshold = splitting_threshold_rel * std::abs(doublet.e0);
    if (doublet.e1 - doublet.e0 > threshold) {
        return doublet.v0;
    }
    const Eigen::MatrixXd sz_tilde = s_tilde_z(frame, sector);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Eigen::VectorXd plus = inv_sqrt2 * (doublet.v0 + doublet.v1);
    Eigen::VectorXd minus = inv_sqrt2 * (doublet.v0 - doublet.v1);
    const double exp_plus = plus.dot(sz_tilde * plus);
    const double exp_minus = minus.dot(sz_tilde * minus);
    return exp_plus >= exp_minus ? plus : minus;
}

BerryPhaseResult berry_phase_exact(const Eigen::VectorXd& state, const RotationFrame& frame,
                                   const SpinSector& sector) {
    const Eigen::MatrixXd sz_tilde = s_tilde_z(frame, sector);
    BerryPhaseResult result;
    result.s_tilde_z = state.dot(sz_tilde * state);
    result.phase = std::numbers::pi * result.s_tilde_z;
    result.n_mean = 0.5 * static_cast<double>(sector.n_particles) - result.s_tilde_z;
    result.phase_paper = std::numbers::pi * (1.0 - result.n_mean);
    return result;
}

double berry_phase_overlap(const Eigen::VectorXd& state, const RotationFrame& frame,
                           const SpinSector& sector, long steps) {
    if (steps < 2) {
        throw ConfigError("berry_phase_overlap needs steps >= 2");
    }
    // Spectral form: with state components a_j in the S~_z eigenbasis,
    // <g(phi)|g(phi + d)> = sum_j a_j^2 exp(i d mu_j).
    Eigen::VectorXd mu;
    Eigen::VectorXd amp;
    if (frame.theta == 0.0) {
        mu = sector.m_values;
        amp = state;
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s_tilde_z(frame, sector));
        if (solver.info() != Eigen::Success) {
            throw ConvergenceError("eigensolver failed on S~_z");
        }
        mu = solver.eigenvalues();
        amp = solver.eigenvectors().transpose() * state;
    }

    const double delta = std::numbers::pi / static_cast<double>(steps);
    double total = 0.0;
    for (long k = 0; k < steps; ++k) {
        std::complex<double> overlap(0.0, 0.0);
        for (long j = 0; j < mu.size(); ++j) {
            const double w = amp(j) * amp(j);
            if (w == 0.0) continue;
            overlap += w * std::polar(1.0, delta * mu(j));
        }
        total += std::arg(overlap);
    }
    return total;
}

namespace {

/// Dense collective operators on the full 2^N space; bit set = spin down.
struct FullSpace {
    Eigen::MatrixXd sx;
    Eigen::MatrixXd sy_imag;
    Eigen::MatrixXd sz;
};

FullSpace full_space_operators(long n_particles) {
    if (n_particles > kFullHilbertMaxParticles) {
        throw SizeError("full Hilbert check limited to N <= " +
                        std::to_string(kFullHilbertMaxParticles) + ", got " +
                        std::to_string(n_particles));
    }
    const long dim = 1L << n_particles;
    FullSpace ops;
    ops.sx = Eigen::MatrixXd::Zero(dim, dim);
    ops.sy_imag = Eigen::MatrixXd::Zero(dim, dim);
    ops.sz = Eigen::MatrixXd::Zero(dim, dim);
    for (long s = 0; s < dim; ++s) {
        const int down = __builtin_popcountl(static_cast<unsigned long>(s));
        ops.sz(s, s) = 0.5 * static_cast<double>(n_particles - 2 * down);
        for (long site = 0; site < n_particles; ++site) {
            const long flipped = s ^ (1L << site);
            ops.sx(flipped, s) += 0.5;
            // sigma_y/2 maps |up> -> (i/2)|down>, |down> -> (-i/2)|up>.
            ops.sy_imag(flipped, s) += (s & (1L << site)) ? -0.5 : 0.5;
        }
    }
    return ops;
}

double ground_energy(const Eigen::MatrixXd& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("eigensolver failed on the full Hilbert space");
    }
    return solver.eigenvalues()(0);
}

FullHilbertReport make_report(double sector_e0, double full_e0) {
    FullHilbertReport report;
    report.sector_e0 = sector_e0;
    report.full_e0 = full_e0;
    report.max_spin_confirmed = std::abs(sector_e0 - full_e0) <= 1e-10;
    return report;
}

} // namespace

FullHilbertReport full_hilbert_check(const BiaxialParams& params) {
    const FullSpace ops = full_space_operators(params.n_particles());
    const double n = static_cast<double>(params.n_particles());
    const Eigen::MatrixXd h_full =
        -(1.0 / n) * (ops.sx * ops.sx - params.gamma() * (ops.sy_imag * ops.sy_imag)) -
        params.h() * ops.sz;
    const SpinSector sector = spin_operators(params.n_particles());
    const GroundDoublet doublet = ground_doublet(build_hamiltonian(params, sector));
    return make_report(doublet.e0, ground_energy(h_full));
}

FullHilbertReport full_hilbert_check(const UniaxialParams& params) {
    const FullSpace ops = full_space_operators(params.n_particles());
    const double n = static_cast<double>(params.n_particles());
    const Eigen::MatrixXd h_full =
        -(1.0 / n) * (ops.sx * ops.sx) - params.h_x() * ops.sx - params.h_z() * ops.sz;
    const SpinSector sector = spin_operators(params.n_particles());
    const GroundDoublet doublet = ground_doublet(build_hamiltonian(params, sector));
    return make_report(doublet.e0, ground_energy(h_full));
}

} // namespace lmg
