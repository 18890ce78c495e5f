#include "qpc/dynamics.hpp"

#include <cmath>

#include "qpc/errors.hpp"

namespace qpc {

namespace {

constexpr double kTailTol = 1e-12;

// Coupling strength between canonical block slots (see block_matrix docs);
// slots: 0 = (ee,n), 1 = (eg,n+1), 2 = (ge,n+1), 3 = (gg,n+2).
double slot_coupling(int s, int sp, double gamma, double beta, double R) {
    const int lo = std::min(s, sp), hi = std::max(s, sp);
    if (lo == 0 && hi == 1) return R * gamma;
    if (lo == 0 && hi == 2) return gamma;
    if (lo == 1 && hi == 3) return beta;
    if (lo == 2 && hi == 3) return R * beta;
    return 0.0;
}

void add_couplings(ComplexMatrix& h, double R, int cutoff) {
    const int width = cutoff + 1;
    auto ix = [width](int pair, int n) { return pair * width + n; };
    for (int n = 0; n + 1 <= cutoff; ++n) {
        const double g = std::sqrt(n + 1.0);
        // a sigma1^+ : |g.,n+1> -> |e.,n> with strength lambda1 = 1
        h(ix(0, n), ix(2, n + 1)) += g;
        h(ix(2, n + 1), ix(0, n)) += g;
        h(ix(1, n), ix(3, n + 1)) += g;
        h(ix(3, n + 1), ix(1, n)) += g;
        // a sigma2^+ : |.g,n+1> -> |.e,n> with strength R
        h(ix(0, n), ix(1, n + 1)) += R * g;
        h(ix(1, n + 1), ix(0, n)) += R * g;
        h(ix(2, n), ix(3, n + 1)) += R * g;
        h(ix(3, n + 1), ix(2, n)) += R * g;
    }
}

}  // namespace

void ModelParams::validate() const {
    if (R < 0.0) throw ConfigError("ModelParams: relative coupling R must be >= 0");
}

ComplexVector coherent_amplitudes(Complex alpha, int cutoff) {
    if (cutoff < 0) throw DimensionMismatch("coherent_amplitudes: cutoff must be >= 0");
    ComplexVector q = ComplexVector::Zero(cutoff + 1);
    if (alpha == Complex(0.0, 0.0)) {
        q[0] = 1.0;
        return q;
    }
    const double log_mag = std::log(std::abs(alpha));
    const double phase = std::arg(alpha);
    const double norm_term = -0.5 * std::norm(alpha);
    double total = 0.0;
    for (int n = 0; n <= cutoff; ++n) {
        const double log_qn = n * log_mag - 0.5 * std::lgamma(n + 1.0) + norm_term;
        const double mag = std::exp(log_qn);
        q[n] = std::polar(mag, n * phase);
        total += mag * mag;
    }
    if (1.0 - total >= kTailTol) {
        throw CutoffTooSmall("coherent_amplitudes: truncation tail " +
                             std::to_string(1.0 - total) + " at cutoff " +
                             std::to_string(cutoff));
    }
    return q;
}

int default_cutoff(double nbar) {
    if (nbar < 0.0) throw ConfigError("default_cutoff: mean photon number must be >= 0");
    const int rule = static_cast<int>(std::ceil(nbar + 10.0 * std::sqrt(nbar))) + 2;
    // The 10-sigma rule is calibrated for nbar >= 5; below that the Poisson
    // tail and the evolved occupancy (blocks reach Fock n+2) need an absolute
    // floor to satisfy the tail and top-level guards.
    const int floor = static_cast<int>(std::ceil(nbar)) + 24;
    return std::max(rule, floor);
}

JointState initial_joint_state(Complex a, Complex b, Complex alpha, int cutoff) {
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-10) {
        throw NotNormalized("initial_joint_state: |a|^2 + |b|^2 must equal 1");
    }
    const ComplexVector q = coherent_amplitudes(alpha, cutoff);
    const int width = cutoff + 1;
    ComplexVector amps = ComplexVector::Zero(4 * width);
    amps.segment(0 * width, width) = a * q;  // a |ee> x coherent
    amps.segment(3 * width, width) = b * q;  // b |gg> x coherent
    JointState psi(cutoff, std::move(amps));
    check_fock_tail(psi);
    return psi;
}

ComplexMatrix build_hamiltonian(const ModelParams& params, int cutoff) {
    params.validate();
    if (cutoff < 1) throw DimensionMismatch("build_hamiltonian: cutoff must be >= 1");
    const int width = cutoff + 1;
    ComplexMatrix h = ComplexMatrix::Zero(4 * width, 4 * width);
    for (int pair = 0; pair < 4; ++pair) {
        const int sz1 = (pair / 2 == 0) ? 1 : -1;  // sigma_z = |e><e| - |g><g|
        const int sz2 = (pair % 2 == 0) ? 1 : -1;
        for (int n = 0; n <= cutoff; ++n) {
            h(pair * width + n, pair * width + n) =
                params.omega * (n + 0.5) + params.E1 * sz1 + params.E2 * sz2;
        }
    }
    add_couplings(h, params.R, cutoff);
    return h;
}

ComplexMatrix interaction_hamiltonian(double R, int cutoff) {
    if (R < 0.0) throw ConfigError("interaction_hamiltonian: R must be >= 0");
    if (cutoff < 1) throw DimensionMismatch("interaction_hamiltonian: cutoff must be >= 1");
    const int width = cutoff + 1;
    ComplexMatrix h = ComplexMatrix::Zero(4 * width, 4 * width);
    add_couplings(h, R, cutoff);
    return h;
}

Eigen::VectorXd excitation_numbers(int cutoff) {
    const int width = cutoff + 1;
    Eigen::VectorXd n_op(4 * width);
    for (int pair = 0; pair < 4; ++pair) {
        const int excited = (pair / 2 == 0 ? 1 : 0) + (pair % 2 == 0 ? 1 : 0);
        for (int n = 0; n <= cutoff; ++n) n_op[pair * width + n] = n + excited;
    }
    return n_op;
}

FullPropagator::FullPropagator(const ModelParams& params, int cutoff) : cutoff_(cutoff) {
    params.validate();
    const ComplexMatrix h = params.resonant ? interaction_hamiltonian(params.R, cutoff)
                                            : build_hamiltonian(params, cutoff);
    eig_ = hermitian_eigensystem(h);
}

JointState FullPropagator::evolve(const JointState& psi0, double t) const {
    return evolve_grid(psi0, {t}).front();
}

std::vector<JointState> FullPropagator::evolve_grid(const JointState& psi0,
                                                    const std::vector<double>& times) const {
    if (psi0.cutoff != cutoff_) {
        throw DimensionMismatch("FullPropagator: state cutoff does not match the propagator");
    }
    const ComplexVector coeffs = eig_.vectors.adjoint() * psi0.amplitudes;
    std::vector<JointState> out;
    out.reserve(times.size());
    for (const double t : times) {
        ComplexVector rotated(coeffs.size());
        for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
            rotated[k] = std::polar(1.0, -eig_.values[k] * t) * coeffs[k];
        }
        JointState psi(cutoff_, eig_.vectors * rotated);
        if (std::abs(psi.norm() - 1.0) > 1e-10) {
            throw NotNormalized("FullPropagator: evolved state lost normalization");
        }
        check_fock_tail(psi);
        out.push_back(std::move(psi));
    }
    return out;
}

JointState evolve_full(const JointState& psi0, const ModelParams& params, double t) {
    return FullPropagator(params, psi0.cutoff).evolve(psi0, t);
}

Eigen::Matrix4d block_matrix(int n, double R) {
    const double gamma = std::sqrt(n + 1.0);
    const double beta = std::sqrt(n + 2.0);
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    for (int s = 0; s < 4; ++s)
        for (int sp = s + 1; sp < 4; ++sp)
            m(s, sp) = m(sp, s) = slot_coupling(s, sp, gamma, beta, R);
    return m;
}

BlockSpectrum block_spectrum(int n, double R) {
    BlockSpectrum out;
    out.n = n;
    out.gamma = std::sqrt(n + 1.0);
    out.beta = std::sqrt(n + 2.0);
    out.delta = (1.0 + R * R) * (out.gamma * out.gamma + out.beta * out.beta);
    out.big_delta = (1.0 - R * R) * out.beta * out.gamma;
    const double disc =
        std::max(out.delta * out.delta - 4.0 * out.big_delta * out.big_delta, 0.0);
    out.mu = 0.5 * (out.delta + std::sqrt(disc));
    out.nu = 0.5 * (out.delta - std::sqrt(disc));
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(block_matrix(n, R));
    if (solver.info() != Eigen::Success) {
        throw NoConvergence("block_spectrum: 4x4 eigensolver did not converge");
    }
    out.eigenvalues = solver.eigenvalues();
    out.eigenvectors = solver.eigenvectors();
    return out;
}

BlockwisePropagator::BlockwisePropagator(Complex a, Complex b, Complex alpha,
                                         const ModelParams& params, int cutoff)
    : cutoff_(cutoff) {
    params.validate();
    if (!params.resonant) {
        throw NotResonant("BlockwisePropagator: blockwise path requires the resonance flag");
    }
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-10) {
        throw NotNormalized("BlockwisePropagator: |a|^2 + |b|^2 must equal 1");
    }
    if (cutoff < 2) throw DimensionMismatch("BlockwisePropagator: cutoff must be >= 2");

    const ComplexVector q = coherent_amplitudes(alpha, cutoff);
    const int width = cutoff + 1;

    // Sector of total excitation m spans the canonical slots
    //   (ee, m-2), (eg, m-1), (ge, m-1), (gg, m)
    // restricted to Fock indices 0..cutoff. Interior sectors are the full
    // 4x4 blocks; m = 0, 1 and the two topmost sectors are truncated.
    constexpr int kSlotFockOffset[4] = {-2, -1, -1, 0};
    sectors_.reserve(cutoff + 3);
    for (int m = 0; m <= cutoff + 2; ++m) {
        Sector sector;
        std::vector<int> slots;
        for (int s = 0; s < 4; ++s) {
            const int fock = m + kSlotFockOffset[s];
            if (fock < 0 || fock > cutoff) continue;
            slots.push_back(s);
            sector.flat_index.push_back(s * width + fock);
        }
        const int k = static_cast<int>(slots.size());

        Eigen::VectorXcd init = Eigen::VectorXcd::Zero(k);
        for (int i = 0; i < k; ++i) {
            if (slots[i] == 0) init[i] = a * q[m - 2];
            if (slots[i] == 3) init[i] = b * q[m];
        }

        if (k == 4) {
            const BlockSpectrum spectrum = block_spectrum(m - 2, params.R);
            sector.vectors = spectrum.eigenvectors;
            sector.values = spectrum.eigenvalues;
        } else {
            Eigen::MatrixXd block = Eigen::MatrixXd::Zero(k, k);
            const double gamma = m >= 1 ? std::sqrt(m - 1.0) : 0.0;
            const double beta = std::sqrt(static_cast<double>(m));
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    block(i, j) = block(j, i) =
                        slot_coupling(slots[i], slots[j], gamma, beta, params.R);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block);
            if (solver.info() != Eigen::Success) {
                throw NoConvergence("BlockwisePropagator: sector eigensolver failed");
            }
            sector.vectors = solver.eigenvectors();
            sector.values = solver.eigenvalues();
        }
        sector.init_eigenbasis = sector.vectors.transpose() * init;
        sectors_.push_back(std::move(sector));
    }
}

JointState BlockwisePropagator::evolve(double t) const {
    ComplexVector amps = ComplexVector::Zero(4 * (cutoff_ + 1));
    for (const Sector& sector : sectors_) {
        const int k = static_cast<int>(sector.flat_index.size());
        Eigen::VectorXcd rotated(k);
        for (int i = 0; i < k; ++i) {
            rotated[i] = std::polar(1.0, -sector.values[i] * t) * sector.init_eigenbasis[i];
        }
        const Eigen::VectorXcd sector_amps = sector.vectors * rotated;
        for (int i = 0; i < k; ++i) amps[sector.flat_index[i]] = sector_amps[i];
    }
    JointState psi(cutoff_, std::move(amps));
    if (std::abs(psi.norm() - 1.0) > 1e-10) {
        throw NotNormalized("BlockwisePropagator: evolved state lost normalization");
    }
    check_fock_tail(psi);
    return psi;
}

std::vector<BlockCoefficients> block_coefficients(const JointState& psi) {
    std::vector<BlockCoefficients> out;
    out.reserve(std::max(psi.cutoff - 1, 0));
    for (int n = 0; n + 2 <= psi.cutoff; ++n) {
        BlockCoefficients c;
        c.n = n;
        c.amp_ee = psi.amp(0, n);
        c.amp_eg = psi.amp(1, n + 1);
        c.amp_ge = psi.amp(2, n + 1);
        c.amp_gg = psi.amp(3, n + 2);
        out.push_back(c);
    }
    return out;
}

std::vector<BlockCoefficients> BlockwisePropagator::coefficients(double t) const {
    return block_coefficients(evolve(t));
}

BlockwiseEvolution evolve_blockwise(Complex a, Complex b, Complex alpha,
                                    const ModelParams& params, double t, int cutoff) {
    BlockwisePropagator prop(a, b, alpha, params, cutoff);
    JointState psi = prop.evolve(t);
    std::vector<BlockCoefficients> blocks = block_coefficients(psi);
    return BlockwiseEvolution{std::move(psi), std::move(blocks)};
}

}  // namespace qpc
