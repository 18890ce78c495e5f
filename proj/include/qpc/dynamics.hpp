#pragma once

#include <vector>

#include "qpc/linalg.hpp"
#include "qpc/states.hpp"

namespace qpc {

// Model parameters in units hbar = lambda1 = 1 (time axis is lambda1*t).
// R = lambda2/lambda1 is the relative coupling of the second qubit.
// At resonance (2*E1 = 2*E2 = omega) the propagators work in the interaction
// picture, where the free field/qubit phases are constant within each
// excitation block and drop out of the reduced dynamics.
struct ModelParams {
    double R = 0.0;
    double E1 = 0.5;     // qubit charging energies, units of lambda1
    double E2 = 0.5;
    double omega = 1.0;  // field frequency, units of lambda1
    bool resonant = true;

    void validate() const;
};

// Coherent-state amplitudes q_n = alpha^n/sqrt(n!) * exp(-|alpha|^2/2) for
// n = 0..cutoff, evaluated in log space. Throws CutoffTooSmall when the
// truncated tail mass 1 - sum |q_n|^2 reaches 1e-12.
ComplexVector coherent_amplitudes(Complex alpha, int cutoff);

// cutoff = ceil(nbar + 10*sqrt(nbar)) + 2, floored at ceil(nbar) + 24 so the
// tail and occupancy guards stay satisfied for small mean photon numbers.
int default_cutoff(double nbar);

// (a|ee> + b|gg>) tensor coherent(alpha); requires |a|^2 + |b|^2 = 1.
JointState initial_joint_state(Complex a, Complex b, Complex alpha, int cutoff);

// H = omega (a^dag a + 1/2) + E1 sigma_z + E2 tau_z
//     + (a sigma1^+ + a^dag sigma1^-) + R (a sigma2^+ + a^dag sigma2^-).
// Conserves N = a^dag a + (sigma_z + tau_z)/2 + 1.
ComplexMatrix build_hamiltonian(const ModelParams& params, int cutoff);

// The coupling terms alone (the resonant interaction-picture Hamiltonian).
ComplexMatrix interaction_hamiltonian(double R, int cutoff);

// Matrix of the excitation-number operator N (diagonal), for conservation checks.
Eigen::VectorXd excitation_numbers(int cutoff);

// Full-space propagator exp(-iHt): the ground-truth path. Diagonalizes H once
// and reuses the eigensystem across a time grid.
class FullPropagator {
public:
    FullPropagator(const ModelParams& params, int cutoff);

    JointState evolve(const JointState& psi0, double t) const;
    std::vector<JointState> evolve_grid(const JointState& psi0,
                                        const std::vector<double>& times) const;

private:
    Eigensystem eig_;
    int cutoff_;
};

// One-shot convenience wrapper around FullPropagator.
JointState evolve_full(const JointState& psi0, const ModelParams& params, double t);

// Resonant 4x4 interaction block over (|ee,n>, |eg,n+1>, |ge,n+1>, |gg,n+2>):
//
//        ee,n   eg,n+1  ge,n+1  gg,n+2
//  ee,n   0     R g_n    g_n     0
//  eg     R g_n  0        0      b_n
//  ge     g_n    0        0      R b_n
//  gg     0      b_n     R b_n   0
//
// with gamma_n = sqrt(n+1), beta_n = sqrt(n+2). Analytic invariants:
//   delta_n     = (1+R^2)(gamma^2 + beta^2)          (= mu + nu)
//   big_delta_n = (1-R^2) beta gamma                 (mu nu = big_delta^2)
//   mu, nu      = (delta +- sqrt(delta^2 - 4 big_delta^2)) / 2
// and the block eigenvalues are {+-sqrt(mu), +-sqrt(nu)}.
struct BlockSpectrum {
    int n = 0;
    double gamma = 0.0;
    double beta = 0.0;
    double delta = 0.0;
    double big_delta = 0.0;
    double mu = 0.0;
    double nu = 0.0;
    Eigen::Vector4d eigenvalues;   // ascending
    Eigen::Matrix4d eigenvectors;  // orthonormal columns
};

Eigen::Matrix4d block_matrix(int n, double R);
BlockSpectrum block_spectrum(int n, double R);

// Amplitudes of block n at a given time, coherent-state weights included:
// at t = 0, amp_ee = a q_n, amp_gg = b q_{n+2}, amp_eg = amp_ge = 0.
struct BlockCoefficients {
    int n = 0;
    Complex amp_ee;  // on |ee, n>
    Complex amp_eg;  // on |eg, n+1>
    Complex amp_ge;  // on |ge, n+1>
    Complex amp_gg;  // on |gg, n+2>
};

// Blockwise propagator: evolves each invariant excitation sector by its own
// small diagonalization. Interior sectors are the canonical 4x4 blocks above;
// the sectors at the bottom (|gg,0> alone; the 3-state {|eg,0>,|ge,0>,|gg,1>}
// block) and at the truncated top are the same stencil restricted to the
// states that exist, which keeps this path identical to the truncated
// full-space evolution.
class BlockwisePropagator {
public:
    BlockwisePropagator(Complex a, Complex b, Complex alpha, const ModelParams& params,
                        int cutoff);

    JointState evolve(double t) const;
    std::vector<BlockCoefficients> coefficients(double t) const;

    int cutoff() const { return cutoff_; }

private:
    struct Sector {
        std::vector<int> flat_index;       // positions in the JointState vector
        Eigen::MatrixXd vectors;           // block eigenvectors (real symmetric block)
        Eigen::VectorXd values;            // block eigenvalues
        Eigen::VectorXcd init_eigenbasis;  // eigenbasis image of the initial amplitudes
    };
    std::vector<Sector> sectors_;
    int cutoff_;
};

// Reads the per-block amplitudes (A_n, B_n, C_n, D_n pattern) off a state.
std::vector<BlockCoefficients> block_coefficients(const JointState& psi);

struct BlockwiseEvolution {
    JointState state;
    std::vector<BlockCoefficients> blocks;
};

// Requires params.resonant; throws NotResonant otherwise.
BlockwiseEvolution evolve_blockwise(Complex a, Complex b, Complex alpha,
                                    const ModelParams& params, double t, int cutoff);

}  // namespace qpc
