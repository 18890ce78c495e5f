#pragma once

#include "qpc/linalg.hpp"

namespace qpc {

// Joint wavefunction of (qubit1 x qubit2 x field) with the field truncated at
// Fock index `cutoff`. Amplitude layout: index = pair * (cutoff+1) + n, where
// pair = q1*2 + q2 with q = 0 for |e> and q = 1 for |g>:
//   pair 0 = |ee>, 1 = |eg>, 2 = |ge>, 3 = |gg>.
struct JointState {
    JointState(int cutoff, ComplexVector amps);

    int cutoff;
    ComplexVector amplitudes;

    int dim() const { return 4 * (cutoff + 1); }
    double norm() const { return amplitudes.norm(); }

    static int index(int pair, int n, int cutoff) { return pair * (cutoff + 1) + n; }
    Complex amp(int pair, int n) const { return amplitudes[index(pair, n, cutoff)]; }
};

// Per-Fock-level occupancy summed over the four qubit-pair components.
double fock_occupancy(const JointState& psi, int n);

// Cutoff-sufficiency guard: total occupancy of the top `levels` Fock levels
// must stay below `tol`. Applied to pipeline states (initial state and
// propagator output), not to arbitrary test vectors.
void check_fock_tail(const JointState& psi, double tol = 1e-8, int levels = 5);

enum class Qubit { First, Second };

// Reduced two-qubit state rho_c in the (|ee>,|eg>,|ge>,|gg>) basis.
// Construction validates: Hermitian (1e-10), unit trace (1e-10),
// eigenvalues >= -1e-9.
class QubitPairDensity {
public:
    explicit QubitPairDensity(const Eigen::Matrix4cd& m);
    const Eigen::Matrix4cd& matrix() const { return m_; }

private:
    Eigen::Matrix4cd m_;
};

// Single-qubit reduced state in the (|e>,|g>) basis.
class SingleQubitDensity {
public:
    explicit SingleQubitDensity(const Eigen::Matrix2cd& m);
    const Eigen::Matrix2cd& matrix() const { return m_; }

private:
    Eigen::Matrix2cd m_;
};

// Trace out the field: (rho_c)_{pp'} = sum_n psi[p,n] conj(psi[p',n]).
QubitPairDensity partial_trace_field(const JointState& psi);

// Trace out the named qubit, keeping the other one.
SingleQubitDensity partial_trace_qubit(const QubitPairDensity& rho, Qubit traced);

// Von Neumann entropy in bits; eigenvalues below 1e-12 contribute zero.
double von_neumann_entropy(const QubitPairDensity& rho);
double von_neumann_entropy(const SingleQubitDensity& rho);

double purity(const QubitPairDensity& rho);

}  // namespace qpc
