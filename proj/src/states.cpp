#include "qpc/states.hpp"

#include <cmath>

#include "qpc/errors.hpp"

namespace qpc {

namespace {

// Shared eigenvalue-based entropy; matrices here are tiny (2x2 / 4x4).
double entropy_bits(const ComplexMatrix& m) {
    const Eigensystem eig = hermitian_eigensystem(m);
    double s = 0.0;
    for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
        const double p = eig.values[k];
        if (p < 1e-12) continue;  // 0 log 0 -> 0, below the propagators' noise floor
        s -= p * std::log2(p);
    }
    return s;
}

void check_density_invariants(const ComplexMatrix& m, double herm_tol, double trace_tol,
                              double psd_floor, const char* what) {
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > herm_tol) {
        throw NotHermitian(std::string(what) + ": density matrix is not Hermitian");
    }
    if (std::abs(m.trace().real() - 1.0) > trace_tol || std::abs(m.trace().imag()) > trace_tol) {
        throw NotNormalized(std::string(what) + ": trace differs from 1 beyond tolerance");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    if (solver.eigenvalues().minCoeff() < psd_floor) {
        throw Error(std::string(what) + ": negative eigenvalue beyond tolerance");
    }
}

}  // namespace

JointState::JointState(int cutoff_, ComplexVector amps) : cutoff(cutoff_), amplitudes(std::move(amps)) {
    if (cutoff < 0 || amplitudes.size() != 4 * (cutoff + 1)) {
        throw DimensionMismatch("JointState: amplitude vector length must be 4*(cutoff+1)");
    }
}

double fock_occupancy(const JointState& psi, int n) {
    double occ = 0.0;
    for (int pair = 0; pair < 4; ++pair) occ += std::norm(psi.amp(pair, n));
    return occ;
}

void check_fock_tail(const JointState& psi, double tol, int levels) {
    double occ = 0.0;
    for (int n = std::max(0, psi.cutoff - levels + 1); n <= psi.cutoff; ++n) {
        occ += fock_occupancy(psi, n);
    }
    if (occ >= tol) {
        throw CutoffTooSmall("Fock occupancy " + std::to_string(occ) + " in the top " +
                             std::to_string(levels) + " levels; raise the cutoff");
    }
}

QubitPairDensity::QubitPairDensity(const Eigen::Matrix4cd& m) : m_(m) {
    check_density_invariants(m_, 1e-10, 1e-10, -1e-9, "QubitPairDensity");
}

SingleQubitDensity::SingleQubitDensity(const Eigen::Matrix2cd& m) : m_(m) {
    check_density_invariants(m_, 1e-10, 1e-10, -1e-9, "SingleQubitDensity");
}

QubitPairDensity partial_trace_field(const JointState& psi) {
    if (std::abs(psi.norm() - 1.0) > 1e-10) {
        throw NotNormalized("partial_trace_field: state norm differs from 1");
    }
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    const int width = psi.cutoff + 1;
    for (int p = 0; p < 4; ++p) {
        for (int q = 0; q < 4; ++q) {
            Complex acc(0.0, 0.0);
            const Complex* row = psi.amplitudes.data() + p * width;
            const Complex* col = psi.amplitudes.data() + q * width;
            for (int n = 0; n < width; ++n) acc += row[n] * std::conj(col[n]);
            rho(p, q) = acc;
        }
    }
    return QubitPairDensity(rho);
}

SingleQubitDensity partial_trace_qubit(const QubitPairDensity& rho, Qubit traced) {
    const Eigen::Matrix4cd& m = rho.matrix();
    Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
    if (traced == Qubit::First) {
        // keep qubit 2: sum over q1 of <q1 q2| rho |q1 q2'>
        for (int q2 = 0; q2 < 2; ++q2)
            for (int q2p = 0; q2p < 2; ++q2p)
                out(q2, q2p) = m(0 * 2 + q2, 0 * 2 + q2p) + m(1 * 2 + q2, 1 * 2 + q2p);
    } else {
        for (int q1 = 0; q1 < 2; ++q1)
            for (int q1p = 0; q1p < 2; ++q1p)
                out(q1, q1p) = m(q1 * 2 + 0, q1p * 2 + 0) + m(q1 * 2 + 1, q1p * 2 + 1);
    }
    return SingleQubitDensity(out);
}

double von_neumann_entropy(const QubitPairDensity& rho) { return entropy_bits(rho.matrix()); }

double von_neumann_entropy(const SingleQubitDensity& rho) { return entropy_bits(rho.matrix()); }

double purity(const QubitPairDensity& rho) {
    return (rho.matrix() * rho.matrix()).trace().real();
}

}  // namespace qpc
