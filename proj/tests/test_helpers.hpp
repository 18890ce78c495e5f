#pragma once

#include <complex>
#include <random>

#include <Eigen/Dense>

#include "qpc/linalg.hpp"
#include "qpc/states.hpp"

namespace qpc::testing {

inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed1234);
    return gen;
}

inline Complex random_complex() {
    std::normal_distribution<double> dist(0.0, 1.0);
    return {dist(rng()), dist(rng())};
}

inline ComplexMatrix random_complex_matrix(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = random_complex();
    return m;
}

inline ComplexMatrix random_hermitian(int n) {
    const ComplexMatrix g = random_complex_matrix(n);
    return 0.5 * (g + g.adjoint());
}

// Full-rank random density matrix (Wishart construction).
inline ComplexMatrix random_density(int n) {
    const ComplexMatrix g = random_complex_matrix(n);
    ComplexMatrix rho = g * g.adjoint();
    return rho / rho.trace().real();
}

inline ComplexMatrix random_unitary(int n) {
    const Eigen::HouseholderQR<ComplexMatrix> qr(random_complex_matrix(n));
    ComplexMatrix q = qr.householderQ();
    return q;
}

// Random proper rotation from the QR sign-fixed orthogonal factor.
inline Eigen::Matrix3d random_rotation() {
    Eigen::Matrix3d g;
    std::normal_distribution<double> dist(0.0, 1.0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g(i, j) = dist(rng());
    const Eigen::HouseholderQR<Eigen::Matrix3d> qr(g);
    Eigen::Matrix3d q = qr.householderQ();
    if (q.determinant() < 0) q.col(0) *= -1.0;
    return q;
}

// Random single-qubit pure state (uniform on the Bloch sphere).
inline Eigen::Vector2cd random_qubit_state() {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double theta = std::acos(1.0 - 2.0 * uni(rng()));
    const double phi = 2.0 * M_PI * uni(rng());
    Eigen::Vector2cd v;
    v << std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi);
    return v;
}

inline JointState random_joint_state(int cutoff) {
    ComplexVector amps(4 * (cutoff + 1));
    for (Eigen::Index i = 0; i < amps.size(); ++i) amps[i] = random_complex();
    amps /= amps.norm();
    return JointState(cutoff, amps);
}

inline double trace_distance(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(a - b);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

// Brute-force reduced two-qubit state, summed directly over the Fock index.
inline Eigen::Matrix4cd brute_force_pair_density(const JointState& psi) {
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
            for (int n = 0; n <= psi.cutoff; ++n)
                rho(p, q) += psi.amp(p, n) * std::conj(psi.amp(q, n));
    return rho;
}

// Brute-force single-qubit state, tracing (other qubit x field) by index sums.
inline Eigen::Matrix2cd brute_force_qubit_density(const JointState& psi, Qubit kept) {
    Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
    for (int q = 0; q < 2; ++q) {
        for (int qp = 0; qp < 2; ++qp) {
            Complex acc(0.0, 0.0);
            for (int other = 0; other < 2; ++other) {
                for (int n = 0; n <= psi.cutoff; ++n) {
                    const int pair_row = kept == Qubit::First ? q * 2 + other : other * 2 + q;
                    const int pair_col = kept == Qubit::First ? qp * 2 + other : other * 2 + qp;
                    acc += psi.amp(pair_row, n) * std::conj(psi.amp(pair_col, n));
                }
            }
            rho(q, qp) = acc;
        }
    }
    return rho;
}

}  // namespace qpc::testing
