#pragma once

#include <array>

#include "qpc/states.hpp"

namespace qpc {

// Pauli matrices in the (|e>, |g>) basis, index order (x, y, z).
const std::array<Eigen::Matrix2cd, 3>& pauli_matrices();

// rho_c = 1/4 (1 + s.sigma x 1 + 1 x t.tau + sum_ij C_ij sigma_i x tau_j)
struct BlochDecomposition {
    Eigen::Vector3d s;      // first qubit Bloch vector
    Eigen::Vector3d t;      // second qubit Bloch vector
    Eigen::Matrix3d cross;  // C_ij = <sigma_i x tau_j>
};

// s_i = tr(rho sigma_i x 1), t_j = tr(rho 1 x tau_j), C_ij = tr(rho sigma_i x tau_j).
BlochDecomposition bloch_decomposition(const QubitPairDensity& rho);

// Rebuilds the density matrix from a decomposition (round-trip check).
Eigen::Matrix4cd reconstruct_density(const BlochDecomposition& d);

// E = C - s t^T; vanishes exactly for product states.
struct EntangledDyadic {
    Eigen::Matrix3d e;
};

EntangledDyadic entangled_dyadic(const BlochDecomposition& d);

// DoE = tr(E^T E) = sum_ij E_ij^2. Unnormalized: 3 for Bell states.
double degree_of_entanglement(const EntangledDyadic& e);

// Dense-coding capacity in bits, Alice sending the first qubit:
// C = 1 + S(rho_B) - S(rho_AB) with rho_B = tr_A(rho_AB).
double channel_capacity(const QubitPairDensity& rho);

}  // namespace qpc
