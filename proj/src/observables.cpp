#include "qpc/observables.hpp"

#include "qpc/errors.hpp"

namespace qpc {

namespace {

// tr(rho * (A x B)) for 2x2 A, B without forming the Kronecker product.
Complex pair_expectation(const Eigen::Matrix4cd& rho, const Eigen::Matrix2cd& a,
                         const Eigen::Matrix2cd& b) {
    Complex acc(0.0, 0.0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    acc += rho(i * 2 + j, k * 2 + l) * a(k, i) * b(l, j);
    return acc;
}

double real_expectation(const Eigen::Matrix4cd& rho, const Eigen::Matrix2cd& a,
                        const Eigen::Matrix2cd& b) {
    const Complex v = pair_expectation(rho, a, b);
    if (std::abs(v.imag()) > 1e-10) {
        throw Error("bloch_decomposition: imaginary residue above tolerance");
    }
    return v.real();
}

}  // namespace

const std::array<Eigen::Matrix2cd, 3>& pauli_matrices() {
    static const std::array<Eigen::Matrix2cd, 3> paulis = [] {
        std::array<Eigen::Matrix2cd, 3> p;
        p[0] << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
        p[1] << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
        p[2] << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
        return p;
    }();
    return paulis;
}

BlochDecomposition bloch_decomposition(const QubitPairDensity& rho) {
    const Eigen::Matrix4cd& m = rho.matrix();
    const auto& sigma = pauli_matrices();
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();

    BlochDecomposition d;
    for (int i = 0; i < 3; ++i) {
        d.s[i] = real_expectation(m, sigma[i], id);
        d.t[i] = real_expectation(m, id, sigma[i]);
        for (int j = 0; j < 3; ++j) d.cross(i, j) = real_expectation(m, sigma[i], sigma[j]);
    }
    return d;
}

Eigen::Matrix4cd reconstruct_density(const BlochDecomposition& d) {
    const auto& sigma = pauli_matrices();
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    auto kron2 = [](const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
        Eigen::Matrix4cd out;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) out.block<2, 2>(i * 2, j * 2) = a(i, j) * b;
        return out;
    };

    Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
    for (int i = 0; i < 3; ++i) {
        m += d.s[i] * kron2(sigma[i], id);
        m += d.t[i] * kron2(id, sigma[i]);
        for (int j = 0; j < 3; ++j) m += d.cross(i, j) * kron2(sigma[i], sigma[j]);
    }
    return 0.25 * m;
}

EntangledDyadic entangled_dyadic(const BlochDecomposition& d) {
    return EntangledDyadic{d.cross - d.s * d.t.transpose()};
}

double degree_of_entanglement(const EntangledDyadic& e) { return e.e.squaredNorm(); }

double channel_capacity(const QubitPairDensity& rho) {
    const SingleQubitDensity rho_b = partial_trace_qubit(rho, Qubit::First);
    return 1.0 + von_neumann_entropy(rho_b) - von_neumann_entropy(rho);
}

}  // namespace qpc
