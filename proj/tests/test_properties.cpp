// Property suite: randomized invariants for the decomposition, entropy,
// partial traces and the two propagators. Kept self-contained so it can run
// standalone; the whole binary is budgeted at well under 30 seconds.

#include <cmath>

#include "doctest.h"

#include "qpc/dynamics.hpp"
#include "qpc/observables.hpp"
#include "qpc/states.hpp"
#include "test_helpers.hpp"

using namespace qpc;

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

TEST_CASE("random densities round-trip through the Bloch decomposition") {
    for (int trial = 0; trial < 60; ++trial) {
        const Eigen::Matrix4cd m = testing::random_density(4);
        const QubitPairDensity rho{m};
        const BlochDecomposition d = bloch_decomposition(rho);
        CHECK(d.s.norm() <= 1.0 + 1e-9);
        CHECK(d.t.norm() <= 1.0 + 1e-9);
        CHECK((reconstruct_density(d) - m).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("DoE is invariant under local rotations") {
    for (int trial = 0; trial < 60; ++trial) {
        const QubitPairDensity rho{testing::random_density(4)};
        BlochDecomposition d = bloch_decomposition(rho);
        const double doe = degree_of_entanglement(entangled_dyadic(d));

        const Eigen::Matrix3d rot_a = testing::random_rotation();
        const Eigen::Matrix3d rot_b = testing::random_rotation();
        BlochDecomposition rotated;
        rotated.s = rot_a * d.s;
        rotated.t = rot_b * d.t;
        rotated.cross = rot_a * d.cross * rot_b.transpose();
        CHECK(degree_of_entanglement(entangled_dyadic(rotated)) ==
              doctest::Approx(doe).epsilon(1e-10));
    }
}

TEST_CASE("DoE vanishes on random pure product states and is never negative") {
    for (int trial = 0; trial < 60; ++trial) {
        const Eigen::Vector2cd chi1 = testing::random_qubit_state();
        const Eigen::Vector2cd chi2 = testing::random_qubit_state();
        Eigen::Vector4cd psi;
        psi << chi1[0] * chi2[0], chi1[0] * chi2[1], chi1[1] * chi2[0], chi1[1] * chi2[1];
        const QubitPairDensity rho{psi * psi.adjoint()};
        const double doe = degree_of_entanglement(entangled_dyadic(bloch_decomposition(rho)));
        CHECK(doe >= 0.0);
        CHECK(doe < 1e-10);
    }
    for (int trial = 0; trial < 30; ++trial) {
        const QubitPairDensity rho{testing::random_density(4)};
        CHECK(degree_of_entanglement(entangled_dyadic(bloch_decomposition(rho))) >= 0.0);
    }
}

TEST_CASE("entropy is unitarily invariant and bounded") {
    for (int trial = 0; trial < 40; ++trial) {
        const Eigen::Matrix4cd m = testing::random_density(4);
        const ComplexMatrix u = testing::random_unitary(4);
        REQUIRE((u.adjoint() * u - ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
        const double s0 = von_neumann_entropy(QubitPairDensity{m});
        const double s1 = von_neumann_entropy(QubitPairDensity{Eigen::Matrix4cd(u * m * u.adjoint())});
        CHECK(s1 == doctest::Approx(s0).epsilon(1e-10));
        CHECK(s0 >= 0.0);
        CHECK(s0 <= 2.0 + 1e-10);
    }
    for (int trial = 0; trial < 40; ++trial) {
        const double s = von_neumann_entropy(SingleQubitDensity{testing::random_density(2)});
        CHECK(s >= 0.0);
        CHECK(s <= 1.0 + 1e-10);
    }
}

TEST_CASE("partial traces agree with brute-force index summation") {
    for (int cutoff = 0; cutoff <= 8; ++cutoff) {
        for (int trial = 0; trial < 6; ++trial) {
            const JointState psi = testing::random_joint_state(cutoff);
            const QubitPairDensity rho = partial_trace_field(psi);
            CHECK((rho.matrix() - testing::brute_force_pair_density(psi)).cwiseAbs().maxCoeff() <
                  1e-12);
            const SingleQubitDensity rho1 = partial_trace_qubit(rho, Qubit::Second);
            const SingleQubitDensity rho2 = partial_trace_qubit(rho, Qubit::First);
            CHECK((rho1.matrix() - testing::brute_force_qubit_density(psi, Qubit::First))
                      .cwiseAbs()
                      .maxCoeff() < 1e-12);
            CHECK((rho2.matrix() - testing::brute_force_qubit_density(psi, Qubit::Second))
                      .cwiseAbs()
                      .maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("capacity is within [0, 2]; pure states give 1 + S(rho_B)") {
    for (int trial = 0; trial < 40; ++trial) {
        const QubitPairDensity rho{testing::random_density(4)};
        const double c = channel_capacity(rho);
        CHECK(c >= -1e-10);
        CHECK(c <= 2.0 + 1e-10);
    }
    for (int trial = 0; trial < 40; ++trial) {
        ComplexVector psi(4);
        for (int i = 0; i < 4; ++i) psi[i] = testing::random_complex();
        psi /= psi.norm();
        const Eigen::Matrix4cd m = (psi * psi.adjoint()).eval();
        const QubitPairDensity rho{m};
        const double expected =
            1.0 + von_neumann_entropy(partial_trace_qubit(rho, Qubit::First));
        CHECK(channel_capacity(rho) == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("block eigenvalues match +-sqrt(mu), +-sqrt(nu) up to n = 100") {
    for (const double r : {0.0, 0.003, 0.5, 0.9, 1.0}) {
        for (int n = 0; n <= 100; ++n) {
            const BlockSpectrum s = block_spectrum(n, r);
            const Eigen::Vector4d expected(-std::sqrt(s.mu), -std::sqrt(s.nu), std::sqrt(s.nu),
                                           std::sqrt(s.mu));
            CHECK((s.eigenvalues - expected).cwiseAbs().maxCoeff() < 1e-9);
            CHECK(s.delta ==
                  doctest::Approx((1 + r * r) * (s.gamma * s.gamma + s.beta * s.beta))
                      .epsilon(1e-12));
            CHECK(s.mu + s.nu == doctest::Approx(s.delta).epsilon(1e-10));
        }
    }
}

TEST_CASE("norm and excitation number are conserved by both propagators") {
    ModelParams params;
    params.R = 0.6;
    const int cutoff = default_cutoff(4.0);
    const Complex a(0.6, 0.0), b(0.0, 0.8);
    const JointState psi0 = initial_joint_state(a, b, 2.0, cutoff);
    const FullPropagator full(params, cutoff);
    const BlockwisePropagator block(a, b, 2.0, params, cutoff);
    const Eigen::VectorXd n_op = excitation_numbers(cutoff);

    auto expectation_n = [&](const JointState& psi) {
        double acc = 0.0;
        for (int i = 0; i < psi.dim(); ++i) acc += n_op[i] * std::norm(psi.amplitudes[i]);
        return acc;
    };
    const double n0 = expectation_n(psi0);

    for (double t = 0.0; t <= 12.0; t += 1.5) {
        for (const JointState& psi : {full.evolve(psi0, t), block.evolve(t)}) {
            CHECK(std::abs(psi.norm() - 1.0) < 1e-10);
            CHECK(std::abs(expectation_n(psi) - n0) < 1e-9);
        }
    }
}

TEST_CASE("swap symmetry at R = 1 with a = b") {
    ModelParams params;
    params.R = 1.0;
    const int cutoff = default_cutoff(5.0);
    const BlockwisePropagator prop(kInvSqrt2, kInvSqrt2, std::sqrt(5.0), params, cutoff);
    for (double t = 0.0; t <= 10.0; t += 0.5) {
        const QubitPairDensity rho = partial_trace_field(prop.evolve(t));
        const SingleQubitDensity first = partial_trace_qubit(rho, Qubit::Second);
        const SingleQubitDensity second = partial_trace_qubit(rho, Qubit::First);
        CHECK(testing::trace_distance(first.matrix(), second.matrix()) < 1e-9);
        const BlochDecomposition d = bloch_decomposition(rho);
        CHECK((d.s - d.t).norm() < 1e-9);
    }
}

TEST_CASE("zero coupling leaves the second qubit stationary") {
    ModelParams params;
    params.R = 0.0;
    const int cutoff = default_cutoff(5.0);
    for (const auto& [a, b] : {std::pair<Complex, Complex>{1.0, 0.0},
                               std::pair<Complex, Complex>{kInvSqrt2, kInvSqrt2}}) {
        const BlockwisePropagator prop(a, b, std::sqrt(5.0), params, cutoff);
        const Eigen::Matrix2cd initial =
            partial_trace_qubit(partial_trace_field(prop.evolve(0.0)), Qubit::First).matrix();
        for (double t = 0.0; t <= 10.0; t += 1.0) {
            const Eigen::Matrix2cd now =
                partial_trace_qubit(partial_trace_field(prop.evolve(t)), Qubit::First).matrix();
            CHECK(testing::trace_distance(initial, now) < 1e-9);
        }
    }
}
