#include "doctest.h"

#include "qpc/dynamics.hpp"
#include "qpc/errors.hpp"
#include "qpc/linalg.hpp"
#include "test_helpers.hpp"

using namespace qpc;

TEST_CASE("identity eigensystem") {
    const Eigensystem eig = hermitian_eigensystem(ComplexMatrix::Identity(2, 2));
    CHECK(eig.values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eig.values[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((eig.vectors.adjoint() * eig.vectors - ComplexMatrix::Identity(2, 2))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
}

TEST_CASE("diagonal matrix eigenvalues come back ascending") {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 5.0;
    m(1, 1) = -3.0;
    const Eigensystem eig = hermitian_eigensystem(m);
    CHECK(eig.values[0] == doctest::Approx(-3.0).epsilon(1e-14));
    CHECK(eig.values[1] == doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("dark-mode block at n=0, R=1 has eigenvalues {-sqrt(6), 0, 0, sqrt(6)}") {
    // determinant (1-R^2)^2 beta^2 gamma^2 vanishes at R=1, delta_0 = 2*(1+2) = 6
    const ComplexMatrix block = block_matrix(0, 1.0).cast<Complex>();
    const Eigensystem eig = hermitian_eigensystem(block);
    const double root = std::sqrt(6.0);
    CHECK(eig.values[0] == doctest::Approx(-root).epsilon(1e-12));
    CHECK(std::abs(eig.values[1]) < 1e-9);
    CHECK(std::abs(eig.values[2]) < 1e-9);
    CHECK(eig.values[3] == doctest::Approx(root).epsilon(1e-12));
}

TEST_CASE("non-Hermitian input is rejected") {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = Complex(0.0, 1.0);
    m(1, 0) = Complex(0.0, 1.0);  // would need -i to be Hermitian
    CHECK_THROWS_AS(hermitian_eigensystem(m), NotHermitian);
    CHECK_THROWS_AS(hermitian_eigensystem(ComplexMatrix::Zero(2, 3)), NotHermitian);
}

TEST_CASE("reconstruction V diag(lambda) V^dagger recovers the input") {
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 7;
        const ComplexMatrix m = testing::random_hermitian(n);
        const Eigensystem eig = hermitian_eigensystem(m);
        const ComplexMatrix rebuilt =
            eig.vectors * eig.values.asDiagonal() * eig.vectors.adjoint();
        const double scale = std::max(m.norm(), 1.0);
        CHECK((rebuilt - m).norm() < 1e-9 * scale);
        CHECK((eig.vectors.adjoint() * eig.vectors - ComplexMatrix::Identity(n, n))
                  .cwiseAbs()
                  .maxCoeff() < 1e-10);
    }
}

TEST_CASE("kron matches the block definition") {
    const ComplexMatrix a = testing::random_complex_matrix(2);
    const ComplexMatrix b = testing::random_complex_matrix(3);
    const ComplexMatrix k = kron(a, b);
    REQUIRE(k.rows() == 6);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK((k.block(i * 3, j * 3, 3, 3) - a(i, j) * b).cwiseAbs().maxCoeff() < 1e-14);
}
