#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qpc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Eigendecomposition of a Hermitian matrix: M = V diag(values) V^dagger,
// eigenvalues ascending, eigenvector columns orthonormal.
struct Eigensystem {
    Eigen::VectorXd values;
    ComplexMatrix vectors;
};

// Entrywise check of M = M^dagger.
bool is_hermitian(const ComplexMatrix& m, double tol = 1e-12);

// Throws NotHermitian if the entrywise symmetry check fails at hermiticity_tol,
// NoConvergence if the underlying solver gives up.
Eigensystem hermitian_eigensystem(const ComplexMatrix& m, double hermiticity_tol = 1e-10);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qpc
