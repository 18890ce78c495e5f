#include "qpc/linalg.hpp"

#include "qpc/errors.hpp"

namespace qpc {

bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Eigensystem hermitian_eigensystem(const ComplexMatrix& m, double hermiticity_tol) {
    if (m.rows() != m.cols()) {
        throw NotHermitian("hermitian_eigensystem: matrix is not square (" +
                           std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")");
    }
    if (!is_hermitian(m, hermiticity_tol)) {
        throw NotHermitian("hermitian_eigensystem: matrix fails M = M^dagger within " +
                           std::to_string(hermiticity_tol));
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw NoConvergence("hermitian_eigensystem: eigensolver did not converge");
    }
    return Eigensystem{solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

}  // namespace qpc
