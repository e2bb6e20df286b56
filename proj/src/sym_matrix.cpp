#include "lagsdp/sym_matrix.hpp"

#include <cmath>

namespace lagsdp {

SymMatrix SymMatrix::identity(int n) {
    SymMatrix m(n);
    m.data_ = Eigen::MatrixXd::Identity(n, n);
    return m;
}

SymMatrix SymMatrix::ones(int n) {
    SymMatrix m(n);
    m.data_ = Eigen::MatrixXd::Ones(n, n);
    return m;
}

SymMatrix SymMatrix::from_dense(const Eigen::MatrixXd& a) {
    if (a.rows() != a.cols() || a.rows() < 1)
        throw std::invalid_argument("SymMatrix::from_dense: matrix must be square");
    SymMatrix m(static_cast<int>(a.rows()));
    m.data_ = 0.5 * (a + a.transpose());
    return m;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& o) {
    if (o.n_ != n_) throw std::invalid_argument("SymMatrix: dimension mismatch");
    data_ += o.data_;
    return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& o) {
    if (o.n_ != n_) throw std::invalid_argument("SymMatrix: dimension mismatch");
    data_ -= o.data_;
    return *this;
}

double frob_inner(const SymMatrix& a, const SymMatrix& b) {
    if (a.n() != b.n()) throw std::invalid_argument("frob_inner: dimension mismatch");
    return a.dense().cwiseProduct(b.dense()).sum();
}

double frob_norm(const SymMatrix& a) { return a.dense().norm(); }

SpectralDecomposition eigh(const SymMatrix& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a.dense());
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigh: eigendecomposition did not converge");
    return SpectralDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

SymMatrix project_psd(const SymMatrix& a) {
    SpectralDecomposition d = eigh(a);
    Eigen::VectorXd clipped = d.eigenvalues.cwiseMax(0.0);
    Eigen::MatrixXd z =
        d.eigenvectors * clipped.asDiagonal() * d.eigenvectors.transpose();
    return SymMatrix::from_dense(z);
}

double min_eigenvalue(const SymMatrix& a) {
    return eigh(a).eigenvalues.minCoeff();
}

} // namespace lagsdp
