#pragma once

#include <Eigen/Dense>

#include <stdexcept>

namespace lagsdp {

// Dense real symmetric matrix. Symmetry is enforced on every mutation path:
// set(i,j,v) writes both triangles and from_dense() symmetrizes its input.
class SymMatrix {
public:
    SymMatrix() : n_(0) {}
    explicit SymMatrix(int n) : n_(n), data_(Eigen::MatrixXd::Zero(n, n)) {
        if (n < 1) throw std::invalid_argument("SymMatrix: dimension must be >= 1");
    }

    static SymMatrix identity(int n);
    static SymMatrix ones(int n);
    // Symmetrizes as (A + A^T)/2.
    static SymMatrix from_dense(const Eigen::MatrixXd& a);

    int n() const { return n_; }
    double operator()(int i, int j) const { return data_(i, j); }
    void set(int i, int j, double v) {
        data_(i, j) = v;
        data_(j, i) = v;
    }
    void add(int i, int j, double v) {
        data_(i, j) += v;
        if (i != j) data_(j, i) += v;
    }

    const Eigen::MatrixXd& dense() const { return data_; }

    SymMatrix& operator+=(const SymMatrix& o);
    SymMatrix& operator-=(const SymMatrix& o);
    SymMatrix& operator*=(double t) {
        data_ *= t;
        return *this;
    }

    friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
    friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
    friend SymMatrix operator*(double t, SymMatrix a) { return a *= t; }

private:
    int n_;
    Eigen::MatrixXd data_;
};

struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;  // nondecreasing
    Eigen::MatrixXd eigenvectors; // orthonormal columns
};

// <A, B> = sum_ij A_ij B_ij. Throws on dimension mismatch.
double frob_inner(const SymMatrix& a, const SymMatrix& b);

double frob_norm(const SymMatrix& a);

// Throws std::runtime_error if the underlying iteration fails to converge.
SpectralDecomposition eigh(const SymMatrix& a);

// Frobenius-nearest PSD matrix: V max(Lambda, 0) V^T. Negative eigenvalues
// are clipped at exactly zero, no positive floor.
SymMatrix project_psd(const SymMatrix& a);

double min_eigenvalue(const SymMatrix& a);

} // namespace lagsdp
