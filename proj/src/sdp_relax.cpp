#include "lagsdp/sdp_relax.hpp"

#include <stdexcept>

namespace lagsdp {

SdpResult solve_sdp_basic(const GraphInstance& g, int k, const AdmmOptions& opts) {
    if (k < 2) throw std::invalid_argument("solve_sdp_basic: need k >= 2");
    g.validate();
    const int n = g.n;
    const double lo = -1.0 / (k - 1);
    const double scale = (k - 1.0) / (2.0 * k);
    const bool use_box = opts.enforce_box.value_or(k >= 3);
    SymMatrix c = -scale * laplacian(g); // minimization orientation

    // Splitting: X carries the affine/box constraints, Z the PSD cone,
    // scaled dual U; sigma is the penalty.
    Eigen::MatrixXd x = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd z = x, u = Eigen::MatrixXd::Zero(n, n);
    double sigma = opts.penalty;

    SdpResult out;
    double primal = 0.0, dual = 0.0;
    int it = 0;
    for (; it < opts.max_iter; ++it) {
        // X-update: unconstrained minimizer Z - U - C/sigma, clipped to the
        // off-diagonal lower bound, diagonal re-pinned to one.
        x = z - u - c.dense() / sigma;
        if (use_box) x = x.cwiseMax(lo);
        x.diagonal().setOnes();

        Eigen::MatrixXd z_prev = z;
        z = project_psd(SymMatrix::from_dense(x + u)).dense();
        u += x - z;

        primal = (x - z).norm();
        dual = sigma * (z - z_prev).norm();
        if (std::max(primal, dual) <= opts.tol) {
            ++it;
            out.converged = true;
            break;
        }
        // Residual balancing; the scaled dual tracks Y / sigma.
        if (primal > 10.0 * dual) {
            sigma *= 2.0;
            u /= 2.0;
        } else if (dual > 10.0 * primal) {
            sigma /= 2.0;
            u *= 2.0;
        }
    }

    out.iterations = it;
    out.primal_residual = primal;
    out.dual_residual = dual;
    out.x_star = SymMatrix::from_dense(x);
    out.z_sdp = scale * frob_inner(laplacian(g), out.x_star);
    // At convergence sigma U sits in the normal cone of the PSD set at Z, so
    // it is negative semidefinite; the cone multiplier is its negation.
    out.s0 = project_psd(SymMatrix::from_dense(-sigma * u));
    return out;
}

} // namespace lagsdp
