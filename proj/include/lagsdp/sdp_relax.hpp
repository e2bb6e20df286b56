#pragma once

#include <optional>

#include "lagsdp/graph.hpp"
#include "lagsdp/sym_matrix.hpp"

namespace lagsdp {

// ADMM solve of the continuous max-k-cut relaxation
//   max (k-1)/(2k) <L, X>  s.t.  diag(X) = 1, X >= -1/(k-1) offdiag, X psd.
struct SdpResult {
    SymMatrix x_star;     // affine/box-feasible iterate, diag pinned to 1
    SymMatrix s0;         // PSD-projected multiplier of the conic constraint
    double z_sdp = 0.0;   // attained objective, maximization orientation
    int iterations = 0;
    bool converged = false;
    double primal_residual = 0.0; // carried as the bound's error bar
    double dual_residual = 0.0;
};

struct AdmmOptions {
    double tol = 1e-6;
    int max_iter = 20000;
    double penalty = 1.0; // initial sigma; adapted by residual balancing
    // The k = 2 box is redundant at the optimum and, when enforced, can
    // absorb dual weight that belongs on the cone; unset means "k >= 3 only".
    std::optional<bool> enforce_box;
};

SdpResult solve_sdp_basic(const GraphInstance& g, int k, const AdmmOptions& opts = {});

} // namespace lagsdp
