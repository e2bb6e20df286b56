#pragma once

#include <Eigen/Dense>

#include <iosfwd>
#include <string>
#include <vector>

#include "lagsdp/isdp.hpp"

namespace lagsdp {

struct SolverConfig {
    int max_iter = 5000;
    double eps_s = 0.01;        // stop when ||S^l - S^{l-1}||_F below this
    double eps_lambda = 0.01;   // and ||lambda^l - lambda^{l-1}|| below this
    int n_stag = 100;           // stop after this many non-improving iterations
    int n_step = 40;            // Held-Karp window: halve mu after this many
    double mu0 = 1.0;           // initial Polyak stepsize factor, in (0, 2]
    double upper_bound = 0.0;   // U*: upper bound on the dual optimum (min orientation)
    double kappa = 0.1;         // bundle proximity init scale
    double rho = 0.5;           // serious-step fraction, in (0, 1)
    double inner_tol = 1e-4;    // bundle inner alternation: ||sigma change|| threshold
    int inner_max = 20;         // bundle inner alternation cap
    double bundle_gap_tol = 1e-3;
    double t_init = 0.0;        // bundle proximity parameter; <= 0 means 1.0
    bool asg_eta_offset = false; // shift the momentum index by one (experimentation toggle)

    void validate() const;
};

struct TraceRecord {
    int iter;
    double g;         // dual value at this iteration's bound point
    double best;      // running best bound
    double step_norm; // ||S change||_F produced this iteration
    char flag;        // bundle: 'S' serious / 'N' null; otherwise '-'
};

struct SolverTrace {
    std::vector<TraceRecord> records;
    DualPoint best_dual;
    double best_value = 0.0; // max over recorded dual-feasible g values
    int iterations = 0;
    std::string stop_reason;
};

void write_trace(std::ostream& os, const SolverTrace& trace);

// Projected-deflected subgradient ascent on g. Directions bisect the angle
// between the current subgradient and the previous direction
// (D^l = Gamma^l + (||Gamma^l||/||D^{l-1}||) D^{l-1}, D^0 = Gamma^0), steps
// follow Polyak's rule with Held-Karp halving of mu.
SolverTrace solve_dsg(const ISDPInstance& inst, const DualPoint& start, const SolverConfig& cfg);

// Projected-accelerated (Nesterov two-step) subgradient ascent. The oracle
// drives the updates at the look-ahead point Y^l; valid bounds are recorded
// at the PSD-projected S-iterates only.
SolverTrace solve_asg(const ISDPInstance& inst, const DualPoint& start, const SolverConfig& cfg);

// Projected proximal bundle method. The regularized model maximization is
// solved through its dual by alternating a simplex-constrained QP in sigma
// with a PSD projection in Q.
SolverTrace solve_bundle(const ISDPInstance& inst, const DualPoint& start, const SolverConfig& cfg);

// eta_0 = 0, eta_{l+1} = (1 + sqrt(1 + 4 eta_l^2)) / 2; the momentum factor
// at step l is (eta_l - 1) / eta_{l+1}.
std::vector<double> nesterov_eta_prefix(int len);

struct SimplexQpResult {
    Eigen::VectorXd sigma;
    bool converged = true; // false when the iteration cap was hit
};

// min 1/2 sigma^T H sigma + c^T sigma over the unit simplex, H PSD on the
// simplex's affine hull. Projected gradient with Barzilai-Borwein steps;
// terminates at KKT residual <= 1e-8 or an iteration cap.
SimplexQpResult simplex_qp(const Eigen::MatrixXd& h, const Eigen::VectorXd& c);

} // namespace lagsdp
