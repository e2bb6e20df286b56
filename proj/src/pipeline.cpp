#include "lagsdp/pipeline.hpp"

#include <chrono>
#include <cmath>

#include "lagsdp/max_k_cut.hpp"

namespace lagsdp {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

std::string solver_name(SolverKind kind) {
    switch (kind) {
        case SolverKind::Dsg: return "dsg";
        case SolverKind::Asg: return "asg";
        case SolverKind::Bundle: return "bundle";
    }
    return "?";
}

SolverConfig default_config(SolverKind kind, int n) {
    SolverConfig cfg;
    cfg.kappa = n <= 100 ? 0.1 : 0.2;
    switch (kind) {
        case SolverKind::Dsg:
            cfg.mu0 = 1.0;
            cfg.n_step = 40;
            cfg.eps_s = 0.01;
            cfg.eps_lambda = 0.01;
            cfg.n_stag = 100;
            cfg.max_iter = 5000;
            break;
        case SolverKind::Asg:
            cfg.mu0 = n <= 100 ? 0.025 : 0.012;
            cfg.eps_s = 1e-3;
            cfg.eps_lambda = 1e-3;
            cfg.n_stag = 15;
            cfg.max_iter = 5000;
            break;
        case SolverKind::Bundle:
            cfg.rho = 0.5;
            cfg.inner_tol = 1e-4;
            cfg.inner_max = 20;
            cfg.bundle_gap_tol = 1e-3;
            cfg.max_iter = 600;
            break;
    }
    return cfg;
}

RunReport run_pipeline(const GraphInstance& g, const std::string& instance_id, int k, int p,
                       SolverKind solver, uint64_t seed, const PipelineOptions& opts) {
    g.validate();
    RunReport report;
    report.instance_id = instance_id;
    report.n = g.n;
    report.m = g.m();
    report.k = k;
    report.p = p;
    report.solver = solver_name(solver);
    report.seed = seed;
    report.opt = opts.opt;

    auto t0 = std::chrono::steady_clock::now();
    SdpResult sdp;
    try {
        sdp = solve_sdp_basic(g, k, opts.admm);
    } catch (const std::exception& e) {
        throw StageError("sdp", e.what());
    }
    report.sdp_b = sdp.z_sdp;
    report.times.sdp = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    HeuristicResult heur;
    try {
        heur = heuristic_loop(g, k, sdp.x_star, seed);
    } catch (const std::exception& e) {
        throw StageError("heuristic", e.what());
    }
    report.lb = heur.lower_bound;
    report.times.heuristic = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    ISDPInstance inst;
    try {
        EdgePacking packing;
        if (opts.packing) {
            packing = *opts.packing;
        } else {
            packing = edge_packing_heuristic(sdp.x_star, g, k, p);
            if (packing.subsets.empty()) packing = weight_triangle_packing(g);
        }
        inst = build_level_p(g, k, packing);
    } catch (const std::exception& e) {
        throw StageError("packing", e.what());
    }
    report.times.packing = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    SolverConfig cfg = default_config(solver, g.n);
    if (opts.max_iter) cfg.max_iter = *opts.max_iter;
    if (opts.eps) cfg.eps_s = cfg.eps_lambda = *opts.eps;
    if (opts.mu0) cfg.mu0 = *opts.mu0;
    if (opts.kappa) cfg.kappa = *opts.kappa;
    if (opts.rho) cfg.rho = *opts.rho;
    // Minimization orientation: U* dominates z_LD because -lb <= -opt = z_ISDP.
    cfg.upper_bound = -heur.lower_bound;
    if (solver == SolverKind::Bundle) {
        const double xnorm = frob_norm(sdp.x_star);
        cfg.t_init = xnorm > 0.0 ? cfg.kappa * std::abs(sdp.z_sdp - heur.lower_bound) / xnorm : 1.0;
        if (cfg.t_init <= 0.0) cfg.t_init = 1e-6;
    }

    DualPoint start{sdp.s0, Eigen::VectorXd::Zero(0)};
    SolverTrace trace;
    try {
        switch (solver) {
            case SolverKind::Dsg: trace = solve_dsg(inst, start, cfg); break;
            case SolverKind::Asg: trace = solve_asg(inst, start, cfg); break;
            case SolverKind::Bundle: trace = solve_bundle(inst, start, cfg); break;
        }
    } catch (const std::exception& e) {
        throw StageError("solver", e.what());
    }
    report.times.solver = seconds_since(t0);
    report.ld = -trace.best_value; // back to maximization orientation

    if (report.opt && std::abs(report.sdp_b - *report.opt) >= 1e-9)
        report.rel_gap_closed = 100.0 * (report.sdp_b - report.ld) / (report.sdp_b - *report.opt);
    return report;
}

} // namespace lagsdp
