#include "lagsdp/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace lagsdp {

namespace {

constexpr double kImproveTol = 1e-9; // absolute improvement threshold for stagnation

// Euclidean projection onto {sigma >= 0, 1^T sigma = 1}.
Eigen::VectorXd project_simplex(const Eigen::VectorXd& y) {
    const int n = static_cast<int>(y.size());
    std::vector<double> u(y.data(), y.data() + n);
    std::sort(u.begin(), u.end(), std::greater<double>());
    double cum = 0.0, theta = 0.0;
    int rho = 0;
    for (int j = 0; j < n; ++j) {
        cum += u[j];
        double t = (cum - 1.0) / (j + 1);
        if (u[j] - t > 0.0) {
            rho = j + 1;
            theta = t;
        }
    }
    (void)rho;
    return (y.array() - theta).max(0.0).matrix();
}

double simplex_kkt_residual(const Eigen::VectorXd& grad, const Eigen::VectorXd& sigma) {
    double active_max = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < sigma.size(); ++i)
        if (sigma(i) > 1e-12) active_max = std::max(active_max, grad(i));
    return std::max(0.0, active_max - grad.minCoeff());
}

SimplexQpResult simplex_qp_from(const Eigen::MatrixXd& h, const Eigen::VectorXd& c,
                                Eigen::VectorXd sigma) {
    const int n = static_cast<int>(c.size());
    if (h.rows() != n || h.cols() != n) throw std::invalid_argument("simplex_qp: dimension mismatch");
    if (n == 1) return {Eigen::VectorXd::Ones(1), true};

    const double lip = std::max(h.cwiseAbs().rowwise().sum().maxCoeff(), 1e-12);
    const int max_iter = 5000;
    double step = 1.0 / lip;
    Eigen::VectorXd grad = h * sigma + c;
    SimplexQpResult out;
    for (int it = 0; it < max_iter; ++it) {
        if (simplex_kkt_residual(grad, sigma) <= 1e-8) {
            out.sigma = sigma;
            return out;
        }
        Eigen::VectorXd next = project_simplex(sigma - step * grad);
        Eigen::VectorXd s = next - sigma;
        Eigen::VectorXd y = h * s; // gradient change is exact for a quadratic
        double sy = s.dot(y);
        step = sy > 1e-18 ? std::clamp(s.squaredNorm() / sy, 1e-10 / lip, 1e10 / lip) : 2.0 / lip;
        sigma = next;
        grad += y;
    }
    out.sigma = sigma;
    out.converged = false;
    return out;
}

struct BundleElem {
    SymMatrix x;
    Eigen::VectorXd gamma;
    double cx;       // <C, X^i>, fixed
    double xs;       // <X^i, S_hat>, refreshed when the center moves
};

} // namespace

void SolverConfig::validate() const {
    if (!(mu0 > 0.0 && mu0 <= 2.0)) throw std::invalid_argument("SolverConfig: need 0 < mu0 <= 2");
    if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("SolverConfig: need rho in (0,1)");
    if (eps_s <= 0.0 || eps_lambda <= 0.0 || inner_tol <= 0.0 || bundle_gap_tol <= 0.0)
        throw std::invalid_argument("SolverConfig: tolerances must be positive");
    if (max_iter < 1 || n_stag < 1 || n_step < 1 || inner_max < 1)
        throw std::invalid_argument("SolverConfig: iteration counts must be positive");
}

std::vector<double> nesterov_eta_prefix(int len) {
    std::vector<double> eta;
    double e = 0.0;
    for (int i = 0; i < len; ++i) {
        eta.push_back(e);
        e = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * e * e));
    }
    return eta;
}

void write_trace(std::ostream& os, const SolverTrace& trace) {
    for (const auto& r : trace.records)
        os << r.iter << ' ' << r.g << ' ' << r.best << ' ' << r.step_norm << ' ' << r.flag << '\n';
}

SimplexQpResult simplex_qp(const Eigen::MatrixXd& h, const Eigen::VectorXd& c) {
    const int n = static_cast<int>(c.size());
    return simplex_qp_from(h, c, Eigen::VectorXd::Constant(n, 1.0 / n));
}

SolverTrace solve_dsg(const ISDPInstance& inst, const DualPoint& start, const SolverConfig& cfg) {
    cfg.validate();
    const int m1 = inst.num_dualized();
    SymMatrix s = start.S;
    Eigen::VectorXd lam = start.lambda;
    SymMatrix dir(inst.n);
    Eigen::VectorXd dir_vec = Eigen::VectorXd::Zero(m1);
    bool have_dir = false;

    SolverTrace tr;
    tr.best_value = -std::numeric_limits<double>::infinity();
    tr.best_dual = start;
    double mu = cfg.mu0;
    int stag = 0, window = 0;

    for (int l = 0; l < cfg.max_iter; ++l) {
        OracleResult res = eval_dual_function(inst, DualPoint{s, lam});
        bool improved = res.value > tr.best_value + kImproveTol;
        if (res.value > tr.best_value) {
            tr.best_value = res.value;
            tr.best_dual = DualPoint{s, lam};
        }
        if (improved) {
            stag = 0;
            window = 0;
        } else {
            ++stag;
            ++window;
        }
        tr.iterations = l + 1;

        const double gnorm = frob_norm(res.gamma_mat);
        const double gvnorm = m1 > 0 ? res.gamma_vec.norm() : 0.0;
        if (gnorm == 0.0 && gvnorm == 0.0) {
            tr.records.push_back({l, res.value, tr.best_value, 0.0, '-'});
            tr.stop_reason = "zero subgradient";
            return tr;
        }
        if (res.value >= cfg.upper_bound) {
            // Polyak step is nonpositive once the target is met.
            tr.records.push_back({l, res.value, tr.best_value, 0.0, '-'});
            tr.stop_reason = "upper bound reached";
            return tr;
        }
        if (stag >= cfg.n_stag) {
            tr.records.push_back({l, res.value, tr.best_value, 0.0, '-'});
            tr.stop_reason = "stagnation";
            return tr;
        }
        if (window >= cfg.n_step) { // Held-Karp halving
            mu *= 0.5;
            window = 0;
        }

        const double gap = cfg.upper_bound - res.value;
        const double alpha = gnorm > 0.0 ? mu * gap / (gnorm * gnorm) : 0.0;
        const double beta = gvnorm > 0.0 ? mu * gap / (gvnorm * gvnorm) : 0.0;

        if (!have_dir) {
            dir = res.gamma_mat;
            dir_vec = res.gamma_vec;
            have_dir = true;
        } else {
            const double dn = frob_norm(dir);
            dir = res.gamma_mat + (dn > 0.0 ? gnorm / dn : 0.0) * dir;
            if (m1 > 0) {
                const double dvn = dir_vec.norm();
                dir_vec = res.gamma_vec + (dvn > 0.0 ? gvnorm / dvn : 0.0) * dir_vec;
            }
        }

        SymMatrix s_next = project_psd(s + alpha * dir);
        Eigen::VectorXd lam_next = lam + beta * dir_vec;
        const double ds = frob_norm(s_next - s);
        const double dlam = m1 > 0 ? (lam_next - lam).norm() : 0.0;
        s = s_next;
        lam = lam_next;
        tr.records.push_back({l, res.value, tr.best_value, ds, '-'});
        if (ds < cfg.eps_s && (m1 == 0 || dlam < cfg.eps_lambda)) {
            tr.stop_reason = "step tolerance";
            return tr;
        }
    }
    tr.stop_reason = "max iterations";
    return tr;
}

SolverTrace solve_asg(const ISDPInstance& inst, const DualPoint& start, const SolverConfig& cfg) {
    cfg.validate();
    const int m1 = inst.num_dualized();
    SymMatrix s = start.S, y = start.S;
    Eigen::VectorXd lam = start.lambda, delta = start.lambda;
    double eta = 0.0;

    SolverTrace tr;
    tr.best_value = -std::numeric_limits<double>::infinity();
    tr.best_dual = start;
    double prev_lookahead = -std::numeric_limits<double>::infinity();
    int stag = 0;

    for (int l = 0; l < cfg.max_iter; ++l) {
        OracleResult res = eval_dual_function(inst, DualPoint{y, delta});

        // The look-ahead point may be indefinite; valid bounds come from the
        // projected S-iterates (which equal Y at l = 0).
        double bound_g;
        if (l == 0) {
            bound_g = res.value;
        } else {
            bound_g = eval_dual_function(inst, DualPoint{s, lam}).value;
        }
        if (bound_g > tr.best_value) {
            tr.best_value = bound_g;
            tr.best_dual = DualPoint{s, lam};
        }
        // Stagnation watches the look-ahead objective: the counter resets on
        // any uptick of consecutive g(Y) values, so the transient dip after a
        // near-optimal warm start does not read as convergence.
        if (l > 0 && res.value > prev_lookahead + kImproveTol) {
            stag = 0;
        } else if (l > 0) {
            ++stag;
        }
        prev_lookahead = res.value;
        tr.iterations = l + 1;

        const double gnorm = frob_norm(res.gamma_mat);
        const double gvnorm = m1 > 0 ? res.gamma_vec.norm() : 0.0;
        if (gnorm == 0.0 && gvnorm == 0.0) {
            tr.records.push_back({l, bound_g, tr.best_value, 0.0, '-'});
            tr.stop_reason = "zero subgradient";
            return tr;
        }
        if (bound_g >= cfg.upper_bound) {
            tr.records.push_back({l, bound_g, tr.best_value, 0.0, '-'});
            tr.stop_reason = "upper bound reached";
            return tr;
        }
        if (stag >= cfg.n_stag) {
            tr.records.push_back({l, bound_g, tr.best_value, 0.0, '-'});
            tr.stop_reason = "stagnation";
            return tr;
        }

        const double gap = cfg.upper_bound - res.value;
        const double alpha = gnorm > 0.0 ? cfg.mu0 * gap / (gnorm * gnorm) : 0.0;
        const double beta = gvnorm > 0.0 ? cfg.mu0 * gap / (gvnorm * gvnorm) : 0.0;

        SymMatrix s_next = project_psd(y + alpha * res.gamma_mat);
        Eigen::VectorXd lam_next = delta + beta * res.gamma_vec;
        const double eta_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * eta * eta));
        double coeff;
        if (cfg.asg_eta_offset) {
            const double eta_nn = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * eta_next * eta_next));
            coeff = (eta_next - 1.0) / eta_nn;
        } else {
            coeff = (eta - 1.0) / eta_next; // as printed; -1 at l = 0
        }
        y = s_next + coeff * (s_next - s);
        delta = lam_next + coeff * (lam_next - lam);

        const double ds = frob_norm(s_next - s);
        const double dlam = m1 > 0 ? (lam_next - lam).norm() : 0.0;
        s = s_next;
        lam = lam_next;
        eta = eta_next;
        tr.records.push_back({l, bound_g, tr.best_value, ds, '-'});
        // The printed l = 0 look-ahead coefficient is -1, which replays the
        // start point at l = 1 and reproduces S^2 = S^1; the consecutive
        // difference only becomes meaningful from l = 2.
        if (l >= 2 && ds < cfg.eps_s && (m1 == 0 || dlam < cfg.eps_lambda)) {
            tr.stop_reason = "step tolerance";
            return tr;
        }
    }
    tr.stop_reason = "max iterations";
    return tr;
}

SolverTrace solve_bundle(const ISDPInstance& inst, const DualPoint& start, const SolverConfig& cfg) {
    cfg.validate();
    const int n = inst.n;
    const int m1 = inst.num_dualized();

    SymMatrix s_hat = start.S;
    Eigen::VectorXd lam_hat = start.lambda;
    OracleResult res0 = eval_dual_function(inst, DualPoint{s_hat, lam_hat});
    double g_center = res0.value;

    SolverTrace tr;
    tr.best_value = g_center;
    tr.best_dual = DualPoint{s_hat, lam_hat};

    std::vector<BundleElem> bundle;
    bundle.push_back({res0.x_star, res0.gamma_vec, frob_inner(inst.C, res0.x_star),
                      frob_inner(res0.x_star, s_hat)});
    // Gram matrix of the bundle under <X^i, X^j> + gamma_i . gamma_j,
    // extended incrementally.
    Eigen::MatrixXd gram(1, 1);
    gram(0, 0) = frob_inner(bundle[0].x, bundle[0].x) + bundle[0].gamma.squaredNorm();

    double t = cfg.t_init > 0.0 ? cfg.t_init : 1.0;
    const double t_min = 1e-6 * t, t_max = 1e6 * t;

    for (int l = 0; l < cfg.max_iter; ++l) {
        const int b = static_cast<int>(bundle.size());

        // Inner alternation on the dual subproblem: sigma from the simplex QP
        // with Q fixed (starting at Q = 0), then Q = P_psd(sum sigma_i X^i - t S_hat).
        SymMatrix q(n);
        Eigen::VectorXd sigma = Eigen::VectorXd::Constant(b, 1.0 / b);
        Eigen::MatrixXd h = gram / t;
        SymMatrix xbar(n);
        for (int round = 0; round < cfg.inner_max; ++round) {
            Eigen::VectorXd c(b);
            for (int i = 0; i < b; ++i) {
                c(i) = bundle[i].cx - bundle[i].xs - frob_inner(bundle[i].x, q) / t;
                if (m1 > 0) c(i) += bundle[i].gamma.dot(lam_hat);
            }
            Eigen::VectorXd sigma_next = simplex_qp_from(h, c, sigma).sigma;
            const double change = (sigma_next - sigma).norm();
            sigma = sigma_next;
            xbar = SymMatrix(n);
            for (int i = 0; i < b; ++i)
                if (sigma(i) != 0.0) xbar += sigma(i) * bundle[i].x;
            q = project_psd(xbar - t * s_hat);
            if (round > 0 && change < cfg.inner_tol) break;
        }

        // Trial point; Gamma^i = -X^i, so Q + sum sigma_i Gamma^i = Q - Xbar.
        SymMatrix s_trial = project_psd(s_hat + (1.0 / t) * (q - xbar));
        Eigen::VectorXd lam_trial = lam_hat;
        if (m1 > 0) {
            Eigen::VectorXd gbar = Eigen::VectorXd::Zero(m1);
            for (int i = 0; i < b; ++i) gbar += sigma(i) * bundle[i].gamma;
            lam_trial += gbar / t;
        }

        // Cutting-plane model at the trial point over the current bundle.
        double model = std::numeric_limits<double>::infinity();
        for (int i = 0; i < b; ++i) {
            double v = bundle[i].cx - frob_inner(bundle[i].x, s_trial);
            if (m1 > 0) v += bundle[i].gamma.dot(lam_trial);
            model = std::min(model, v);
        }
        const double predicted = model - g_center;
        tr.iterations = l + 1;
        if (predicted < cfg.bundle_gap_tol) {
            tr.records.push_back({l, g_center, tr.best_value, 0.0, 'N'});
            tr.stop_reason = "model gap";
            return tr;
        }

        OracleResult res = eval_dual_function(inst, DualPoint{s_trial, lam_trial});
        const double g_trial = res.value;
        if (g_trial > tr.best_value) {
            tr.best_value = g_trial;
            tr.best_dual = DualPoint{s_trial, lam_trial};
        }
        const double actual = g_trial - g_center;
        const bool serious = actual >= cfg.rho * predicted;
        const double step_norm = frob_norm(s_trial - s_hat);

        // Elements with zero weight no longer influence the subproblem.
        std::vector<int> keep;
        for (int i = 0; i < b; ++i)
            if (sigma(i) > 1e-12) keep.push_back(i);
        if (keep.empty()) {
            int arg = 0;
            sigma.maxCoeff(&arg);
            keep.push_back(arg);
        }
        if (static_cast<int>(keep.size()) < b) {
            std::vector<BundleElem> pruned;
            pruned.reserve(keep.size());
            Eigen::MatrixXd g2(keep.size(), keep.size());
            for (size_t a = 0; a < keep.size(); ++a) {
                pruned.push_back(std::move(bundle[keep[a]]));
                for (size_t c2 = 0; c2 <= a; ++c2) {
                    g2(a, c2) = gram(keep[a], keep[c2]);
                    g2(c2, a) = g2(a, c2);
                }
            }
            bundle = std::move(pruned);
            gram = g2;
        }

        BundleElem elem{res.x_star, res.gamma_vec, frob_inner(inst.C, res.x_star), 0.0};
        const int nb = static_cast<int>(bundle.size()) + 1;
        Eigen::MatrixXd g2(nb, nb);
        g2.topLeftCorner(nb - 1, nb - 1) = gram;
        for (int i = 0; i < nb - 1; ++i) {
            double v = frob_inner(bundle[i].x, elem.x);
            if (m1 > 0) v += bundle[i].gamma.dot(elem.gamma);
            g2(i, nb - 1) = g2(nb - 1, i) = v;
        }
        g2(nb - 1, nb - 1) = frob_inner(elem.x, elem.x) + elem.gamma.squaredNorm();
        gram = g2;
        bundle.push_back(std::move(elem));

        const double ratio = predicted > 0.0 ? actual / predicted : 1.0;
        if (serious) {
            s_hat = s_trial;
            lam_hat = lam_trial;
            g_center = g_trial;
            t = std::max(t_min, t / (1.0 + std::min(ratio, 1.0)));
            for (auto& e : bundle) e.xs = frob_inner(e.x, s_hat);
        } else {
            // Kiwiel-style proximity control: the worse the model overshoot,
            // the harder t grows, so wildly long trials are reined in within
            // a few null steps instead of a long geometric walk.
            const double growth = std::clamp(2.0 * (1.0 - ratio), 1.5, 1e4);
            t = std::min(t_max, t * growth);
            bundle.back().xs = frob_inner(bundle.back().x, s_hat);
        }
        tr.records.push_back({l, g_trial, tr.best_value, step_norm, serious ? 'S' : 'N'});
    }
    tr.stop_reason = "max iterations";
    return tr;
}

} // namespace lagsdp
