#include "lagsdp/isdp.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace lagsdp {

void EdgePacking::validate(int n) const {
    for (size_t a = 0; a < subsets.size(); ++a) {
        const auto& k = subsets[a];
        if (k.size() < 2) throw std::invalid_argument("EdgePacking: subset smaller than 2");
        std::set<int> uniq(k.begin(), k.end());
        if (uniq.size() != k.size()) throw std::invalid_argument("EdgePacking: repeated index in subset");
        for (int v : k)
            if (v < 0 || v >= n) throw std::invalid_argument("EdgePacking: index out of range");
        for (size_t b = 0; b < a; ++b) {
            int shared = 0;
            for (int v : subsets[b])
                if (uniq.count(v)) ++shared;
            if (shared > 1)
                throw std::invalid_argument("EdgePacking: subsets " + std::to_string(b) + " and " +
                                            std::to_string(a) + " share more than one index");
        }
    }
}

void ISDPInstance::validate() const {
    if (n < 1 || C.n() != n) throw std::invalid_argument("ISDPInstance: bad dimension");
    if (box_lo > box_hi) throw std::invalid_argument("ISDPInstance: box_lo > box_hi");
    for (const auto& [a, b] : dualized) {
        (void)b;
        if (a.n() != n) throw std::invalid_argument("ISDPInstance: dualized operator dimension mismatch");
    }
    packing.validate(n);
    if (block_library.size() != packing.subsets.size())
        throw std::invalid_argument("ISDPInstance: one library per packing subset required");
    const double tol = 1e-12;
    for (size_t l = 0; l < block_library.size(); ++l) {
        int m = static_cast<int>(packing.subsets[l].size());
        if (block_library[l].empty())
            throw std::invalid_argument("ISDPInstance: empty block library (P is infeasible)");
        for (const auto& v : block_library[l]) {
            if (v.n() != m) throw std::invalid_argument("ISDPInstance: library element dimension mismatch");
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    if (v(i, j) < box_lo - tol || v(i, j) > box_hi + tol)
                        throw std::invalid_argument("ISDPInstance: library entry outside box");
                    if (i == j && diag_fixed && std::abs(v(i, i) - *diag_fixed) > tol)
                        throw std::invalid_argument("ISDPInstance: library diagonal violates diag_fixed");
                }
        }
    }
    if (!diag_fixed) {
        std::vector<int> cover(n, 0);
        for (const auto& k : packing.subsets)
            for (int v : k) ++cover[v];
        for (int v = 0; v < n; ++v)
            if (cover[v] > 1)
                throw std::invalid_argument(
                    "ISDPInstance: without diag_fixed the packing must be vertex-disjoint");
    }
}

DualPoint DualPoint::zero(int n, int m1) {
    return DualPoint{SymMatrix(n), Eigen::VectorXd::Zero(m1)};
}

bool DualPoint::is_dual_feasible(double tol_scale) const {
    double scale = std::max(1.0, frob_norm(S));
    return min_eigenvalue(S) >= -tol_scale * scale;
}

namespace {

// C - S + sum_i lambda_i A_i
SymMatrix coefficient_matrix(const ISDPInstance& inst, const DualPoint& d) {
    SymMatrix m = inst.C - d.S;
    for (int i = 0; i < inst.num_dualized(); ++i) {
        if (d.lambda(i) != 0.0) m += d.lambda(i) * inst.dualized[i].first;
    }
    return m;
}

} // namespace

double lagrangian_value(const ISDPInstance& inst, const DualPoint& d, const SymMatrix& x) {
    if (x.n() != inst.n) throw std::invalid_argument("lagrangian_value: dimension mismatch");
    if (d.S.n() != inst.n || d.lambda.size() != inst.num_dualized())
        throw std::invalid_argument("lagrangian_value: dual dimension mismatch");
    // L = <C - S + A1*(lambda), X> - lambda^T b1
    SymMatrix m = coefficient_matrix(inst, d);
    double v = 0.0;
    for (int i = 0; i < inst.n; ++i) v += m(i, i) * x(i, i);
    for (int i = 0; i < inst.n; ++i)
        for (int j = i + 1; j < inst.n; ++j) v += 2.0 * m(i, j) * x(i, j);
    for (int i = 0; i < inst.num_dualized(); ++i) v -= d.lambda(i) * inst.dualized[i].second;
    return v;
}

OracleResult eval_dual_function(const ISDPInstance& inst, const DualPoint& d) {
    // Full structural validation happens once at construction; the per-call
    // checks here are the cheap ones.
    if (d.S.n() != inst.n || d.lambda.size() != inst.num_dualized())
        throw std::invalid_argument("eval_dual_function: dual dimension mismatch");
    if (inst.block_library.size() != inst.packing.subsets.size())
        throw std::invalid_argument("eval_dual_function: one library per packing subset required");
    for (const auto& lib : inst.block_library)
        if (lib.empty()) throw std::invalid_argument("eval_dual_function: empty block library (P is infeasible)");

    SymMatrix m = coefficient_matrix(inst, d);
    SymMatrix x(inst.n);

    std::vector<std::vector<char>> in_block(inst.n, std::vector<char>(inst.n, 0));
    std::vector<char> covered(inst.n, 0);
    for (const auto& k : inst.packing.subsets)
        for (size_t a = 0; a < k.size(); ++a) {
            covered[k[a]] = 1;
            for (size_t b = a + 1; b < k.size(); ++b) in_block[k[a]][k[b]] = in_block[k[b]][k[a]] = 1;
        }

    // (a) independent argmin per block; ties keep the earlier library element
    for (size_t l = 0; l < inst.packing.subsets.size(); ++l) {
        const auto& k = inst.packing.subsets[l];
        const int msz = static_cast<int>(k.size());
        int best = 0;
        double best_score = 0.0;
        for (size_t cand = 0; cand < inst.block_library[l].size(); ++cand) {
            const SymMatrix& v = inst.block_library[l][cand];
            double score = 0.0;
            if (!inst.diag_fixed)
                for (int a = 0; a < msz; ++a) score += m(k[a], k[a]) * v(a, a);
            for (int a = 0; a < msz; ++a)
                for (int b = a + 1; b < msz; ++b) score += 2.0 * m(k[a], k[b]) * v(a, b);
            if (cand == 0 || score < best_score) {
                best_score = score;
                best = static_cast<int>(cand);
            }
        }
        const SymMatrix& v = inst.block_library[l][best];
        for (int a = 0; a < msz; ++a) {
            if (!inst.diag_fixed) x.set(k[a], k[a], v(a, a));
            for (int b = a + 1; b < msz; ++b) x.set(k[a], k[b], v(a, b));
        }
    }

    // (b) free off-block pairs and (c) the diagonal
    for (int i = 0; i < inst.n; ++i)
        for (int j = i + 1; j < inst.n; ++j)
            if (!in_block[i][j]) x.set(i, j, free_entry_rule(m(i, j), inst.box_lo, inst.box_hi));
    for (int i = 0; i < inst.n; ++i) {
        if (inst.diag_fixed)
            x.set(i, i, *inst.diag_fixed);
        else if (!covered[i])
            x.set(i, i, free_entry_rule(m(i, i), inst.box_lo, inst.box_hi));
    }

    OracleResult res;
    res.x_star = x;
    res.value = lagrangian_value(inst, d, x);
    res.gamma_mat = -1.0 * x;
    res.gamma_vec = Eigen::VectorXd::Zero(inst.num_dualized());
    for (int i = 0; i < inst.num_dualized(); ++i)
        res.gamma_vec(i) = frob_inner(inst.dualized[i].first, x) - inst.dualized[i].second;
    return res;
}

double subgradient_check(const ISDPInstance& inst, const DualPoint& d1, const DualPoint& d2) {
    OracleResult r1 = eval_dual_function(inst, d1);
    OracleResult r2 = eval_dual_function(inst, d2);
    double lin = r1.value + frob_inner(r1.gamma_mat, d2.S - d1.S);
    if (inst.num_dualized() > 0) lin += r1.gamma_vec.dot(d2.lambda - d1.lambda);
    return r2.value - lin;
}

std::pair<double, double> refine_packing_monotonicity(const ISDPInstance& coarse,
                                                      const ISDPInstance& fine,
                                                      const DualPoint& d) {
    for (const auto& kc : coarse.packing.subsets) {
        bool contained = false;
        for (const auto& kf : fine.packing.subsets) {
            size_t hits = 0;
            for (int v : kc)
                if (std::find(kf.begin(), kf.end(), v) != kf.end()) ++hits;
            if (hits == kc.size()) {
                contained = true;
                break;
            }
        }
        if (!contained)
            throw std::invalid_argument(
                "refine_packing_monotonicity: coarse subset not contained in any fine subset");
    }
    return {eval_dual_function(coarse, d).value, eval_dual_function(fine, d).value};
}

} // namespace lagsdp
