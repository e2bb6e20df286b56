#pragma once

#include <Eigen/Dense>

#include <optional>
#include <utility>
#include <vector>

#include "lagsdp/sym_matrix.hpp"

namespace lagsdp {

// Collection of index subsets of [n] pairwise intersecting in at most one
// index, so within-subset off-diagonal supports are disjoint.
struct EdgePacking {
    std::vector<std::vector<int>> subsets;

    // Throws std::invalid_argument when some subset has size < 2, repeats an
    // index, leaves [0, n), or two subsets share more than one index.
    void validate(int n) const;
};

// Integer SDP instance in minimization orientation with all linear
// constraints dualized: objective <C, X>, dualized A_i(X) = b_i, and the
// retained discrete set
//   P = { X : X[K_l] in block_library[l], free entries in {box_lo, box_hi},
//         diag = diag_fixed when set }.
struct ISDPInstance {
    int n = 0;
    SymMatrix C;
    std::vector<std::pair<SymMatrix, double>> dualized; // (A_i, b_i)
    double box_lo = -1.0;
    double box_hi = 1.0;
    std::optional<double> diag_fixed;
    EdgePacking packing;
    std::vector<std::vector<SymMatrix>> block_library; // one list per subset

    int num_dualized() const { return static_cast<int>(dualized.size()); }

    // Instance-level invariants: packing validity, one nonempty library per
    // block with matching dimensions, entries within the box, diagonals
    // matching diag_fixed. Without diag_fixed the packing must additionally
    // be vertex-disjoint, since block elements then pin covered diagonals.
    void validate() const;
};

struct DualPoint {
    SymMatrix S;
    Eigen::VectorXd lambda;

    static DualPoint zero(int n, int m1 = 0);
    bool is_dual_feasible(double tol_scale = 1e-8) const;
};

struct OracleResult {
    SymMatrix x_star;
    double value = 0.0;          // g(S, lambda)
    SymMatrix gamma_mat;         // subgradient in S: -X*
    Eigen::VectorXd gamma_vec;   // subgradient in lambda: A1(X*) - b1
};

// Value of the free entry (i,j) outside every block: box_hi when the
// coefficient is negative, box_lo otherwise (zero maps to box_lo).
inline double free_entry_rule(double coeff, double lo, double hi) {
    return coeff < 0.0 ? hi : lo;
}

// Lagrangian L(X, S, lambda) = <C - S, X> + lambda^T (A1(X) - b1), evaluated
// in one canonical summation order (diagonal, then doubled upper triangle,
// then the dualized terms). eval_dual_function and the brute-force oracle
// both score candidates through this function, so their minima agree
// exactly whenever the argmin is unique.
double lagrangian_value(const ISDPInstance& inst, const DualPoint& d, const SymMatrix& x);

// Evaluates g(S, lambda) = min { L(X, S, lambda) : X in P } blockwise: each
// block takes the library element minimizing its within-block sum, every
// off-block pair follows free_entry_rule on the raw coefficient, and the
// diagonal is diag_fixed (or free_entry_rule per uncovered index without
// it). Ties go to the earlier library element and to box_lo.
OracleResult eval_dual_function(const ISDPInstance& inst, const DualPoint& d);

// Concavity slack g(d2) - [g(d1) + <Gamma_1, S2 - S1> + gamma_1^T (l2 - l1)];
// nonpositive up to rounding for a valid subgradient.
double subgradient_check(const ISDPInstance& inst, const DualPoint& d1, const DualPoint& d2);

// (g_coarse(d), g_fine(d)) for two instances whose packings are nested:
// every coarse subset contained in some fine subset. Shrinking P can only
// raise the minimum, so g_coarse <= g_fine pointwise.
std::pair<double, double> refine_packing_monotonicity(const ISDPInstance& coarse,
                                                      const ISDPInstance& fine,
                                                      const DualPoint& d);

} // namespace lagsdp
