#pragma once

#include <cstdint>
#include <vector>

#include "lagsdp/graph.hpp"
#include "lagsdp/isdp.hpp"

namespace lagsdp {

// Level-p discrete SDP for max-k-cut in minimization orientation:
// C = -(k-1)/(2k) L, box {-1/(k-1), 1}, unit diagonal, one Dhat^{|K|}
// library per packing subset, no dualized linear constraints.
ISDPInstance build_level_p(const GraphInstance& g, int k, const EdgePacking& packing);

// Violation of the three triangle inequalities on {i, j, h}:
// (X_ij + X_jh - X_ih - 1)^+ + (X_ij - X_jh + X_ih - 1)^+ + (-X_ij + X_jh + X_ih - 1)^+.
double triangle_violation(const SymMatrix& x, int i, int j, int h);

// Violation of the clique inequality on S, |S| = k+1:
// (-k/2 - sum_{i<j in S} X_ij)^+.
double clique_violation(const SymMatrix& x, const std::vector<int>& s, int k);

// Greedy packing from the violation scores of an (approximate) SDP solution:
// seed each subset with the most violated uncovered triple, grow by the
// vertex with the largest combined triangle/clique violation against the
// subset, stop at size p or when no positive candidate remains; at most
// 5n subsets. Returns an empty packing when x_star violates nothing.
EdgePacking edge_packing_heuristic(const SymMatrix& x_star, const GraphInstance& g, int k, int p);

// Fallback when the violation scores vanish: subsets are the heaviest
// (by total absolute weight) edge-disjoint triangles of the graph, at most
// 5n of them.
EdgePacking weight_triangle_packing(const GraphInstance& g);

// Random-hyperplane rounding: Gram vectors from the PSD projection of
// x_star, k Gaussian directions per trial, vertex assigned to the argmax
// inner product (ties to the lowest cluster). Best cut over `trials`,
// deterministic per seed.
KPartition fj_rounding(const SymMatrix& x_star, const GraphInstance& g, int k, int trials,
                       uint64_t seed);

// One Kernighan-Lin-style pass: repeatedly apply the best single-vertex move
// (even when negative) and lock the vertex; then keep the prefix of moves
// with the best cumulative gain. Never returns a worse partition.
KPartition variable_depth_search(const GraphInstance& g, const KPartition& part, int k);

struct HeuristicResult {
    KPartition partition;
    double lower_bound = 0.0; // cut value, feeds the Polyak stepsize as U*
};

// Alternates rounding and variable-depth search, blending the SDP solution
// with the incumbent's partition matrix (omega = 0.8) until neither
// improves; capped at 50 outer rounds.
HeuristicResult heuristic_loop(const GraphInstance& g, int k, const SymMatrix& x_star,
                               uint64_t seed);

} // namespace lagsdp
