#pragma once

#include <vector>

#include "lagsdp/sym_matrix.hpp"

namespace lagsdp {

struct Edge {
    int i, j;  // 0-based, i < j
    double w;
};

struct GraphInstance {
    int n = 0;
    std::vector<Edge> edges;

    int m() const { return static_cast<int>(edges.size()); }
    // No self-loops, no duplicate pairs, endpoints within [0, n).
    void validate() const;
    uint64_t content_hash() const;
};

// Cluster labels in [0, k).
struct KPartition {
    std::vector<int> labels;
};

// L = Diag(W 1) - W; row sums are zero.
SymMatrix laplacian(const GraphInstance& g);

// Total weight of edges whose endpoints carry different labels. Equals
// (k-1)/(2k) <L, X(part)> for the partition matrix X(part).
double cut_value(const GraphInstance& g, const KPartition& part);

// X_ij = 1 when i,j share a cluster and -1/(k-1) otherwise; PSD of rank
// at most k-1.
SymMatrix partition_to_matrix(const KPartition& part, int k);

} // namespace lagsdp
