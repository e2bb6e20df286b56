#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "lagsdp/sym_matrix.hpp"

namespace lagsdp {

// Set-partition combinatorics behind the integer PSD families
// S^n_+({0,1}, r) and S^n_+({0,±1}, r), plus the max-k-cut block sets.
//
// Partitions of [m] are encoded as restricted-growth strings: label of
// element 0 is 0 and each new label is 1 + the max of the preceding labels,
// which gives one canonical representative per partition.

struct BlockPartition {
    int m = 0;
    std::vector<int> labels; // restricted-growth form

    int block_count() const;
    bool is_restricted_growth() const;
};

// Stirling number of the second kind, exact.
mpz_class stirling2(unsigned n, unsigned k);

// nth Bell number; equals sum_k stirling2(n, k).
mpz_class bell(unsigned n);

// Number of B-type (signed) partitions of {-n,...,n} with exactly k subset
// pairs. Computed by the recurrence
//   S_B(n+1, k) = S_B(n, k-1) + (2k+1) S_B(n, k),   S_B(0, 0) = 1,
// which adds element n+1 to the zero-block (1 way), to one of the 2k signed
// blocks, or as a fresh singleton pair.
mpz_class btype_stirling(unsigned n, unsigned k);

// nth Dowling number = sum_k btype_stirling(n, k).
mpz_class dowling(unsigned n);

// |S^n_+({0,1}, r)| = sum_{k=0}^{r+1} stirling2(n+1, k).
mpz_class count_s01(unsigned n, unsigned r);

// |S^n_+({0,±1}, r)| = sum_{k=0}^{r} btype_stirling(n, k).
mpz_class count_s0pm1(unsigned n, unsigned r);

// Partitions of [m] with at most kmax blocks, restricted-growth
// lexicographic order. Two passes over the same arguments yield the same
// sequence.
class PartitionStream {
public:
    PartitionStream(int m, int kmax);
    std::optional<BlockPartition> next();

private:
    int m_, kmax_;
    bool started_ = false, done_ = false;
    std::vector<int> labels_;
    std::vector<int> prefix_max_; // prefix_max_[i] = max(labels_[0..i])
    bool advance();
};

// The max-k-cut block family Dhat^m: one matrix per partition of [m] into at
// most k blocks, X_ij = 1 when i,j share a block and -1/(k-1) otherwise,
// unit diagonal. Every element is PSD with rank <= k-1.
std::vector<SymMatrix> enum_dhat(int m, int k);

SymMatrix partition_to_dhat(const BlockPartition& p, int k);

// Elements of S^n_+({0,1}, r), one per partition of {0,...,n} with at most
// r+1 blocks (the block of the extra 0 element marks the zero rows).
class S01Stream {
public:
    S01Stream(int n, int r);
    std::optional<SymMatrix> next();

private:
    int n_;
    PartitionStream parts_;
};

// Elements of S^n_+({0,±1}, r), one per B-type partition of {-n,...,n} with
// at most r subset pairs. Encoded as a label string over {0 (zero-block),
// 1..r} with restricted growth on the positive labels, plus a sign per
// element; the first element of each signed block is pinned to +1 so each
// partition appears exactly once.
class S0pm1Stream {
public:
    S0pm1Stream(int n, int r);
    std::optional<SymMatrix> next();

private:
    int n_, r_;
    bool started_ = false, done_ = false;
    std::vector<int> labels_;
    std::vector<int> sign_;      // +1/-1 per element; meaningful when labels_[i] > 0
    std::vector<int> free_slots_; // indices whose sign may flip
    bool advance_labels();
    bool advance_signs();
    void reset_signs();
    SymMatrix current() const;
};

} // namespace lagsdp
