#pragma once

#include <gmpxx.h>

#include <tuple>

#include "lagsdp/graph.hpp"
#include "lagsdp/isdp.hpp"

namespace lagsdp {

// Desk-scale exhaustive oracles. Guards are hard caps with explicit errors:
// a silently truncated enumeration would not certify anything.

struct BruteCutResult {
    double opt_value = 0.0;
    KPartition optimizer;
    mpz_class enumerated_count;
};

struct BruteMinResult {
    double min_value = 0.0;
    SymMatrix minimizer;
    mpz_class enumerated_count;
};

// Exact max-k-cut by plain enumeration of the k^n label assignments
// (lexicographic); requires k^n <= 1e7.
BruteCutResult brute_maxkcut(const GraphInstance& g, int k);

// Exact minimum of the Lagrangian over P(K^p) by full enumeration, no
// blockwise shortcut: every combination of library elements, every {lo, hi}
// pattern on the free entries. Requires at most 1e7 candidates. Candidates
// are scored through the same canonical lagrangian_value as the blockwise
// oracle, so equal minima are exact.
BruteMinResult brute_p_set_min(const ISDPInstance& inst, const DualPoint& d);

// Runs the full pipeline with all three solvers plus brute_maxkcut and
// asserts, in maximization orientation, opt - tol <= ld <= z_sdp + tol for
// each solver with tol = 1e-5 max(1, |z_sdp|). Returns (z_sdp, best ld, opt).
// Violations throw std::logic_error. A fixed packing (e.g. the single subset
// [n], which makes P the true feasible set) may be forced.
std::tuple<double, double, double> sandwich_audit(const GraphInstance& g, int k, int p,
                                                  uint64_t seed,
                                                  const std::optional<EdgePacking>& packing = {});

} // namespace lagsdp
