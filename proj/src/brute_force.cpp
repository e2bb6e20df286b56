#include "lagsdp/brute_force.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "lagsdp/pipeline.hpp"

namespace lagsdp {

namespace {

constexpr double kGuard = 1e7;

} // namespace

BruteCutResult brute_maxkcut(const GraphInstance& g, int k) {
    g.validate();
    if (k < 1) throw std::invalid_argument("brute_maxkcut: need k >= 1");
    if (std::pow(static_cast<double>(k), g.n) > kGuard)
        throw std::invalid_argument("brute_maxkcut: k^n exceeds the enumeration guard");

    BruteCutResult out;
    out.opt_value = -std::numeric_limits<double>::infinity();
    KPartition part{std::vector<int>(g.n, 0)};
    mpz_class count = 0;
    while (true) {
        ++count;
        const double cut = cut_value(g, part);
        if (cut > out.opt_value) {
            out.opt_value = cut;
            out.optimizer = part;
        }
        int pos = g.n - 1;
        while (pos >= 0 && part.labels[pos] == k - 1) part.labels[pos--] = 0;
        if (pos < 0) break;
        ++part.labels[pos];
    }
    out.enumerated_count = count;
    return out;
}

BruteMinResult brute_p_set_min(const ISDPInstance& inst, const DualPoint& d) {
    inst.validate();
    const int n = inst.n;

    std::vector<std::vector<char>> in_block(n, std::vector<char>(n, 0));
    std::vector<char> covered(n, 0);
    for (const auto& subset : inst.packing.subsets)
        for (size_t a = 0; a < subset.size(); ++a) {
            covered[subset[a]] = 1;
            for (size_t b = a + 1; b < subset.size(); ++b)
                in_block[subset[a]][subset[b]] = in_block[subset[b]][subset[a]] = 1;
        }
    std::vector<std::pair<int, int>> free_pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!in_block[i][j]) free_pairs.push_back({i, j});
    std::vector<int> free_diag;
    if (!inst.diag_fixed)
        for (int i = 0; i < n; ++i)
            if (!covered[i]) free_diag.push_back(i);

    mpz_class total = 1;
    for (const auto& lib : inst.block_library) total *= static_cast<unsigned long>(lib.size());
    mpz_class two = 2;
    for (size_t i = 0; i < free_pairs.size() + free_diag.size(); ++i) total *= two;
    if (total > kGuard)
        throw std::invalid_argument("brute_p_set_min: |P| = " + total.get_str() +
                                    " exceeds the enumeration guard");

    // Odometer over (library choices, then {lo, hi} per free slot), blocks
    // slowest, so the scan order is lexicographic and ties resolve
    // identically across runs.
    const size_t nb = inst.block_library.size();
    std::vector<size_t> lib_idx(nb, 0);
    const size_t nfree = free_pairs.size() + free_diag.size();
    std::vector<char> free_hi(nfree, 0);

    SymMatrix x(n);
    if (inst.diag_fixed)
        for (int i = 0; i < n; ++i) x.set(i, i, *inst.diag_fixed);

    BruteMinResult out;
    out.min_value = std::numeric_limits<double>::infinity();
    mpz_class count = 0;
    while (true) {
        for (size_t l = 0; l < nb; ++l) {
            const auto& subset = inst.packing.subsets[l];
            const SymMatrix& v = inst.block_library[l][lib_idx[l]];
            for (size_t a = 0; a < subset.size(); ++a) {
                if (!inst.diag_fixed) x.set(subset[a], subset[a], v(a, a));
                for (size_t b = a + 1; b < subset.size(); ++b) x.set(subset[a], subset[b], v(a, b));
            }
        }
        for (size_t f = 0; f < free_pairs.size(); ++f)
            x.set(free_pairs[f].first, free_pairs[f].second,
                  free_hi[f] ? inst.box_hi : inst.box_lo);
        for (size_t f = 0; f < free_diag.size(); ++f)
            x.set(free_diag[f], free_diag[f],
                  free_hi[free_pairs.size() + f] ? inst.box_hi : inst.box_lo);

        ++count;
        const double v = lagrangian_value(inst, d, x);
        if (v < out.min_value) {
            out.min_value = v;
            out.minimizer = x;
        }

        // advance: free slots fastest (rightmost), then library choices
        size_t f = nfree;
        while (f > 0 && free_hi[f - 1]) free_hi[--f] = 0;
        if (f > 0) {
            free_hi[f - 1] = 1;
            continue;
        }
        size_t l = nb;
        while (l > 0 && lib_idx[l - 1] + 1 == inst.block_library[l - 1].size()) lib_idx[--l] = 0;
        if (l == 0) break;
        ++lib_idx[l - 1];
    }
    out.enumerated_count = count;
    return out;
}

std::tuple<double, double, double> sandwich_audit(const GraphInstance& g, int k, int p,
                                                  uint64_t seed,
                                                  const std::optional<EdgePacking>& packing) {
    BruteCutResult brute = brute_maxkcut(g, k);
    PipelineOptions opts;
    opts.opt = brute.opt_value;
    opts.packing = packing;

    double z_sdp = 0.0;
    double best_ld = std::numeric_limits<double>::infinity();
    for (SolverKind kind : {SolverKind::Dsg, SolverKind::Asg, SolverKind::Bundle}) {
        RunReport r = run_pipeline(g, "audit", k, p, kind, seed, opts);
        z_sdp = r.sdp_b;
        const double tol = 1e-5 * std::max(1.0, std::abs(r.sdp_b));
        if (r.ld > r.sdp_b + tol)
            throw std::logic_error("sandwich_audit: " + r.solver + " bound " +
                                   std::to_string(r.ld) + " exceeds z_sdp " +
                                   std::to_string(r.sdp_b));
        if (r.ld < brute.opt_value - tol)
            throw std::logic_error("sandwich_audit: " + r.solver + " bound " +
                                   std::to_string(r.ld) + " below the optimum " +
                                   std::to_string(brute.opt_value));
        best_ld = std::min(best_ld, r.ld);
    }
    return {z_sdp, best_ld, brute.opt_value};
}

} // namespace lagsdp
