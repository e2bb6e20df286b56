#include "lagsdp/max_k_cut.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "lagsdp/partitions.hpp"
#include "lagsdp/rng.hpp"

namespace lagsdp {

ISDPInstance build_level_p(const GraphInstance& g, int k, const EdgePacking& packing) {
    if (k < 2) throw std::invalid_argument("build_level_p: need k >= 2");
    g.validate();
    ISDPInstance inst;
    inst.n = g.n;
    inst.C = (-(k - 1.0) / (2.0 * k)) * laplacian(g);
    inst.box_lo = -1.0 / (k - 1);
    inst.box_hi = 1.0;
    inst.diag_fixed = 1.0;
    inst.packing = packing;
    inst.block_library.reserve(packing.subsets.size());
    for (const auto& subset : packing.subsets)
        inst.block_library.push_back(enum_dhat(static_cast<int>(subset.size()), k));
    inst.validate();
    return inst;
}

double triangle_violation(const SymMatrix& x, int i, int j, int h) {
    if (i == j || j == h || i == h)
        throw std::invalid_argument("triangle_violation: indices must be distinct");
    auto pos = [](double v) { return v > 0.0 ? v : 0.0; };
    const double a = x(i, j), b = x(j, h), c = x(i, h);
    return pos(a + b - c - 1.0) + pos(a - b + c - 1.0) + pos(-a + b + c - 1.0);
}

double clique_violation(const SymMatrix& x, const std::vector<int>& s, int k) {
    if (static_cast<int>(s.size()) != k + 1)
        throw std::invalid_argument("clique_violation: need |S| = k + 1");
    double sum = 0.0;
    for (size_t a = 0; a < s.size(); ++a)
        for (size_t b = a + 1; b < s.size(); ++b) sum += x(s[a], s[b]);
    const double v = -0.5 * k - sum;
    return v > 0.0 ? v : 0.0;
}

namespace {

// Sum of clique violations over the (k+1)-subsets {t} + (k of K).
double clique_growth_score(const SymMatrix& x, const std::vector<int>& k_set, int t, int k) {
    if (static_cast<int>(k_set.size()) < k) return 0.0;
    double total = 0.0;
    std::vector<int> subset(k + 1);
    subset[0] = t;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        for (int i = 0; i < k; ++i) subset[i + 1] = k_set[idx[i]];
        total += clique_violation(x, subset, k);
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == static_cast<int>(k_set.size()) - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return total;
}

} // namespace

EdgePacking edge_packing_heuristic(const SymMatrix& x_star, const GraphInstance& g, int k, int p) {
    if (p < 3) throw std::invalid_argument("edge_packing_heuristic: need p >= 3");
    const int n = g.n;
    EdgePacking packing;
    if (n < 3) return packing;
    std::vector<std::vector<char>> covered(n, std::vector<char>(n, 0));
    const int max_subsets = 5 * n;

    while (static_cast<int>(packing.subsets.size()) < max_subsets) {
        // Seed: most violated triple with all three pairs uncovered.
        double best_seed = 0.0;
        int si = -1, sj = -1, sh = -1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (covered[i][j]) continue;
                for (int h = j + 1; h < n; ++h) {
                    if (covered[i][h] || covered[j][h]) continue;
                    double v = triangle_violation(x_star, i, j, h);
                    if (v > best_seed) {
                        best_seed = v;
                        si = i;
                        sj = j;
                        sh = h;
                    }
                }
            }
        if (si < 0) break;

        std::vector<int> subset = {si, sj, sh};
        while (static_cast<int>(subset.size()) < p) {
            double best_score = 0.0;
            int best_t = -1;
            for (int t = 0; t < n; ++t) {
                if (std::find(subset.begin(), subset.end(), t) != subset.end()) continue;
                bool blocked = false;
                for (int v : subset)
                    if (covered[t][v]) {
                        blocked = true;
                        break;
                    }
                if (blocked) continue;
                double score = 0.0;
                for (size_t a = 0; a < subset.size(); ++a)
                    for (size_t b = a + 1; b < subset.size(); ++b)
                        score += triangle_violation(x_star, t, subset[a], subset[b]);
                score += clique_growth_score(x_star, subset, t, k);
                if (score > best_score) {
                    best_score = score;
                    best_t = t;
                }
            }
            if (best_t < 0) break;
            subset.push_back(best_t);
        }
        std::sort(subset.begin(), subset.end());
        for (size_t a = 0; a < subset.size(); ++a)
            for (size_t b = a + 1; b < subset.size(); ++b)
                covered[subset[a]][subset[b]] = covered[subset[b]][subset[a]] = 1;
        packing.subsets.push_back(std::move(subset));
    }
    packing.validate(n);
    return packing;
}

EdgePacking weight_triangle_packing(const GraphInstance& g) {
    const int n = g.n;
    EdgePacking packing;
    if (n < 3) return packing;
    Eigen::MatrixXd weight = Eigen::MatrixXd::Zero(n, n);
    std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
    for (const auto& e : g.edges) {
        weight(e.i, e.j) = weight(e.j, e.i) = e.w;
        present[e.i][e.j] = present[e.j][e.i] = 1;
    }
    std::vector<std::vector<char>> covered(n, std::vector<char>(n, 0));
    const int max_subsets = 5 * n;
    while (static_cast<int>(packing.subsets.size()) < max_subsets) {
        double best = 0.0;
        int si = -1, sj = -1, sh = -1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (covered[i][j] || !present[i][j]) continue;
                for (int h = j + 1; h < n; ++h) {
                    if (covered[i][h] || covered[j][h] || !present[i][h] || !present[j][h]) continue;
                    double v = std::abs(weight(i, j)) + std::abs(weight(i, h)) + std::abs(weight(j, h));
                    if (v > best) {
                        best = v;
                        si = i;
                        sj = j;
                        sh = h;
                    }
                }
            }
        if (si < 0) break;
        covered[si][sj] = covered[sj][si] = 1;
        covered[si][sh] = covered[sh][si] = 1;
        covered[sj][sh] = covered[sh][sj] = 1;
        packing.subsets.push_back({si, sj, sh});
    }
    packing.validate(n);
    return packing;
}

KPartition fj_rounding(const SymMatrix& x_star, const GraphInstance& g, int k, int trials,
                       uint64_t seed) {
    const int n = x_star.n();
    SpectralDecomposition d = eigh(project_psd(x_star));
    const double lam_max = d.eigenvalues.maxCoeff();
    // Columns of V scaled by sqrt(eigenvalue), truncated at numerical rank.
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (d.eigenvalues(i) > 1e-9 * std::max(lam_max, 0.0)) keep.push_back(i);
    if (keep.empty()) keep.push_back(n - 1);
    const int rank = static_cast<int>(keep.size());
    Eigen::MatrixXd gram(n, rank);
    for (int c = 0; c < rank; ++c)
        gram.col(c) = std::sqrt(std::max(d.eigenvalues(keep[c]), 0.0)) * d.eigenvectors.col(keep[c]);

    Rng base(Rng::mix(seed ^ g.content_hash()));
    KPartition best{std::vector<int>(n, 0)};
    double best_cut = -std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng = base.derive(static_cast<uint64_t>(trial));
        Eigen::MatrixXd z(rank, k);
        for (int c = 0; c < k; ++c)
            for (int r = 0; r < rank; ++r) z(r, c) = rng.next_gaussian();
        KPartition part{std::vector<int>(n, 0)};
        for (int i = 0; i < n; ++i) {
            double best_dot = -std::numeric_limits<double>::infinity();
            int arg = 0;
            for (int c = 0; c < k; ++c) {
                double dot = gram.row(i).dot(z.col(c));
                if (dot > best_dot) { // strict: ties keep the lowest cluster
                    best_dot = dot;
                    arg = c;
                }
            }
            part.labels[i] = arg;
        }
        const double cut = cut_value(g, part);
        if (cut > best_cut) {
            best_cut = cut;
            best = part;
        }
    }
    return best;
}

KPartition variable_depth_search(const GraphInstance& g, const KPartition& part, int k) {
    if (k < 2) return part;
    const int n = g.n;
    // w(v, c) = total weight between v and cluster c.
    Eigen::MatrixXd wvc = Eigen::MatrixXd::Zero(n, k);
    std::vector<int> labels = part.labels;
    for (const auto& e : g.edges) {
        wvc(e.i, labels[e.j]) += e.w;
        wvc(e.j, labels[e.i]) += e.w;
    }

    std::vector<char> locked(n, 0);
    std::vector<std::pair<int, int>> moves; // (vertex, target cluster)
    std::vector<double> cumulative;
    double running = 0.0;
    for (int step = 0; step < n; ++step) {
        double best_gain = -std::numeric_limits<double>::infinity();
        int best_v = -1, best_c = -1;
        for (int v = 0; v < n; ++v) {
            if (locked[v]) continue;
            const int from = labels[v];
            for (int c = 0; c < k; ++c) {
                if (c == from) continue;
                // moving v: edges into `from` become cut, edges into c stop being cut
                const double gain = wvc(v, from) - wvc(v, c);
                if (gain > best_gain) {
                    best_gain = gain;
                    best_v = v;
                    best_c = c;
                }
            }
        }
        const int from = labels[best_v];
        for (const auto& e : g.edges) {
            if (e.i == best_v) {
                wvc(e.j, from) -= e.w;
                wvc(e.j, best_c) += e.w;
            } else if (e.j == best_v) {
                wvc(e.i, from) -= e.w;
                wvc(e.i, best_c) += e.w;
            }
        }
        labels[best_v] = best_c;
        locked[best_v] = 1;
        running += best_gain;
        moves.emplace_back(best_v, best_c);
        cumulative.push_back(running);
    }

    // Best prefix of the ordered moves; T = 0 keeps the input.
    int best_prefix = 0;
    double best_total = 0.0;
    for (int t = 0; t < n; ++t)
        if (cumulative[t] > best_total) {
            best_total = cumulative[t];
            best_prefix = t + 1;
        }
    KPartition out = part;
    for (int t = 0; t < best_prefix; ++t) out.labels[moves[t].first] = moves[t].second;
    return out;
}

HeuristicResult heuristic_loop(const GraphInstance& g, int k, const SymMatrix& x_star,
                               uint64_t seed) {
    constexpr double kOmega = 0.8;
    constexpr int kMaxRounds = 50;
    constexpr int kTrials = 500;

    SymMatrix blend = x_star;
    HeuristicResult best;
    best.lower_bound = -std::numeric_limits<double>::infinity();
    for (int round = 0; round < kMaxRounds; ++round) {
        KPartition part = fj_rounding(blend, g, k, kTrials, Rng::mix(seed) + round);
        part = variable_depth_search(g, part, k);
        const double cut = cut_value(g, part);
        if (cut > best.lower_bound) {
            best.lower_bound = cut;
            best.partition = part;
        } else {
            break; // neither rounding nor the search improved
        }
        blend = SymMatrix::from_dense(kOmega * blend.dense() +
                                      (1.0 - kOmega) * partition_to_matrix(best.partition, k).dense());
    }
    return best;
}

} // namespace lagsdp
