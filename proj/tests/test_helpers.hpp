#pragma once

#include "lagsdp/graph.hpp"
#include "lagsdp/isdp.hpp"
#include "lagsdp/rng.hpp"
#include "lagsdp/sym_matrix.hpp"

namespace lagsdp::testing {

inline GraphInstance triangle() { return GraphInstance{3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}}}; }

inline GraphInstance k4() {
    return GraphInstance{4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}}};
}

inline GraphInstance c5() {
    return GraphInstance{5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {0, 4, 1}}};
}

inline GraphInstance single_edge(double w = 1.0) { return GraphInstance{2, {{0, 1, w}}}; }

inline GraphInstance random_gnp(int n, double density, uint64_t seed, bool unit_weights = true) {
    GraphInstance g;
    g.n = n;
    Rng rng(Rng::mix(seed));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_double() < density) {
                double w = unit_weights ? 1.0 : static_cast<double>(1 + rng.next_below(5));
                g.edges.push_back({i, j, w});
            }
    if (g.edges.empty()) g.edges.push_back({0, 1, 1.0});
    return g;
}

inline SymMatrix random_sym(int n, Rng& rng, double scale = 1.0) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, scale * (2.0 * rng.next_double() - 1.0));
    return m;
}

// Entries are multiples of 1/8 in [-2, 2]: exactly representable, and sums
// of products with dyadic box values stay exact, which the oracle-equality
// tests rely on.
inline SymMatrix random_dyadic_sym(int n, Rng& rng) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            m.set(i, j, (static_cast<double>(rng.next_below(33)) - 16.0) / 8.0);
    return m;
}

// Diagonally dominant dyadic symmetric matrix: PSD by Gershgorin, exact
// entries.
inline SymMatrix random_dyadic_psd(int n, Rng& rng) {
    SymMatrix m = random_dyadic_sym(n, rng);
    for (int i = 0; i < n; ++i) {
        double off = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i) off += std::abs(m(i, j));
        m.set(i, i, std::abs(m(i, i)) + off);
    }
    return m;
}

inline SymMatrix random_psd(int n, Rng& rng, double scale = 1.0) {
    SymMatrix a = random_sym(n, rng, scale);
    return SymMatrix::from_dense(a.dense() * a.dense().transpose());
}

} // namespace lagsdp::testing
