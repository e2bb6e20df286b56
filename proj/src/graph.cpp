#include "lagsdp/graph.hpp"

#include <set>
#include <stdexcept>

#include "lagsdp/rng.hpp"

namespace lagsdp {

void GraphInstance::validate() const {
    if (n < 1) throw std::invalid_argument("GraphInstance: need n >= 1");
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges) {
        if (e.i < 0 || e.j < 0 || e.i >= n || e.j >= n)
            throw std::invalid_argument("GraphInstance: edge endpoint out of range");
        if (e.i == e.j) throw std::invalid_argument("GraphInstance: self-loop");
        if (e.i > e.j) throw std::invalid_argument("GraphInstance: edges must be stored with i < j");
        if (!seen.insert({e.i, e.j}).second)
            throw std::invalid_argument("GraphInstance: duplicate edge");
    }
}

uint64_t GraphInstance::content_hash() const {
    uint64_t h = fnv1a(&n, sizeof n);
    for (const auto& e : edges) {
        h = fnv1a(&e.i, sizeof e.i, h);
        h = fnv1a(&e.j, sizeof e.j, h);
        h = fnv1a(&e.w, sizeof e.w, h);
    }
    return h;
}

SymMatrix laplacian(const GraphInstance& g) {
    SymMatrix l(g.n);
    for (const auto& e : g.edges) {
        l.add(e.i, e.j, -e.w);
        l.add(e.i, e.i, e.w);
        l.add(e.j, e.j, e.w);
    }
    return l;
}

double cut_value(const GraphInstance& g, const KPartition& part) {
    double total = 0.0;
    for (const auto& e : g.edges)
        if (part.labels[e.i] != part.labels[e.j]) total += e.w;
    return total;
}

SymMatrix partition_to_matrix(const KPartition& part, int k) {
    if (k < 2) throw std::invalid_argument("partition_to_matrix: need k >= 2");
    const int n = static_cast<int>(part.labels.size());
    const double off = -1.0 / (k - 1);
    SymMatrix x(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            x.set(i, j, i == j ? 1.0 : (part.labels[i] == part.labels[j] ? 1.0 : off));
    return x;
}

} // namespace lagsdp
