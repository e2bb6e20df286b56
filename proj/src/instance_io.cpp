#include "lagsdp/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "lagsdp/rng.hpp"

namespace lagsdp {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

void assign_signs(std::vector<Edge>& edges, uint64_t seed) {
    const size_t negatives = edges.size() / 2;
    std::vector<size_t> order(edges.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    Rng rng(Rng::mix(seed));
    rng.shuffle(order);
    for (auto& e : edges) e.w = 1.0;
    for (size_t i = 0; i < negatives; ++i) edges[order[i]].w = -1.0;
}

} // namespace

GraphInstance parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
        }
        return false;
    };

    if (!next_line()) throw ParseError("line 1: missing header \"n m\"");
    GraphInstance g;
    long m = 0;
    {
        std::istringstream ls(line);
        std::string extra;
        if (!(ls >> g.n >> m) || (ls >> extra)) fail(line_no, "expected header \"n m\"");
        if (g.n < 1 || m < 0) fail(line_no, "invalid header values");
    }

    std::map<std::pair<int, int>, int> first_seen;
    for (long e = 0; e < m; ++e) {
        if (!next_line()) throw ParseError("unexpected end of input: expected " +
                                           std::to_string(m) + " edges, got " + std::to_string(e));
        std::istringstream ls(line);
        int i = 0, j = 0;
        double w = 0.0;
        std::string extra;
        if (!(ls >> i >> j >> w) || (ls >> extra)) fail(line_no, "expected \"i j w\"");
        if (i < 1 || j < 1 || i > g.n || j > g.n) fail(line_no, "endpoint out of range");
        if (i == j) fail(line_no, "self-loop");
        auto key = std::minmax(i, j);
        auto [it, inserted] = first_seen.insert({{key.first, key.second}, line_no});
        if (!inserted)
            fail(line_no, "duplicate edge (" + std::to_string(key.first) + "," +
                              std::to_string(key.second) + "), first seen on line " +
                              std::to_string(it->second));
        g.edges.push_back({key.first - 1, key.second - 1, w});
    }
    if (next_line()) fail(line_no, "trailing content after the last edge");
    g.validate();
    return g;
}

GraphInstance load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

GraphInstance generate_band(int n, int k, uint64_t seed) {
    if (n <= k + 1) throw std::invalid_argument("generate_band: need n > k + 1");
    GraphInstance g;
    g.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n && j - i <= k + 1; ++j) g.edges.push_back({i, j, 1.0});
    assign_signs(g.edges, seed ^ 0xb4bdULL);
    g.validate();
    return g;
}

GraphInstance generate_spinglass_torus(int nt, int nr, uint64_t seed) {
    if (nt < 2 || nr < 2) throw std::invalid_argument("generate_spinglass_torus: need nt, nr >= 2");
    auto id = [nr](int r, int c) { return r * nr + c; };
    std::vector<Edge> raw;
    for (int r = 0; r < nt; ++r)
        for (int c = 0; c < nr; ++c) {
            int a = id(r, c);
            int down = id((r + 1) % nt, c);
            int right = id(r, (c + 1) % nr);
            raw.push_back({std::min(a, down), std::max(a, down), 1.0});
            raw.push_back({std::min(a, right), std::max(a, right), 1.0});
        }
    assign_signs(raw, seed ^ 0x70f5ULL);

    // Wrap-around on a side of length 2 duplicates the pair; merge by weight.
    std::map<std::pair<int, int>, double> merged;
    for (const auto& e : raw) merged[{e.i, e.j}] += e.w;
    GraphInstance g;
    g.n = nt * nr;
    for (const auto& [key, w] : merged) g.edges.push_back({key.first, key.second, w});
    g.validate();
    return g;
}

} // namespace lagsdp
