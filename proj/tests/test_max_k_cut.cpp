#include <doctest.h>

#include <cmath>

#include "lagsdp/brute_force.hpp"
#include "lagsdp/max_k_cut.hpp"
#include "lagsdp/partitions.hpp"
#include "lagsdp/sdp_relax.hpp"
#include "test_helpers.hpp"

using namespace lagsdp;
using testing::c5;
using testing::k4;
using testing::single_edge;
using testing::triangle;

TEST_CASE("laplacian of an edge and of the triangle") {
    SymMatrix l = laplacian(single_edge());
    CHECK(l(0, 0) == 1.0);
    CHECK(l(0, 1) == -1.0);

    SymMatrix lt = laplacian(triangle()); // 3I - J
    CHECK(lt(0, 0) == 2.0);
    CHECK(lt(0, 1) == -1.0);

    Rng rng(81);
    GraphInstance g = testing::random_gnp(9, 0.6, 82, false);
    SymMatrix lg = laplacian(g);
    for (int i = 0; i < 9; ++i) {
        double row = 0.0;
        for (int j = 0; j < 9; ++j) row += lg(i, j);
        CHECK(std::abs(row) <= 1e-12);
    }
}

TEST_CASE("cut values on the triangle") {
    CHECK(cut_value(triangle(), KPartition{{0, 1, 1}}) == 2.0);
    CHECK(cut_value(triangle(), KPartition{{0, 1, 2}}) == 3.0);
}

TEST_CASE("cut_value agrees with the matrix formula") {
    Rng rng(91);
    GraphInstance g = testing::random_gnp(8, 0.7, 92, false);
    SymMatrix l = laplacian(g);
    for (int k : {2, 3, 4}) {
        for (int rep = 0; rep < 17; ++rep) {
            KPartition part{std::vector<int>(8)};
            for (auto& lab : part.labels) lab = static_cast<int>(rng.next_below(k));
            const double via_matrix =
                (k - 1.0) / (2.0 * k) * frob_inner(l, partition_to_matrix(part, k));
            CHECK(cut_value(g, part) == doctest::Approx(via_matrix).epsilon(1e-10));
        }
    }
}

TEST_CASE("partition matrices are PSD with bounded rank") {
    CHECK(frob_norm(partition_to_matrix(KPartition{{0, 0, 0}}, 2) - SymMatrix::ones(3)) == 0.0);
    SymMatrix split = partition_to_matrix(KPartition{{0, 1}}, 2);
    CHECK(split(0, 1) == -1.0);

    Rng rng(93);
    for (int rep = 0; rep < 10; ++rep) {
        KPartition part{std::vector<int>(8)};
        for (auto& lab : part.labels) lab = static_cast<int>(rng.next_below(3));
        SymMatrix x = partition_to_matrix(part, 3);
        CHECK(min_eigenvalue(x) >= -1e-10);
        auto d = eigh(x);
        int rank = 0;
        for (int i = 0; i < 8; ++i)
            if (d.eigenvalues(i) > 1e-8) ++rank;
        CHECK(rank <= 2);
    }
}

TEST_CASE("every block element is a partition matrix and vice versa") {
    for (int k : {2, 3}) {
        auto lib = enum_dhat(4, k);
        PartitionStream ps(4, k);
        size_t idx = 0;
        while (auto p = ps.next()) {
            KPartition part{p->labels};
            CHECK(frob_norm(lib[idx] - partition_to_matrix(part, k)) == 0.0);
            ++idx;
        }
        CHECK(idx == lib.size());
    }
}

TEST_CASE("level-p instance structure") {
    EdgePacking tri;
    tri.subsets.push_back({0, 1, 2});
    ISDPInstance inst = build_level_p(triangle(), 2, tri);
    CHECK(inst.block_library.size() == 1);
    CHECK(inst.block_library[0].size() == 4);
    CHECK(inst.box_lo == -1.0);
    CHECK(inst.box_hi == 1.0);
    CHECK(*inst.diag_fixed == 1.0);
    CHECK(inst.num_dualized() == 0);

    ISDPInstance boxed = build_level_p(triangle(), 3, EdgePacking{});
    CHECK(boxed.box_lo == doctest::Approx(-0.5));
    OracleResult res = eval_dual_function(boxed, DualPoint::zero(3));
    for (int i = 0; i < 3; ++i) CHECK(res.x_star(i, i) == 1.0);
}

TEST_CASE("triangle violation formula") {
    CHECK(triangle_violation(SymMatrix::ones(3), 0, 1, 2) == 0.0);
    SymMatrix x = SymMatrix::ones(3);
    x.set(0, 2, -1.0); // X_ij = X_jh = 1, X_ih = -1
    CHECK(triangle_violation(x, 0, 1, 2) == 2.0);

    Rng rng(94);
    for (int rep = 0; rep < 50; ++rep) {
        SymMatrix r = testing::random_sym(5, rng);
        int i = 0, j = 1, h = 2;
        auto pos = [](double v) { return std::max(0.0, v); };
        double expect = pos(r(i, j) + r(j, h) - r(i, h) - 1.0) +
                        pos(r(i, j) - r(j, h) + r(i, h) - 1.0) +
                        pos(-r(i, j) + r(j, h) + r(i, h) - 1.0);
        CHECK(triangle_violation(r, i, j, h) == doctest::Approx(expect));
    }
}

TEST_CASE("clique violation formula") {
    CHECK(clique_violation(SymMatrix::ones(4), {0, 1, 2}, 2) == 0.0);
    SymMatrix x(3);
    for (int i = 0; i < 3; ++i) x.set(i, i, 1.0);
    x.set(0, 1, -1.0);
    x.set(0, 2, -1.0);
    x.set(1, 2, -1.0);
    CHECK(clique_violation(x, {0, 1, 2}, 2) == 2.0);
    CHECK_THROWS_AS(clique_violation(x, {0, 1}, 2), std::invalid_argument);
}

TEST_CASE("feasible points produce an empty packing") {
    SymMatrix x = partition_to_matrix(KPartition{{0, 1, 0, 1}}, 2);
    EdgePacking packing = edge_packing_heuristic(x, k4(), 2, 3);
    CHECK(packing.subsets.empty());
}

TEST_CASE("the bare triangle SDP point violates nothing; the weight fallback fills in") {
    SymMatrix x(3);
    for (int i = 0; i < 3; ++i) x.set(i, i, 1.0);
    x.set(0, 1, -0.5);
    x.set(0, 2, -0.5);
    x.set(1, 2, -0.5);
    CHECK(triangle_violation(x, 0, 1, 2) == 0.0);
    CHECK(edge_packing_heuristic(x, triangle(), 2, 3).subsets.empty());

    EdgePacking fallback = weight_triangle_packing(triangle());
    REQUIRE(fallback.subsets.size() == 1);
    CHECK(fallback.subsets[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("the 5-cycle SDP point yields a nonempty packing") {
    SdpResult r = solve_sdp_basic(c5(), 2);
    EdgePacking packing = edge_packing_heuristic(r.x_star, c5(), 2, 3);
    CHECK(!packing.subsets.empty());
    packing.validate(5);
}

TEST_CASE("packing subsets pairwise intersect in at most one vertex") {
    GraphInstance g = testing::random_gnp(15, 0.5, 95);
    SdpResult r = solve_sdp_basic(g, 2);
    for (int p : {3, 5}) {
        EdgePacking packing = edge_packing_heuristic(r.x_star, g, 2, p);
        packing.validate(15); // throws on a violation
        for (const auto& s : packing.subsets) CHECK(static_cast<int>(s.size()) <= p);
    }
}

TEST_CASE("rounding a single edge cuts it") {
    KPartition part = fj_rounding(partition_to_matrix(KPartition{{0, 1}}, 2), single_edge(), 2,
                                  20, 3);
    CHECK(cut_value(single_edge(), part) == 1.0);
}

TEST_CASE("rounding a partition matrix recovers its cut value") {
    KPartition truth{{0, 1, 0, 1}};
    const double target = cut_value(k4(), truth);
    KPartition part = fj_rounding(partition_to_matrix(truth, 2), k4(), 2, 500, 17);
    CHECK(cut_value(k4(), part) >= target);
}

TEST_CASE("rounded cuts respect the SDP bound") {
    GraphInstance g = testing::random_gnp(12, 0.5, 96);
    SdpResult r = solve_sdp_basic(g, 2);
    KPartition part = fj_rounding(r.x_star, g, 2, 100, 5);
    CHECK(cut_value(g, part) <= r.z_sdp + 1e-6);
}

TEST_CASE("rounding is deterministic per seed") {
    GraphInstance g = testing::random_gnp(10, 0.5, 97);
    SdpResult r = solve_sdp_basic(g, 2);
    KPartition a = fj_rounding(r.x_star, g, 2, 50, 11);
    KPartition b = fj_rounding(r.x_star, g, 2, 50, 11);
    CHECK(a.labels == b.labels);
}

TEST_CASE("variable depth search returns local optima unchanged") {
    KPartition opt{{0, 1, 1}};
    KPartition out = variable_depth_search(triangle(), opt, 2);
    CHECK(cut_value(triangle(), out) == 2.0);
}

TEST_CASE("variable depth search fixes the swapped middle pair of a path") {
    GraphInstance path{4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}};
    KPartition bad{{0, 0, 1, 1}}; // cut 1; optimum alternates for cut 3
    KPartition out = variable_depth_search(path, bad, 2);
    CHECK(cut_value(path, out) > cut_value(path, bad));
    CHECK(cut_value(path, out) == 3.0);
}

TEST_CASE("variable depth search never worsens a partition") {
    Rng rng(98);
    for (int rep = 0; rep < 30; ++rep) {
        GraphInstance g = testing::random_gnp(9, 0.5, 300 + rep, false);
        int k = 2 + static_cast<int>(rng.next_below(3));
        KPartition part{std::vector<int>(9)};
        for (auto& lab : part.labels) lab = static_cast<int>(rng.next_below(k));
        KPartition out = variable_depth_search(g, part, k);
        CHECK(cut_value(g, out) >= cut_value(g, part));
    }
}

TEST_CASE("heuristic loop finds tiny optima") {
    SdpResult r2 = solve_sdp_basic(triangle(), 2);
    CHECK(heuristic_loop(triangle(), 2, r2.x_star, 1).lower_bound == 2.0);
    SdpResult r3 = solve_sdp_basic(triangle(), 3);
    CHECK(heuristic_loop(triangle(), 3, r3.x_star, 1).lower_bound == 3.0);
}

TEST_CASE("heuristic loop matches brute force on random graphs") {
    for (uint64_t seed : {7ull, 8ull, 9ull}) {
        GraphInstance g = testing::random_gnp(9, 0.6, seed);
        SdpResult r = solve_sdp_basic(g, 2);
        HeuristicResult h = heuristic_loop(g, 2, r.x_star, seed);
        BruteCutResult brute = brute_maxkcut(g, 2);
        CHECK(h.lower_bound <= brute.opt_value);
        CHECK(h.lower_bound >= brute.opt_value - 1e-9); // tiny graphs: expected to hit the optimum
    }
}
