#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "lagsdp/partitions.hpp"

using namespace lagsdp;

namespace {

// Independent recursive counter: partitions of [n] into exactly k blocks.
long count_partitions_exact(int n, int k) {
    long total = 0;
    std::vector<int> labels(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int used) {
        if (pos == n) {
            if (used == k) ++total;
            return;
        }
        for (int l = 0; l <= used; ++l) {
            labels[pos] = l;
            rec(pos + 1, std::max(used, l + 1));
        }
    };
    if (n == 0) return k == 0 ? 1 : 0;
    rec(0, 0);
    return total;
}

// Brute-force count of B-type partitions of {-n..n} with exactly k subset
// pairs: enumerate all partitions of the 2n+1 symbols and filter for mirror
// closure and a unique self-mirrored block.
std::vector<long> btype_counts_brute(int n) {
    const int total = 2 * n + 1; // symbols -n..n mapped to 0..2n
    std::vector<long> by_pairs(n + 1, 0);
    std::vector<int> labels(total, 0);
    auto mirror = [&](int idx) { return total - 1 - idx; }; // negation of the symbol
    std::function<void(int, int)> rec = [&](int pos, int used) {
        if (pos == total) {
            int blocks = used;
            std::vector<std::set<int>> part(blocks);
            for (int i = 0; i < total; ++i) part[labels[i]].insert(i);
            int self_mirrored = 0;
            bool closed = true;
            for (const auto& b : part) {
                std::set<int> neg;
                for (int v : b) neg.insert(mirror(v));
                if (neg == b) {
                    ++self_mirrored;
                } else if (std::find(part.begin(), part.end(), neg) == part.end()) {
                    closed = false;
                    break;
                }
            }
            if (closed && self_mirrored == 1) by_pairs[(blocks - 1) / 2] += 1;
            return;
        }
        for (int l = 0; l <= used; ++l) {
            labels[pos] = l;
            rec(pos + 1, std::max(used, l + 1));
        }
    };
    rec(0, 0);
    return by_pairs;
}

bool is_psd(const SymMatrix& x, double tol = 1e-10) { return min_eigenvalue(x) >= -tol; }

int numeric_rank(const SymMatrix& x, double tol = 1e-8) {
    auto d = eigh(x);
    int r = 0;
    for (int i = 0; i < d.eigenvalues.size(); ++i)
        if (std::abs(d.eigenvalues(i)) > tol) ++r;
    return r;
}

} // namespace

TEST_CASE("stirling2 base cases and enumeration oracle") {
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(0, 1) == 0);
    CHECK(stirling2(5, 1) == 1);
    CHECK(stirling2(9, 3) == count_partitions_exact(9, 3));
    CHECK(stirling2(8, 4) == count_partitions_exact(8, 4));
}

TEST_CASE("bell numbers") {
    CHECK(bell(0) == 1);
    CHECK(bell(6) == 203);
    CHECK(bell(10) == 115975);
    for (unsigned n = 0; n <= 12; ++n) {
        mpz_class sum = 0;
        for (unsigned k = 0; k <= n; ++k) sum += stirling2(n, k);
        CHECK(bell(n) == sum);
    }
}

TEST_CASE("btype_stirling matches exhaustive mirror-closed enumeration") {
    CHECK(btype_stirling(1, 0) == 1);
    mpz_class total5 = 0;
    for (unsigned k = 0; k <= 5; ++k) total5 += btype_stirling(5, k);
    CHECK(total5 == 648);
    for (int n = 0; n <= 3; ++n) {
        auto brute = btype_counts_brute(n);
        for (int k = 0; k <= n; ++k) CHECK(btype_stirling(n, k) == brute[k]);
    }
}

TEST_CASE("dowling numbers") {
    CHECK(dowling(0) == 1);
    CHECK(dowling(4) == 116);
    CHECK(dowling(7) == 28640);
    for (unsigned n = 0; n <= 8; ++n) {
        mpz_class sum = 0;
        for (unsigned k = 0; k <= n; ++k) sum += btype_stirling(n, k);
        CHECK(dowling(n) == sum);
    }
}

TEST_CASE("enum_partitions_atmost counts and canonical form") {
    auto drain = [](int m, int kmax) {
        std::vector<BlockPartition> all;
        PartitionStream s(m, kmax);
        while (auto p = s.next()) all.push_back(*p);
        return all;
    };
    CHECK(drain(3, 2).size() == 4);
    CHECK(drain(4, 1).size() == 1);
    for (int m = 1; m <= 6; ++m) {
        auto all = drain(m, m);
        CHECK(mpz_class(static_cast<unsigned long>(all.size())) == bell(m));
        for (const auto& p : all) CHECK(p.is_restricted_growth());
    }

    // determinism: two passes produce the same sequence
    PartitionStream a(5, 3), b(5, 3);
    while (true) {
        auto pa = a.next(), pb = b.next();
        REQUIRE(pa.has_value() == pb.has_value());
        if (!pa) break;
        CHECK(pa->labels == pb->labels);
    }
}

TEST_CASE("enum_dhat small cases") {
    auto d22 = enum_dhat(2, 2);
    REQUIRE(d22.size() == 2);
    CHECK(d22[0](0, 1) == 1.0);  // same block
    CHECK(d22[1](0, 1) == -1.0); // split
    CHECK(d22[0](0, 0) == 1.0);

    auto d32 = enum_dhat(3, 2);
    REQUIRE(d32.size() == 4);
    for (const auto& x : d32) CHECK(is_psd(x));

    long expect = 0;
    for (unsigned j = 1; j <= 3; ++j) expect += stirling2(7, j).get_si();
    CHECK(expect == 365);
    CHECK(enum_dhat(7, 3).size() == 365);
}

TEST_CASE("enum_dhat matrices are distinct, PSD, rank-bounded and transitive") {
    for (int k : {2, 3}) {
        auto lib = enum_dhat(5, k);
        std::set<std::vector<double>> seen;
        for (const auto& x : lib) {
            std::vector<double> flat;
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j) flat.push_back(x(i, j));
            CHECK(seen.insert(flat).second);
            CHECK(is_psd(x));
            CHECK(numeric_rank(x) <= k - 1);
            // same-block relation is transitive
            for (int a = 0; a < 5; ++a)
                for (int b = 0; b < 5; ++b)
                    for (int c = 0; c < 5; ++c)
                        if (x(a, b) == 1.0 && x(b, c) == 1.0) CHECK(x(a, c) == 1.0);
        }
    }
}

TEST_CASE("enum_s01 counts and membership") {
    auto count = [](int n, int r) {
        long c = 0;
        S01Stream s(n, r);
        while (s.next()) ++c;
        return c;
    };
    CHECK(count(5, 5) == 203);
    CHECK(count(4, 3) == 51);
    CHECK(count_s01(5, 5) == 203);
    CHECK(count_s01(4, 3) == 51);

    S01Stream s(5, 3);
    while (auto x = s.next()) {
        CHECK(is_psd(*x));
        CHECK(numeric_rank(*x) <= 3);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) CHECK(((*x)(i, j) == 0.0 || (*x)(i, j) == 1.0));
    }
}

TEST_CASE("enum_s0pm1 counts and membership") {
    auto count = [](int n, int r) {
        long c = 0;
        S0pm1Stream s(n, r);
        while (s.next()) ++c;
        return c;
    };
    CHECK(count(5, 5) == 648);
    CHECK(count(6, 3) == 3656);
    CHECK(count_s0pm1(5, 5) == 648);
    CHECK(count_s0pm1(6, 3) == 3656);

    S0pm1Stream s(4, 2);
    std::set<std::vector<double>> seen;
    while (auto x = s.next()) {
        CHECK(is_psd(*x));
        CHECK(numeric_rank(*x) <= 2);
        std::vector<double> flat;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                double v = (*x)(i, j);
                CHECK((v == 0.0 || v == 1.0 || v == -1.0));
                flat.push_back(v);
            }
        CHECK(seen.insert(flat).second);
    }
    CHECK(mpz_class(static_cast<unsigned long>(seen.size())) == count_s0pm1(4, 2));
}

TEST_CASE("rank-1 signed count includes the zero matrix") {
    // 1 + sum_k C(n,k) 2^{k-1} at n = 2 gives 5; the "+1" is X = 0.
    long c = 0;
    bool saw_zero = false;
    S0pm1Stream s(2, 1);
    while (auto x = s.next()) {
        ++c;
        if (frob_norm(*x) == 0.0) saw_zero = true;
    }
    CHECK(c == 5);
    CHECK(saw_zero);
}

TEST_CASE("stream determinism for the signed family") {
    S0pm1Stream a(4, 3), b(4, 3);
    while (true) {
        auto xa = a.next(), xb = b.next();
        REQUIRE(xa.has_value() == xb.has_value());
        if (!xa) break;
        CHECK(frob_norm(*xa - *xb) == 0.0);
    }
}

TEST_CASE("table of cardinalities, n = 3..6 slice") {
    const long s01_r3[] = {15, 51, 187, 715};
    const long s01_all[] = {15, 52, 203, 877};
    const long spm_r3[] = {24, 115, 622, 3656};
    const long spm_all[] = {24, 116, 648, 4088};
    for (int n = 3; n <= 6; ++n) {
        CHECK(count_s01(n, std::min(n, 3)) == s01_r3[n - 3]);
        CHECK(count_s01(n, n) == s01_all[n - 3]);
        CHECK(count_s0pm1(n, std::min(n, 3)) == spm_r3[n - 3]);
        CHECK(count_s0pm1(n, n) == spm_all[n - 3]);
    }
}
