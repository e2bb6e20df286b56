#include "lagsdp/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace lagsdp {

int BlockPartition::block_count() const {
    int mx = -1;
    for (int l : labels) mx = std::max(mx, l);
    return mx + 1;
}

bool BlockPartition::is_restricted_growth() const {
    if (static_cast<int>(labels.size()) != m || m < 1) return false;
    int mx = -1;
    for (int l : labels) {
        if (l < 0 || l > mx + 1) return false;
        mx = std::max(mx, l);
    }
    return true;
}

mpz_class stirling2(unsigned n, unsigned k) {
    // Row-at-a-time recurrence S(n+1,k) = k S(n,k) + S(n,k-1).
    if (k > n) return 0;
    std::vector<mpz_class> row(k + 1, 0);
    row[0] = 1; // S(0,0)
    for (unsigned i = 1; i <= n; ++i) {
        unsigned top = std::min(i, k);
        for (unsigned j = top; j >= 1; --j) row[j] = j * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

mpz_class bell(unsigned n) {
    mpz_class total = 0;
    for (unsigned k = 0; k <= n; ++k) total += stirling2(n, k);
    return total;
}

mpz_class btype_stirling(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::vector<mpz_class> row(k + 1, 0);
    row[0] = 1; // S_B(0,0)
    for (unsigned i = 1; i <= n; ++i) {
        unsigned top = std::min(i, k);
        for (unsigned j = top; j >= 1; --j) row[j] = (2 * j + 1) * row[j] + row[j - 1];
        row[0] = 1; // S_B(i,0) = 1: everything in the zero-block
    }
    return row[k];
}

mpz_class dowling(unsigned n) {
    mpz_class total = 0;
    for (unsigned k = 0; k <= n; ++k) total += btype_stirling(n, k);
    return total;
}

mpz_class count_s01(unsigned n, unsigned r) {
    mpz_class total = 0;
    for (unsigned k = 0; k <= r + 1; ++k) total += stirling2(n + 1, k);
    return total;
}

mpz_class count_s0pm1(unsigned n, unsigned r) {
    mpz_class total = 0;
    for (unsigned k = 0; k <= r; ++k) total += btype_stirling(n, k);
    return total;
}

PartitionStream::PartitionStream(int m, int kmax) : m_(m), kmax_(kmax) {
    if (m < 1 || kmax < 1) throw std::invalid_argument("PartitionStream: m, kmax must be >= 1");
    labels_.assign(m, 0);
    prefix_max_.assign(m, 0);
}

bool PartitionStream::advance() {
    // Rightmost position that can still grow; labels_[0] is pinned to 0.
    for (int i = m_ - 1; i >= 1; --i) {
        int cap = std::min(prefix_max_[i - 1] + 1, kmax_ - 1);
        if (labels_[i] < cap) {
            ++labels_[i];
            prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
            for (int j = i + 1; j < m_; ++j) {
                labels_[j] = 0;
                prefix_max_[j] = prefix_max_[i];
            }
            return true;
        }
    }
    return false;
}

std::optional<BlockPartition> PartitionStream::next() {
    if (done_) return std::nullopt;
    if (started_) {
        if (!advance()) {
            done_ = true;
            return std::nullopt;
        }
    }
    started_ = true;
    return BlockPartition{m_, labels_};
}

SymMatrix partition_to_dhat(const BlockPartition& p, int k) {
    const double off = -1.0 / (k - 1);
    SymMatrix x(p.m);
    for (int i = 0; i < p.m; ++i)
        for (int j = i; j < p.m; ++j)
            x.set(i, j, i == j ? 1.0 : (p.labels[i] == p.labels[j] ? 1.0 : off));
    return x;
}

std::vector<SymMatrix> enum_dhat(int m, int k) {
    if (m < 1 || k < 2) throw std::invalid_argument("enum_dhat: need m >= 1, k >= 2");
    std::vector<SymMatrix> out;
    PartitionStream ps(m, k);
    while (auto p = ps.next()) out.push_back(partition_to_dhat(*p, k));
    return out;
}

S01Stream::S01Stream(int n, int r) : n_(n), parts_(n + 1, r + 1) {
    if (r < 1 || r > n) throw std::invalid_argument("S01Stream: need 1 <= r <= n");
}

std::optional<SymMatrix> S01Stream::next() {
    auto p = parts_.next();
    if (!p) return std::nullopt;
    // Element 0 of the partition is the added zero marker; its block (label 0)
    // collects the indices outside every support.
    SymMatrix x(n_);
    for (int i = 0; i < n_; ++i) {
        int li = p->labels[i + 1];
        if (li == 0) continue;
        for (int j = i; j < n_; ++j)
            if (p->labels[j + 1] == li) x.set(i, j, 1.0);
    }
    return x;
}

S0pm1Stream::S0pm1Stream(int n, int r) : n_(n), r_(r) {
    if (r < 1 || r > n) throw std::invalid_argument("S0pm1Stream: need 1 <= r <= n");
    labels_.assign(n, 0);
    sign_.assign(n, 1);
}

void S0pm1Stream::reset_signs() {
    free_slots_.clear();
    std::vector<bool> seen(r_ + 1, false);
    for (int i = 0; i < n_; ++i) {
        sign_[i] = 1;
        int l = labels_[i];
        if (l > 0) {
            if (seen[l]) free_slots_.push_back(i); // non-leading element: sign free
            seen[l] = true;
        }
    }
}

bool S0pm1Stream::advance_signs() {
    // Binary odometer over the free sign slots, rightmost fastest.
    for (int idx = static_cast<int>(free_slots_.size()) - 1; idx >= 0; --idx) {
        int i = free_slots_[idx];
        if (sign_[i] == 1) {
            sign_[i] = -1;
            for (size_t j = idx + 1; j < free_slots_.size(); ++j) sign_[free_slots_[j]] = 1;
            return true;
        }
    }
    return false;
}

bool S0pm1Stream::advance_labels() {
    // Restricted growth on positive labels; 0 marks the zero-block and is
    // always admissible.
    for (int i = n_ - 1; i >= 0; --i) {
        int mx = 0;
        for (int j = 0; j < i; ++j) mx = std::max(mx, labels_[j]);
        int cap = std::min(mx + 1, r_);
        if (labels_[i] < cap) {
            ++labels_[i];
            for (int j = i + 1; j < n_; ++j) labels_[j] = 0;
            return true;
        }
    }
    return false;
}

SymMatrix S0pm1Stream::current() const {
    SymMatrix x(n_);
    for (int i = 0; i < n_; ++i) {
        if (labels_[i] == 0) continue;
        for (int j = i; j < n_; ++j)
            if (labels_[j] == labels_[i])
                x.set(i, j, static_cast<double>(sign_[i] * sign_[j]));
    }
    return x;
}

std::optional<SymMatrix> S0pm1Stream::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        reset_signs();
        return current();
    }
    if (advance_signs()) return current();
    if (!advance_labels()) {
        done_ = true;
        return std::nullopt;
    }
    reset_signs();
    return current();
}

} // namespace lagsdp
