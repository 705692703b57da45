#include "superhowe/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace howe {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: nonpositive part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must weakly decrease");
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        const std::string piece(text.substr(pos, comma - pos));
        if (!piece.empty()) parts.push_back(std::stoi(piece));
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<std::size_t>(i - 1)];
}

Partition Partition::transpose() const {
    std::vector<int> t(static_cast<std::size_t>(width()), 0);
    for (int row : parts_)
        for (int j = 0; j < row; ++j) ++t[static_cast<std::size_t>(j)];
    return Partition(std::move(t));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

bool Partition::all_even_rows() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int r) { return r % 2 == 0; });
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int next = std::min(remaining, max_part); next >= 1; --next) {
        acc.push_back(next);
        gen_partitions(remaining - next, next, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int k) {
    if (k < 0) return {};
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(k, k == 0 ? 1 : k, acc, out);
    return out;
}

std::vector<Partition> hook_partitions(int k, int p, int q, int m, int n) {
    std::vector<Partition> out;
    for (const Partition& lam : partitions_of(k))
        if (lam.in_hook(p, q) && lam.in_hook(m, n)) out.push_back(lam);
    return out;
}

std::vector<Partition> even_partitions(int k2, int m, int n) {
    std::vector<Partition> out;
    for (const Partition& lam : partitions_of(k2))
        if (lam.all_even_rows() && lam.in_hook(m, n)) out.push_back(lam);
    return out;
}

bool is_nested_hook(const Partition& lambda, HookFlavor flavor) {
    // peel principal hooks at (i,i); arms/legs strictly decrease automatically
    const Partition lt = lambda.transpose();
    const int d = [&] {
        int i = 1;
        while (lambda.part(i) >= i) ++i;
        return i - 1;
    }();
    for (int i = 1; i <= d; ++i) {
        const int arm = lambda.part(i) - i;
        const int leg = lt.part(i) - i;
        if (flavor == HookFlavor::arm_long) {
            if (arm != leg + 1) return false;
        } else {
            if (leg != arm + 1) return false;
        }
    }
    return true;
}

std::vector<Partition> nested_hook_partitions(int k2, int m, int n, HookFlavor flavor) {
    std::vector<Partition> out;
    for (const Partition& lam : partitions_of(k2))
        if (is_nested_hook(lam, flavor) && lam.in_hook(m, n)) out.push_back(lam);
    return out;
}

namespace {

void gen_sub(const Partition& lambda, int row, int prev, int max_len, std::vector<int>& acc,
             std::vector<Partition>& out) {
    out.emplace_back(acc);
    if (row > max_len || row > lambda.length()) return;
    for (int v = std::min(prev, lambda.part(row)); v >= 1; --v) {
        acc.push_back(v);
        gen_sub(lambda, row + 1, v, max_len, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> subpartitions(const Partition& lambda, int max_len) {
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_sub(lambda, 1, lambda.width(), max_len, acc, out);
    return out;
}

}  // namespace howe
