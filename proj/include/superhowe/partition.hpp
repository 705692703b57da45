#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace howe {

// Integer partition / Young diagram, parts weakly decreasing and positive.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    static Partition parse(std::string_view text);  // "5,3,2,1"; "" is empty

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    int width() const { return parts_.empty() ? 0 : parts_[0]; }
    int part(int i) const;  // 1-based, 0 beyond the length

    Partition transpose() const;
    bool contains(const Partition& mu) const;  // mu subseteq lambda
    bool in_hook(int m, int n) const { return part(m + 1) <= n; }
    bool all_even_rows() const;

    std::string to_string() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
};

// All partitions of k, deterministic (lex-descending) order.
std::vector<Partition> partitions_of(int k);

// Partitions of k with lambda_{p+1} <= q and lambda_{m+1} <= n.
std::vector<Partition> hook_partitions(int k, int p, int q, int m, int n);

// Partitions of k2 into even parts with lambda_{m+1} <= n.
std::vector<Partition> even_partitions(int k2, int m, int n);

enum class HookFlavor {
    arm_long,  // (k+1,k)-hook: partition (k+1, 1^{k-1}) of length k
    leg_long,  // (k,k+1)-hook: partition (k, 1^k) of length k+1
};

// Principal-hook test: every peeled hook has the flavor's arm/leg shape.
bool is_nested_hook(const Partition& lambda, HookFlavor flavor);

// Partitions of k2 realizable by nesting strictly decreasing hooks of the
// given flavor, with lambda_{m+1} <= n.
std::vector<Partition> nested_hook_partitions(int k2, int m, int n, HookFlavor flavor);

// All mu subseteq lambda with l(mu) <= max_len.
std::vector<Partition> subpartitions(const Partition& lambda, int max_len);

}  // namespace howe
