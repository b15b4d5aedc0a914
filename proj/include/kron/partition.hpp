#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kron {

// A partition stored in canonical form: weakly decreasing positive parts,
// no trailing zeros.  The empty partition is valid.  Immutable after
// construction; all operations on partitions are pure functions.
class Partition {
public:
    Partition() = default;
    // Canonicalizes: sorts descending and drops zeros.  Negative parts throw.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    // Parses a comma-separated part list, e.g. "3,1".  "" denotes the
    // empty partition.  Malformed input throws std::invalid_argument.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }                       // |λ|
    int length() const { return static_cast<int>(parts_.size()); }  // ℓ(λ)
    bool empty() const { return parts_.empty(); }

    // 1-based part access; parts beyond ℓ(λ) read as 0.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    // inner_i ≤ λ_i for all i (Young-diagram containment).
    bool contains(const Partition& inner) const;
    bool fits_in_rectangle(int d, int n) const { return length() <= n && part(1) <= d; }

    // "3,1"; "" for the empty partition.
    std::string to_string() const;
    // "(3,1)"; "()" for the empty partition.  Used in human-readable output.
    std::string display() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    // Lexicographic on the part vector; gives the documented decreasing-lex
    // enumeration order when iterated in reverse.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Transpose of the Young diagram; an involution.
Partition conjugate(const Partition& lambda);

// ν↦θ: ν_i ≥ θ_i ≥ ν_{i+1} for all i, missing parts read as 0.
bool interlaces(const Partition& nu, const Partition& theta);

// All θ with ν↦θ, in decreasing lexicographic order.
std::vector<Partition> pieri_down(const Partition& nu);

// All ν with |ν| = target_size and ν↦θ, in decreasing lexicographic order.
// Empty when target_size < |θ|.
std::vector<Partition> pieri_up(const Partition& theta, int target_size);

// β with β_i = d − α_{n−i+1} if α fits in the d×n rectangle, absent
// otherwise.  Self-inverse on partitions fitting the rectangle.
std::optional<Partition> complement_in_rectangle(const Partition& alpha, int d, int n);

// The rectangle partition (d^n).
Partition rectangle(int d, int n);

// Part-wise sum, padding the shorter with zeros.
Partition partwise_sum(const Partition& a, const Partition& b);

struct PartitionFilter {
    std::optional<int> max_length;
    std::optional<int> min_part;
    std::optional<int> max_part;
    bool distinct = false;
    bool odd_only = false;
};

// All partitions of m satisfying the filter, in decreasing lexicographic
// order.  Deterministic; m=0 yields the empty partition alone.
std::vector<Partition> enumerate_partitions(int m, const PartitionFilter& filter = {});

// Partitions of m into distinct odd parts p with lo ≤ p ≤ hi (lo, hi odd).
int count_distinct_odd_in_range(int m, int lo, int hi);

// #{λ ⊢ m : λ = λ^∨}.
int self_conjugate_count(int m);

}  // namespace kron
