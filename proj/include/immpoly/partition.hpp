#pragma once

#include <compare>
#include <string>
#include <vector>

namespace immpoly {

// An integer partition: weakly decreasing positive parts.  The empty
// partition is the unique partition of 0.  Partitions do double duty as
// cycle types of permutations (parts = cycle lengths, including 1-cycles).
class Partition {
public:
    Partition() = default;
    // Throws std::invalid_argument unless parts are positive and weakly
    // decreasing.
    explicit Partition(std::vector<int> parts);

    // (k, 1^{n-k}); requires 1 <= k <= n.
    static Partition hook(int n, int k);
    static Partition single_row(int n);     // (n), n >= 0
    static Partition single_column(int n);  // (1^n), n >= 0

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_[i]; }
    bool empty() const { return parts_.empty(); }

    // Number of parts equal to l.
    int multiplicity(int l) const;

    // True iff shape is (k, 1^{n-k}) for some k (every nonempty partition
    // with at most one part exceeding 1).
    bool is_hook() const;

    // This partition with `extra` additional parts equal to 1.
    Partition padded_with_ones(int extra) const;

    // Partition with the part at index `i` removed.
    Partition without_part(int i) const;

    bool operator==(const Partition&) const = default;
    // Lexicographic on the part sequence; usable as a map key.
    std::strong_ordering operator<=>(const Partition& o) const
    {
        return parts_ <=> o.parts_;
    }

    std::string to_string() const;  // "(3,1,1)", "()" for empty

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// Canonical output order: (n) first, (1^n) last.  For equal-weight
// partitions this is descending lexicographic comparison of part lists.
inline bool reverse_lex_less(const Partition& a, const Partition& b)
{
    return b.parts() < a.parts();
}

// All partitions of n in reverse-lexicographic order:
// (n), (n-1,1), ..., (1^n).  n = 0 yields just the empty partition.
std::vector<Partition> enumerate_partitions(int n);

// Number of partitions of n (independent of enumerate_partitions; used to
// cross-check it).
long long partition_count(int n);

// Multiplicity view of a cycle type inside S_n: count(l) = number of parts
// equal to l.  Tracks the ambient degree n = sum of l*count(l).
class CycleTypeCounts {
public:
    // Counts indexed by length 1..n.
    explicit CycleTypeCounts(const Partition& type);
    CycleTypeCounts(int n, std::vector<int> counts_by_length);

    int degree() const { return n_; }
    int count(int l) const;
    int max_length() const;
    Partition to_partition() const;

    bool operator==(const CycleTypeCounts&) const = default;

private:
    int n_ = 0;
    std::vector<int> counts_;  // counts_[l] for l in 1..n; counts_[0] unused
};

// Parses "3,2,1" or "hook:2" (hook needs the ambient n) or "()" for the
// empty partition.  Throws std::invalid_argument on malformed input.
Partition parse_partition_spec(const std::string& spec, int n);

}  // namespace immpoly
