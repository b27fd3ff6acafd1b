#ifndef SAXL_PARTITION_HPP
#define SAXL_PARTITION_HPP

/*
 * Integer partitions and the diagram combinatorics built on them:
 * conjugation, Durfee square, principal hooks, hook lengths, beta-sets
 * (the abacus encoding used for rim-hook removal), k-cores, exact
 * irreducible dimensions, and the three shape families studied by the
 * verification tools (staircase, chopped square, caret).
 */

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "saxl/bigint.hpp"

namespace saxl {

// A partition of a non-negative integer: weakly decreasing positive parts.
// Trailing zeros supplied by the caller are stripped on construction.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    long long n() const { return n_; }                      // sum of parts
    int length() const { return (int)parts_.size(); }      // number of rows
    bool empty() const { return parts_.empty(); }

    // 0-based row access; rows past the last are 0.
    int part(int i) const {
        return (i >= 0 && i < (int)parts_.size()) ? parts_[i] : 0;
    }
    int first() const { return parts_.empty() ? 0 : parts_[0]; }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    // Lexicographic order on part sequences ((4) > (3,1) > (2,2) > ...).
    std::strong_ordering operator<=>(const Partition& o) const {
        return parts_ <=> o.parts_;
    }

    // Cell-wise containment (used for skew shapes).
    bool contains(const Partition& inner) const;

    std::string to_string() const;  // "[4,3,2,1]"; "[]" when empty

  private:
    std::vector<int> parts_;
    long long n_ = 0;
};

// Validating constructor helpers.  Reject negative parts and increasing
// sequences; zeros are legal only as a trailing run.
Partition make_partition(std::vector<int> parts);

// Parse bracket syntax: "[4,3,2,1]", "[]", and the exponent shorthand
// "[3^2,2]" meaning (3,3,2).  Whitespace is ignored.
Partition parse_partition(const std::string& text);

Partition conjugate(const Partition& p);
bool is_self_conjugate(const Partition& p);

// Side of the largest square contained in the diagram.
int durfee(const Partition& p);

// Principal hook lengths h_11 > h_22 > ... > h_dd (d = Durfee size).
struct PrincipalHooks {
    std::vector<int> hooks;

    long long sum() const {
        long long s = 0;
        for (int h : hooks) s += h;
        return s;
    }
    // The hooks, viewed as a partition (strictly decreasing parts).
    Partition as_partition() const { return Partition(hooks); }
    bool operator==(const PrincipalHooks&) const = default;
};

PrincipalHooks principal_hooks(const Partition& p);

// Does the partition have distinct odd parts (the principal-hook type of
// a self-conjugate shape)?
bool has_distinct_odd_parts(const Partition& p);

// Rebuild the self-conjugate partition whose principal hooks are the given
// strictly decreasing odd values.
Partition self_conjugate_from_hooks(const std::vector<int>& hooks);

// Full hook-length table, row-major over diagram cells.
std::vector<std::vector<int>> hook_lengths(const Partition& p);

// Beta-set (abacus) encoding: beads b_i = p_i + L - i for i = 1..L, a
// strictly decreasing sequence of distinct non-negative integers.
struct BetaSet {
    std::vector<int> beads;  // strictly decreasing
    bool operator==(const BetaSet&) const = default;
};

BetaSet to_beta_set(const Partition& p, int length);  // length >= rows
Partition from_beta_set(const BetaSet& b);

// k-core: what remains after removing rim hooks of size k until none is
// left.  Computed on the abacus (result is independent of removal order).
Partition k_core(const Partition& p, int k);

// Exact dimension of the irreducible indexed by p (hook-length formula,
// the division is exact).
Int dimension(const Partition& p);

// Enumeration of all partitions of n in lexicographically decreasing
// order: (n) first, (1^n) last.
void for_each_partition(long long n, const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_partitions(long long n);

// Self-conjugate partitions of n, enumerated via their principal hooks
// (distinct odd parts, lexicographically decreasing hook sequences).
void for_each_self_conjugate(long long n, const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_self_conjugate(long long n);

// Shape families.  All three are self-conjugate.
Partition staircase(int k);       // (k, k-1, ..., 1),      n = k(k+1)/2
Partition chopped_square(int k);  // (k^(k-1), k-1),        n = k^2 - 1
Partition caret(int k);           // see implementation,     n = 3 k^2

// Hash support for partition-keyed tables.
struct PartitionHash {
    std::size_t operator()(const Partition& p) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int x : p.parts()) {
            h ^= (std::uint64_t)x;
            h *= 1099511628211ull;
        }
        return (std::size_t)h;
    }
};

}  // namespace saxl

#endif
