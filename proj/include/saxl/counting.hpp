#ifndef SAXL_COUNTING_HPP
#define SAXL_COUNTING_HPP

/*
 * Exact partition-counting series.
 *
 *   pi_table          p(n), via the pentagonal-number recurrence
 *   pi_k_table        coefficients of prod_{i>=1} (1 - t^i)^{-k}
 *                     (k-colored partitions; also counts partitions of k*n
 *                     whose k-core is empty)
 *   pi_prime_*        partitions into DISTINCT parts drawn from a fixed
 *                     set: an infinite arithmetic progression {a, a+m, ...}
 *                     with gcd(a, m) = 1, or an arbitrary finite set R
 *
 * All values are exact big integers.  Finite-set tables are defined for
 * indices 0..N (N = sum of R) and are 0 outside that window, matching the
 * convention used by the character formulas that consume them.
 */

#include <optional>
#include <vector>

#include "saxl/bigint.hpp"

namespace saxl {

enum class SeriesKind { Plain, KColored, ProgressionDistinct, FiniteSetDistinct };

struct CountTable {
    SeriesKind kind = SeriesKind::Plain;
    int k = 0;                 // KColored only
    int a = 0, m = 0;          // ProgressionDistinct only
    std::vector<int> set;      // FiniteSetDistinct only (sorted increasing)
    std::vector<Int> values;   // index 0..limit

    // Value with the out-of-window convention: indices < 0 give 0; indices
    // past the table give 0 for finite-set tables (exact: nothing larger
    // than sum(R) can be formed) and are an error otherwise.
    Int at(long long i) const;

    long long limit() const { return (long long)values.size() - 1; }
};

// Infinite arithmetic progression {a, a+m, a+2m, ...}; gcd(a, m) = 1.
struct ProgressionSpec {
    int a = 1, m = 1;
    ProgressionSpec(int a_, int m_);
    // Elements of the progression that are <= limit.
    std::vector<int> elements_up_to(int limit) const;
};

CountTable pi_table(long long limit);
CountTable pi_k_table(int k, long long limit);
CountTable pi_prime_table(const ProgressionSpec& spec, long long limit);
CountTable pi_prime_set_table(std::vector<int> R);

// Smallest L < floor(N/2) such that values[n+1] > values[n] > 0 at every
// step with L <= n < floor(N/2); nullopt when no such L exists (e.g.
// R = {3}, whose window is vacuous, or sets of odd parts, whose counts
// oscillate by subset-size parity all the way to the peak).
std::optional<long long> monotonicity_threshold(const std::vector<int>& R);

// Exponential-order size estimate exp(c sqrt(n)) / (4 sqrt(3) n) with
// c = pi * sqrt(2/3), and the exact-count-to-estimate ratio.
struct GrowthEstimate {
    double estimate = 0.0;
    double ratio = 0.0;  // exact p(n) divided by the estimate
};
GrowthEstimate hr_estimate(long long n);

}  // namespace saxl

#endif
