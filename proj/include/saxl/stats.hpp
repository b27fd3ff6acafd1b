#ifndef SAXL_STATS_HPP
#define SAXL_STATS_HPP

/*
 * Statistical views of character tables and exact uniform sampling of
 * partitions.
 *
 * Sampling is by unranking: a counting triangle cnt(m, j) = #partitions
 * of m with parts <= j (fixed-width 256-bit entries, exact for n <= 5000)
 * defines a bijection between [0, p(n)) and partitions of n in
 * lexicographically decreasing order.  Random indices come from a seeded
 * mt19937_64 with rejection, so every partition is hit with probability
 * exactly 1/p(n) and runs are reproducible per seed.
 *
 * Self-conjugate shapes are sampled the same way through their principal
 * hooks (distinct odd parts).
 */

#include <random>
#include <string>

#include "saxl/character.hpp"
#include "saxl/partition.hpp"

namespace saxl {

class PartitionSampler {
  public:
    explicit PartitionSampler(long long n);  // n <= 5000

    long long n() const { return n_; }
    Int count() const;  // p(n)
    Partition unrank(const Int& index) const;
    Int rank(const Partition& p) const;
    Partition sample(std::mt19937_64& rng) const;

    static constexpr const char* kRngId = "mt19937_64";

  private:
    using U = boost::multiprecision::uint256_t;

    const U& cnt(long long m, long long j) const;
    U draw_below(const U& bound, std::mt19937_64& rng) const;

    long long n_ = 0;
    std::vector<U> tri_;  // cnt(m, j) for 0 <= j <= m <= n, row-major
};

class SelfConjugateSampler {
  public:
    explicit SelfConjugateSampler(long long n);  // n <= 1000

    long long n() const { return n_; }
    Int count() const;
    Partition unrank(const Int& index) const;  // a self-conjugate partition
    Partition sample(std::mt19937_64& rng) const;

  private:
    using U = boost::multiprecision::uint256_t;

    const U& cnt(long long m, long long t) const;  // distinct odd parts <= 2t-1

    long long n_ = 0, tmax_ = 0;
    std::vector<U> tab_;
};

struct ZeroDensityReport {
    long long n = 0;
    Int total = 0;  // number of table entries
    Int zeros = 0;  // entries equal to 0
    Int ones = 0;   // entries equal to +1

    double p() const { return ratio(zeros); }
    double q() const { return ratio(ones); }

  private:
    double ratio(const Int& x) const;
};

ZeroDensityReport zero_density_from_table(const CharTable& table);
ZeroDensityReport zero_density(long long n, int workers = 1);

struct CaretVanishingReport {
    int k = 0;
    long long n = 0;           // 3 k^2
    Int total = 0;             // partitions of n
    Int zeros = 0;             // vanishing certificate at the caret hook class
    Int nonempty_core = 0;     // shapes whose 3-core is non-empty
    Int empty_core_count = 0;  // = coefficient k^2 of the 3-colored series

    double zero_fraction() const;
    double nonempty_core_fraction() const;
};

CaretVanishingReport caret_vanishing_fraction(int k);

enum class ExperimentMode { PlainClass, SelfConjugateHooks };

struct ExperimentReport {
    long long n = 0, trials = 0;
    ExperimentMode mode = ExperimentMode::PlainClass;
    unsigned long long seed = 0;
    long long zeros = 0;  // trials whose character value was 0
    double estimate = 0.0;
    double wilson_low = 0.0, wilson_high = 0.0;  // 95% score interval
    std::string rng = PartitionSampler::kRngId;
};

// PlainClass: chi^lambda[nu] with lambda, nu independent uniform partitions
// of n.  SelfConjugateHooks: chi^lambda at the principal-hook class of a
// uniform self-conjugate mu.
ExperimentReport random_char_experiment(long long n, long long trials, ExperimentMode mode,
                                        unsigned long long seed);

}  // namespace saxl

#endif
