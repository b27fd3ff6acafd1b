#include "saxl/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "saxl/counting.hpp"

namespace saxl {

PartitionSampler::PartitionSampler(long long n) : n_(n) {
    if (n < 0) throw std::invalid_argument("sampler: negative n");
    if (n > 5000)
        throw std::invalid_argument("sampler: n > 5000 would overflow the counting words");
    tri_.resize((size_t)((n + 1) * (n + 2) / 2));
    for (long long m = 0; m <= n; ++m) {
        size_t base = (size_t)(m * (m + 1) / 2);
        for (long long j = 0; j <= m; ++j) {
            if (j == 0) {
                tri_[base] = (m == 0) ? 1 : 0;
                continue;
            }
            U v = tri_[base + j - 1];  // largest part < j
            long long m2 = m - j;      // or take one part equal to j
            v += tri_[(size_t)(m2 * (m2 + 1) / 2 + std::min(j, m2))];
            tri_[base + j] = v;
        }
    }
}

const PartitionSampler::U& PartitionSampler::cnt(long long m, long long j) const {
    if (j > m) j = m;
    return tri_[(size_t)(m * (m + 1) / 2 + j)];
}

Int PartitionSampler::count() const { return cnt(n_, n_).convert_to<Int>(); }

Partition PartitionSampler::unrank(const Int& index) const {
    if (index < 0 || index >= count())
        throw std::invalid_argument("unrank: index out of range");
    U idx = index.convert_to<U>();
    std::vector<int> parts;
    long long rem = n_, bound = n_;
    while (rem > 0) {
        long long top = std::min(bound, rem);
        const U& total = cnt(rem, top);
        U target = total - idx;
        // Smallest first part f whose cumulative block reaches the target
        // (blocks are ordered by first part descending).
        long long lo = 1, hi = top;
        while (lo < hi) {
            long long mid = lo + (hi - lo) / 2;
            if (cnt(rem, mid) >= target)
                hi = mid;
            else
                lo = mid + 1;
        }
        idx -= total - cnt(rem, lo);
        parts.push_back((int)lo);
        rem -= lo;
        bound = lo;
    }
    return Partition(std::move(parts));
}

Int PartitionSampler::rank(const Partition& p) const {
    if (p.n() != n_) throw std::invalid_argument("rank: partition has the wrong size");
    U r = 0;
    long long rem = n_, bound = n_;
    for (int f : p.parts()) {
        r += cnt(rem, std::min(bound, rem)) - cnt(rem, f);
        rem -= f;
        bound = f;
    }
    return r.convert_to<Int>();
}

PartitionSampler::U PartitionSampler::draw_below(const U& bound,
                                                 std::mt19937_64& rng) const {
    internal_check(bound > 0, "draw_below: empty range");
    if (bound == 1) return 0;
    unsigned bits = boost::multiprecision::msb(bound) + 1;
    unsigned words = (bits + 63) / 64;
    const U mask = (U(1) << bits) - 1;
    for (;;) {
        U x = 0;
        for (unsigned w = 0; w < words; ++w) {
            x <<= 64;
            x |= (std::uint64_t)rng();
        }
        x &= mask;
        if (x < bound) return x;
    }
}

Partition PartitionSampler::sample(std::mt19937_64& rng) const {
    return unrank(draw_below(cnt(n_, n_), rng).convert_to<Int>());
}

SelfConjugateSampler::SelfConjugateSampler(long long n) : n_(n) {
    if (n < 0) throw std::invalid_argument("sampler: negative n");
    if (n > 1000)
        throw std::invalid_argument("sampler: n > 1000 is not supported for "
                                    "self-conjugate sampling");
    tmax_ = (n + 1) / 2;  // odd values 1, 3, ..., 2*tmax - 1
    tab_.assign((size_t)((n + 1) * (tmax_ + 1)), U(0));
    for (long long m = 0; m <= n; ++m) {
        for (long long t = 0; t <= tmax_; ++t) {
            if (m == 0) {
                tab_[(size_t)(m * (tmax_ + 1) + t)] = 1;
                continue;
            }
            if (t == 0) continue;  // stays 0
            U v = tab_[(size_t)(m * (tmax_ + 1) + t - 1)];
            long long part = 2 * t - 1;
            if (m >= part) v += tab_[(size_t)((m - part) * (tmax_ + 1) + t - 1)];
            tab_[(size_t)(m * (tmax_ + 1) + t)] = v;
        }
    }
}

const SelfConjugateSampler::U& SelfConjugateSampler::cnt(long long m, long long t) const {
    if (t > tmax_) t = tmax_;
    return tab_[(size_t)(m * (tmax_ + 1) + t)];
}

Int SelfConjugateSampler::count() const { return cnt(n_, tmax_).convert_to<Int>(); }

Partition SelfConjugateSampler::unrank(const Int& index) const {
    if (index < 0 || index >= count())
        throw std::invalid_argument("unrank: index out of range");
    U idx = index.convert_to<U>();
    std::vector<int> hooks;
    long long rem = n_;
    long long tbound = tmax_;
    while (rem > 0) {
        long long top = std::min(tbound, (rem + 1) / 2);
        const U& total = cnt(rem, top);
        U target = total - idx;
        long long lo = 1, hi = top;
        while (lo < hi) {
            long long mid = lo + (hi - lo) / 2;
            if (cnt(rem, mid) >= target)
                hi = mid;
            else
                lo = mid + 1;
        }
        idx -= total - cnt(rem, lo);
        hooks.push_back((int)(2 * lo - 1));
        rem -= 2 * lo - 1;
        tbound = lo - 1;
    }
    return self_conjugate_from_hooks(hooks);
}

Partition SelfConjugateSampler::sample(std::mt19937_64& rng) const {
    const U& total = cnt(n_, tmax_);
    if (total == 0)
        throw std::invalid_argument("sample: no self-conjugate partitions of this n");
    // Same rejection scheme as the plain sampler.
    unsigned bits = total == 1 ? 1 : boost::multiprecision::msb(total) + 1;
    unsigned words = (bits + 63) / 64;
    const U mask = (U(1) << bits) - 1;
    for (;;) {
        U x = 0;
        for (unsigned w = 0; w < words; ++w) {
            x <<= 64;
            x |= (std::uint64_t)rng();
        }
        x &= mask;
        if (x < total) return unrank(x.convert_to<Int>());
    }
}

double ZeroDensityReport::ratio(const Int& x) const {
    if (total == 0) return 0.0;
    return x.convert_to<double>() / total.convert_to<double>();
}

ZeroDensityReport zero_density_from_table(const CharTable& table) {
    ZeroDensityReport rep;
    rep.n = table.n;
    const long long C = (long long)table.shapes.size();
    rep.total = Int(C) * C;
    for (const auto& row : table.values)
        for (const auto& v : row) {
            if (v == 0)
                ++rep.zeros;
            else if (v == 1)
                ++rep.ones;
        }
    return rep;
}

ZeroDensityReport zero_density(long long n, int workers) {
    return zero_density_from_table(char_table(n, workers));
}

double CaretVanishingReport::zero_fraction() const {
    return zeros.convert_to<double>() / total.convert_to<double>();
}

double CaretVanishingReport::nonempty_core_fraction() const {
    return nonempty_core.convert_to<double>() / total.convert_to<double>();
}

CaretVanishingReport caret_vanishing_fraction(int k) {
    if (k < 1) throw std::invalid_argument("caret_vanishing_fraction: k must be positive");
    CaretVanishingReport rep;
    rep.k = k;
    const Partition mu = caret(k);
    rep.n = mu.n();
    ClassEvaluator ev(principal_hooks(mu).as_partition());
    const long long top = principal_hooks(mu).hooks[0];
    for_each_partition(rep.n, [&](const Partition& lambda) {
        ++rep.total;
        bool zero = (lambda.first() + lambda.length() - 1 < top) || ev.value(lambda) == 0;
        if (zero) ++rep.zeros;
        if (!k_core(lambda, 3).empty()) ++rep.nonempty_core;
    });
    rep.empty_core_count = pi_k_table(3, k * (long long)k).values[k * (long long)k];
    internal_check(rep.total == pi_table(rep.n).values[rep.n],
                   "caret_vanishing_fraction: enumeration disagrees with the series");
    internal_check(rep.total - rep.nonempty_core == rep.empty_core_count,
                   "caret_vanishing_fraction: empty-core count disagrees with the series");
    return rep;
}

ExperimentReport random_char_experiment(long long n, long long trials, ExperimentMode mode,
                                        unsigned long long seed) {
    if (n < 1) throw std::invalid_argument("experiment: n must be positive");
    if (trials < 1) throw std::invalid_argument("experiment: trials must be positive");
    ExperimentReport rep;
    rep.n = n;
    rep.trials = trials;
    rep.mode = mode;
    rep.seed = seed;

    std::mt19937_64 rng(seed);
    PartitionSampler rows(n);
    SelfConjugateSampler* sc = nullptr;
    SelfConjugateSampler sc_storage(mode == ExperimentMode::SelfConjugateHooks ? n : 0);
    if (mode == ExperimentMode::SelfConjugateHooks) {
        if (sc_storage.count() == 0)
            throw std::invalid_argument("experiment: no self-conjugate partitions of this n");
        sc = &sc_storage;
    }

    for (long long t = 0; t < trials; ++t) {
        Partition lambda = rows.sample(rng);
        Partition cls = (mode == ExperimentMode::PlainClass)
                            ? rows.sample(rng)
                            : principal_hooks(sc->sample(rng)).as_partition();
        if (mn_char(lambda, cls) == 0) ++rep.zeros;
    }

    const double T = (double)trials;
    const double ph = (double)rep.zeros / T;
    const double z = 1.959963984540054;  // 95% normal quantile
    const double denom = 1.0 + z * z / T;
    const double center = ph + z * z / (2.0 * T);
    const double half = z * std::sqrt(ph * (1.0 - ph) / T + z * z / (4.0 * T * T));
    rep.estimate = ph;
    rep.wilson_low = std::max(0.0, (center - half) / denom);
    rep.wilson_high = std::min(1.0, (center + half) / denom);
    return rep;
}

}  // namespace saxl
