#include "saxl/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace saxl {

Int CountTable::at(long long i) const {
    if (i < 0) return 0;
    if (i < (long long)values.size()) return values[i];
    if (kind == SeriesKind::FiniteSetDistinct) return 0;
    throw std::out_of_range("CountTable::at: index beyond computed limit");
}

ProgressionSpec::ProgressionSpec(int a_, int m_) : a(a_), m(m_) {
    if (a < 1 || m < 1)
        throw std::invalid_argument("progression: a and m must be positive");
    if (std::gcd(a, m) != 1)
        throw std::invalid_argument("progression: a and m must be coprime");
}

std::vector<int> ProgressionSpec::elements_up_to(int limit) const {
    std::vector<int> out;
    for (long long v = a; v <= limit; v += m) out.push_back((int)v);
    return out;
}

CountTable pi_table(long long limit) {
    if (limit < 0) throw std::invalid_argument("pi_table: negative limit");
    CountTable t;
    t.kind = SeriesKind::Plain;
    t.values.assign(limit + 1, 0);
    t.values[0] = 1;
    // p(n) = sum_{j>=1} (-1)^(j-1) [ p(n - j(3j-1)/2) + p(n - j(3j+1)/2) ]
    for (long long n = 1; n <= limit; ++n) {
        Int acc = 0;
        for (long long j = 1;; ++j) {
            long long g1 = j * (3 * j - 1) / 2;
            long long g2 = j * (3 * j + 1) / 2;
            if (g1 > n) break;
            if (j % 2 == 1) {
                acc += t.values[n - g1];
                if (g2 <= n) acc += t.values[n - g2];
            } else {
                acc -= t.values[n - g1];
                if (g2 <= n) acc -= t.values[n - g2];
            }
        }
        t.values[n] = acc;
    }
    return t;
}

CountTable pi_k_table(int k, long long limit) {
    if (k < 1) throw std::invalid_argument("pi_k_table: k must be positive");
    if (limit < 0) throw std::invalid_argument("pi_k_table: negative limit");
    CountTable t;
    t.kind = SeriesKind::KColored;
    t.k = k;
    t.values.assign(limit + 1, 0);
    t.values[0] = 1;
    // Multiply k copies of 1/(1 - t^i) for each i.
    for (long long i = 1; i <= limit; ++i)
        for (int rep = 0; rep < k; ++rep)
            for (long long j = i; j <= limit; ++j) t.values[j] += t.values[j - i];
    return t;
}

namespace {

// Distinct-part generating function over the given parts.
std::vector<Int> distinct_part_counts(const std::vector<int>& parts, long long limit) {
    std::vector<Int> v(limit + 1, 0);
    v[0] = 1;
    for (int p : parts)
        for (long long j = limit; j >= p; --j) v[j] += v[j - p];
    return v;
}

}  // namespace

CountTable pi_prime_table(const ProgressionSpec& spec, long long limit) {
    if (limit < 0) throw std::invalid_argument("pi_prime_table: negative limit");
    CountTable t;
    t.kind = SeriesKind::ProgressionDistinct;
    t.a = spec.a;
    t.m = spec.m;
    t.values = distinct_part_counts(spec.elements_up_to((int)limit), limit);
    return t;
}

CountTable pi_prime_set_table(std::vector<int> R) {
    std::sort(R.begin(), R.end());
    long long N = 0;
    for (size_t i = 0; i < R.size(); ++i) {
        if (R[i] < 1)
            throw std::invalid_argument("pi_prime_set_table: parts must be positive");
        if (i > 0 && R[i] == R[i - 1])
            throw std::invalid_argument("pi_prime_set_table: parts must be distinct");
        N += R[i];
    }
    CountTable t;
    t.kind = SeriesKind::FiniteSetDistinct;
    t.set = std::move(R);
    t.values = distinct_part_counts(t.set, N);
    return t;
}

std::optional<long long> monotonicity_threshold(const std::vector<int>& R) {
    CountTable t = pi_prime_set_table(R);
    long long half = (long long)(t.values.size() - 1) / 2;  // floor(N/2)
    // Walk backwards from the midpoint while every step n -> n+1 keeps
    // strictly rising from a positive value.
    long long L = half;
    while (L - 1 >= 0 && t.values[L - 1] > 0 && t.values[L] > t.values[L - 1]) --L;
    if (L >= half) return std::nullopt;  // not even the last step qualifies
    return L;
}

GrowthEstimate hr_estimate(long long n) {
    if (n < 1) throw std::invalid_argument("hr_estimate: n must be positive");
    GrowthEstimate g;
    const double c = 3.141592653589793238 * std::sqrt(2.0 / 3.0);
    g.estimate = std::exp(c * std::sqrt((double)n)) / (4.0 * std::sqrt(3.0) * (double)n);
    CountTable t = pi_table(n);
    g.ratio = t.values[n].convert_to<double>() / g.estimate;
    return g;
}

}  // namespace saxl
