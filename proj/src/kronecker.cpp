#include "saxl/kronecker.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

namespace saxl {

Int class_weight_z(const Partition& cls) {
    Int z = 1;
    int run = 0;
    for (int i = 0; i < cls.length(); ++i) {
        ++run;
        if (cls.part(i + 1) != cls.parts()[i]) {
            // run copies of part value v contribute v^run * run!
            for (int j = 0; j < run; ++j) z *= cls.parts()[i];
            for (int j = 2; j <= run; ++j) z *= j;
            run = 0;
        }
    }
    return z;
}

Int class_size(const Partition& cls) {
    Int q, r;
    boost::multiprecision::divide_qr(factorial(cls.n()), class_weight_z(cls), q, r);
    internal_check(r == 0, "centralizer order must divide n!");
    return q;
}

Int kron_g(const Partition& lambda, const Partition& mu, const Partition& nu) {
    long long n = lambda.n();
    if (mu.n() != n || nu.n() != n)
        throw std::invalid_argument("kron_g: all three shapes must partition the same n");
    Int acc = 0;
    for_each_partition(n, [&](const Partition& alpha) {
        ClassEvaluator ev(alpha);
        CharValue a = ev.value(lambda);
        if (a == 0) return;
        CharValue b = (mu == lambda) ? a : ev.value(mu);
        if (b == 0) return;
        CharValue c = (nu == lambda) ? a : (nu == mu) ? b : ev.value(nu);
        if (c == 0) return;
        acc += class_size(alpha) * a * b * c;
    });
    Int g, r;
    boost::multiprecision::divide_qr(acc, factorial(n), g, r);
    internal_check(r == 0, "kron_g: class-weighted sum must be divisible by n!");
    internal_check(g >= 0, "kron_g: multiplicity must be non-negative");
    return g;
}

std::vector<Int> class_sizes_for(const CharTable& table) {
    std::vector<Int> sizes;
    sizes.reserve(table.shapes.size());
    for (const auto& cls : table.shapes) sizes.push_back(class_size(cls));
    return sizes;
}

Int kron_g_from_table(const CharTable& table, const std::vector<Int>& sizes, int il,
                      int im, int in) {
    Int acc = 0;
    const int C = (int)table.shapes.size();
    for (int c = 0; c < C; ++c) {
        const CharValue& a = table.at(il, c);
        if (a == 0) continue;
        const CharValue& b = table.at(im, c);
        if (b == 0) continue;
        const CharValue& d = table.at(in, c);
        if (d == 0) continue;
        acc += sizes[c] * a * b * d;
    }
    Int g, r;
    boost::multiprecision::divide_qr(acc, factorial(table.n), g, r);
    internal_check(r == 0, "kron_g: class-weighted sum must be divisible by n!");
    internal_check(g >= 0, "kron_g: multiplicity must be non-negative");
    return g;
}

Int TensorSquareSpectrum::multiplicity_of(const Partition& p) const {
    for (size_t i = 0; i < shapes.size(); ++i)
        if (shapes[i] == p) return mult[i];
    throw std::invalid_argument("spectrum: shape is not a partition of n");
}

std::vector<Partition> TensorSquareSpectrum::support() const {
    std::vector<Partition> s;
    for (size_t i = 0; i < shapes.size(); ++i)
        if (mult[i] > 0) s.push_back(shapes[i]);
    return s;
}

bool TensorSquareSpectrum::full_support() const {
    for (const auto& m : mult)
        if (m == 0) return false;
    return true;
}

TensorSquareSpectrum tensor_square(const Partition& mu, int workers) {
    const long long n = mu.n();
    TensorSquareSpectrum sp;
    sp.mu = mu;
    sp.shapes = enumerate_partitions(n);
    const int C = (int)sp.shapes.size();

    if (workers <= 0) workers = (int)std::thread::hardware_concurrency();
    if (workers < 1) workers = 1;
    workers = std::min(workers, C);

    // One accumulator vector per worker; exact integer addition makes the
    // final index-wise merge independent of how columns were distributed.
    std::vector<std::vector<Int>> partial(workers, std::vector<Int>(C, 0));
    std::atomic<int> next{0};
    auto run = [&](int w) {
        for (;;) {
            int col = next.fetch_add(1);
            if (col >= C) break;
            ClassEvaluator ev(sp.shapes[col]);
            CharValue m = ev.value(mu);
            if (m == 0) continue;  // zero-weight column: skip all rows
            Int weight = class_size(sp.shapes[col]) * m * m;
            for (int row = 0; row < C; ++row) {
                CharValue v = ev.value(sp.shapes[row]);
                if (v != 0) partial[w][row] += weight * v;
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }

    const Int nfact = factorial(n);
    sp.mult.resize(C);
    for (int row = 0; row < C; ++row) {
        Int acc = 0;
        for (int w = 0; w < workers; ++w) acc += partial[w][row];
        Int g, r;
        boost::multiprecision::divide_qr(acc, nfact, g, r);
        internal_check(r == 0, "tensor_square: class-weighted sum must be divisible by n!");
        internal_check(g >= 0, "tensor_square: multiplicity must be non-negative");
        sp.mult[row] = g;
    }
    return sp;
}

CornerCounts corner_counts(const Partition& mu) {
    CornerCounts c;
    for (int t = 1; t <= 3; ++t) {
        for_each_removable_strip(mu, t, [&](const Partition& res, int top, int bot) {
            std::vector<int> rows;
            for (int r = top; r <= bot; ++r) rows.push_back(mu.parts()[r] - res.part(r));
            if (rows == std::vector<int>{1}) ++c.c1;
            else if (rows == std::vector<int>{2}) ++c.c2;
            else if (rows == std::vector<int>{1, 1}) ++c.c11;
            else if (rows == std::vector<int>{3}) ++c.c3;
            else if (rows == std::vector<int>{2, 1}) ++c.c21;
            else if (rows == std::vector<int>{1, 2}) ++c.c12;
            else if (rows == std::vector<int>{1, 1, 1}) ++c.c111;
            else internal_check(false, "corner_counts: impossible strip profile");
        });
    }
    return c;
}

Int corner_formula(const Partition& tau, const Partition& mu) {
    CornerCounts cc = corner_counts(mu);
    Int c1 = cc.c1, c2 = cc.c2, c11 = cc.c11;
    Int c3 = cc.c3, c21 = cc.c21, c12 = cc.c12, c111 = cc.c111;
    const std::vector<int>& t = tau.parts();
    if (t.empty()) return 1;
    if (t == std::vector<int>{1}) return c1 - 1;
    if (t == std::vector<int>{1, 1}) return (c1 - 1) * (c1 - 1);
    if (t == std::vector<int>{2}) return c2 + c11 + c1 * c1 - 2 * c1;
    if (t == std::vector<int>{3})
        return c3 + c111 + c21 + c12 + (2 * c1 - 3) * (c2 + c11) + c1 * c1 * c1 -
               4 * c1 * c1 + 3 * c1;
    if (t == std::vector<int>{2, 1})
        return c21 + c12 + (3 * c1 - 4) * (c2 + c11) + 2 * c1 * c1 * c1 - 8 * c1 * c1 +
               7 * c1;
    if (t == std::vector<int>{1, 1, 1})
        return c21 + c12 + (c1 - 1) * (c2 + c11) + c1 * c1 * c1 - 4 * c1 * c1 + 4 * c1 - 1;
    throw std::invalid_argument("corner_formula: tau must have size at most 3");
}

bool corner_formula_reliable(const Partition& tau, long long n) {
    return n - tau.n() >= tau.first() + tau.n();
}

namespace {

// Largest r such that mu_1 > mu_2 > ... > mu_r (strictly).
int strict_prefix_length(const Partition& mu) {
    if (mu.empty()) return 0;
    int r = 1;
    while (r < mu.length() && mu.parts()[r - 1] > mu.parts()[r]) ++r;
    return r;
}

RuleResult direct_rules(const Partition& lambda, const Partition& mu) {
    if (lambda.length() <= 1)
        return {PositivityVerdict::ForcedPositive, "trivial-row"};
    if (lambda.first() == 1) {
        return is_self_conjugate(mu)
                   ? RuleResult{PositivityVerdict::ForcedPositive, "sign-row"}
                   : RuleResult{PositivityVerdict::ForcedZero, "sign-row"};
    }
    if (lambda == mu && is_self_conjugate(mu))
        return {PositivityVerdict::ForcedPositive, "self-conjugate-diagonal"};
    long long dm = durfee(mu);
    if (durfee(lambda) > 2 * dm * dm)
        return {PositivityVerdict::ForcedZero, "durfee-gap"};
    if (lambda.length() == 2) {
        long long p = lambda.parts()[1];
        if (p >= 2 && 2 * p - 1 <= mu.first() && p <= mu.length())
            return {PositivityVerdict::ForcedPositive, "two-row"};
    }
    if (lambda.length() >= 2 && lambda.parts()[1] == 1) {  // hook (n-m, 1^m)
        long long m = lambda.length() - 1;
        if (m < strict_prefix_length(mu))
            return {PositivityVerdict::ForcedPositive, "hook-prefix"};
    }
    return {PositivityVerdict::Unknown, ""};
}

}  // namespace

RuleResult positivity_rules(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n())
        throw std::invalid_argument("positivity_rules: shapes must partition the same n");
    RuleResult r = direct_rules(lambda, mu);
    if (r.verdict != PositivityVerdict::Unknown) return r;
    if (is_self_conjugate(mu)) {
        // g(lambda', mu, mu) = g(lambda, mu, mu) when mu is self-conjugate.
        RuleResult rc = direct_rules(conjugate(lambda), mu);
        if (rc.verdict != PositivityVerdict::Unknown) {
            rc.rule += "+conjugate";
            return rc;
        }
    }
    return {PositivityVerdict::Unknown, ""};
}

}  // namespace saxl
