#include "saxl/partition.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace saxl {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition: parts must be positive "
                                        "(zeros only as a trailing run)");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition: parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ']';
    return s;
}

Partition make_partition(std::vector<int> parts) { return Partition(std::move(parts)); }

Partition parse_partition(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace((unsigned char)c)) s += c;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("partition syntax: expected \"[a,b,...]\", got \"" +
                                    text + "\"");
    s = s.substr(1, s.size() - 2);
    std::vector<int> parts;
    if (s.empty()) return Partition(parts);

    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (tok.empty())
            throw std::invalid_argument("partition syntax: empty entry in \"" + text + "\"");
        size_t caret_pos = tok.find('^');
        try {
            if (caret_pos == std::string::npos) {
                parts.push_back(std::stoi(tok));
            } else {
                int value = std::stoi(tok.substr(0, caret_pos));
                int repeat = std::stoi(tok.substr(caret_pos + 1));
                if (repeat < 0)
                    throw std::invalid_argument("negative exponent");
                for (int i = 0; i < repeat; ++i) parts.push_back(value);
            }
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("partition syntax: bad entry \"" + tok + "\" in \"" +
                                        text + "\"");
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("partition syntax: entry out of range in \"" + text +
                                        "\"");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == s.size())
            throw std::invalid_argument("partition syntax: trailing comma in \"" + text + "\"");
    }
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols;
    if (!p.empty()) {
        cols.resize(p.first());
        for (int i = 0; i < p.length(); ++i)
            for (int j = 0; j < p.parts()[i]; ++j) ++cols[j];
    }
    return Partition(std::move(cols));
}

bool is_self_conjugate(const Partition& p) { return p == conjugate(p); }

int durfee(const Partition& p) {
    int d = 0;
    while (p.part(d) >= d + 1) ++d;
    return d;
}

PrincipalHooks principal_hooks(const Partition& p) {
    Partition q = conjugate(p);
    int d = durfee(p);
    PrincipalHooks h;
    h.hooks.reserve(d);
    for (int i = 0; i < d; ++i) h.hooks.push_back(p.part(i) + q.part(i) - 2 * i - 1);
    return h;
}

bool has_distinct_odd_parts(const Partition& p) {
    for (int i = 0; i < p.length(); ++i) {
        if (p.parts()[i] % 2 == 0) return false;
        if (i > 0 && p.parts()[i] == p.parts()[i - 1]) return false;
    }
    return true;
}

Partition self_conjugate_from_hooks(const std::vector<int>& hooks) {
    for (size_t i = 0; i < hooks.size(); ++i) {
        if (hooks[i] <= 0 || hooks[i] % 2 == 0)
            throw std::invalid_argument("self_conjugate_from_hooks: hooks must be odd "
                                        "and positive");
        if (i > 0 && hooks[i] >= hooks[i - 1])
            throw std::invalid_argument("self_conjugate_from_hooks: hooks must be "
                                        "strictly decreasing");
    }
    int d = (int)hooks.size();
    if (d == 0) return Partition();
    std::vector<int> rows(d);
    for (int i = 0; i < d; ++i) rows[i] = (hooks[i] - 1) / 2 + i + 1;
    // Rows below the Durfee square follow from symmetry: row j holds one
    // cell for each nested hook whose row reaches column j.
    std::vector<int> parts = rows;
    for (int j = d + 1; j <= rows[0]; ++j) {
        int c = 0;
        for (int i = 0; i < d; ++i)
            if (rows[i] >= j) ++c;
        parts.push_back(c);
    }
    return Partition(std::move(parts));
}

std::vector<std::vector<int>> hook_lengths(const Partition& p) {
    Partition q = conjugate(p);
    std::vector<std::vector<int>> table(p.length());
    for (int i = 0; i < p.length(); ++i) {
        table[i].resize(p.parts()[i]);
        for (int j = 0; j < p.parts()[i]; ++j)
            table[i][j] = p.parts()[i] + q.parts()[j] - i - j - 1;
    }
    return table;
}

BetaSet to_beta_set(const Partition& p, int length) {
    if (length < p.length())
        throw std::invalid_argument("to_beta_set: length shorter than the partition");
    BetaSet b;
    b.beads.reserve(length);
    for (int i = 0; i < length; ++i) b.beads.push_back(p.part(i) + length - i - 1);
    return b;
}

Partition from_beta_set(const BetaSet& b) {
    std::vector<int> beads = b.beads;
    std::sort(beads.begin(), beads.end(), std::greater<int>());
    int L = (int)beads.size();
    std::vector<int> parts(L);
    for (int i = 0; i < L; ++i) {
        if (beads[i] < 0)
            throw std::invalid_argument("from_beta_set: negative bead");
        if (i > 0 && beads[i] == beads[i - 1])
            throw std::invalid_argument("from_beta_set: duplicate bead");
        parts[i] = beads[i] - (L - i - 1);
        if (parts[i] < 0)
            throw std::invalid_argument("from_beta_set: beads do not encode a partition");
    }
    return Partition(std::move(parts));
}

Partition k_core(const Partition& p, int k) {
    if (k <= 0) throw std::invalid_argument("k_core: k must be positive");
    if (p.empty()) return p;
    int L = p.length();
    BetaSet b = to_beta_set(p, L);
    // Slide every bead as far down its residue class as possible; this is
    // the abacus form of repeated rim-hook removal, and the result does not
    // depend on the order hooks are removed in.
    std::vector<int> count(k, 0);
    for (int bead : b.beads) ++count[bead % k];
    BetaSet core;
    for (int r = 0; r < k; ++r)
        for (int j = 0; j < count[r]; ++j) core.beads.push_back(r + k * j);
    return from_beta_set(core);
}

Int dimension(const Partition& p) {
    Int hooks = 1;
    for (const auto& row : hook_lengths(p))
        for (int h : row) hooks *= h;
    Int num = factorial(p.n());
    Int q, r;
    boost::multiprecision::divide_qr(num, hooks, q, r);
    internal_check(r == 0, "hook-length product must divide n!");
    return q;
}

namespace {

void gen_partitions(long long rem, long long bound, std::vector<int>& buf,
                    const std::function<void(const Partition&)>& visit) {
    if (rem == 0) {
        visit(Partition(buf));
        return;
    }
    for (long long f = std::min(bound, rem); f >= 1; --f) {
        buf.push_back((int)f);
        gen_partitions(rem - f, f, buf, visit);
        buf.pop_back();
    }
}

void gen_distinct_odd(long long rem, int bound, std::vector<int>& buf,
                      const std::function<void(const Partition&)>& visit) {
    if (rem == 0) {
        visit(self_conjugate_from_hooks(buf));
        return;
    }
    int top = (int)std::min<long long>(bound, rem);
    if (top % 2 == 0) --top;
    for (int h = top; h >= 1; h -= 2) {
        // Distinct odd parts below h can reach at most (h-2)+(h-4)+... ;
        // prune branches that cannot absorb the remainder.
        long long below = (long long)(h / 2) * (h / 2);
        if (rem - h > below) break;
        buf.push_back(h);
        gen_distinct_odd(rem - h, h - 2, buf, visit);
        buf.pop_back();
    }
}

}  // namespace

void for_each_partition(long long n, const std::function<void(const Partition&)>& visit) {
    if (n < 0) throw std::invalid_argument("for_each_partition: negative n");
    std::vector<int> buf;
    gen_partitions(n, n, buf, visit);
}

std::vector<Partition> enumerate_partitions(long long n) {
    std::vector<Partition> all;
    for_each_partition(n, [&](const Partition& p) { all.push_back(p); });
    return all;
}

void for_each_self_conjugate(long long n, const std::function<void(const Partition&)>& visit) {
    if (n < 0) throw std::invalid_argument("for_each_self_conjugate: negative n");
    std::vector<int> buf;
    int top = (int)std::min<long long>(n, 2 * n);  // largest hook is at most n
    gen_distinct_odd(n, top, buf, visit);
}

std::vector<Partition> enumerate_self_conjugate(long long n) {
    std::vector<Partition> all;
    for_each_self_conjugate(n, [&](const Partition& p) { all.push_back(p); });
    return all;
}

Partition staircase(int k) {
    if (k < 0) throw std::invalid_argument("staircase: k must be non-negative");
    std::vector<int> parts;
    for (int i = k; i >= 1; --i) parts.push_back(i);
    return Partition(std::move(parts));
}

Partition chopped_square(int k) {
    if (k < 1) throw std::invalid_argument("chopped_square: k must be positive");
    std::vector<int> parts(k - 1, k);
    if (k > 1) parts.push_back(k - 1);
    return Partition(std::move(parts));
}

Partition caret(int k) {
    if (k < 1) throw std::invalid_argument("caret: k must be positive");
    std::vector<int> parts;
    for (int v = 3 * k - 1; v >= k + 1; v -= 2) parts.push_back(v);  // k rows
    parts.push_back(k);
    for (int v = k - 1; v >= 1; --v) {
        parts.push_back(v);
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

}  // namespace saxl
