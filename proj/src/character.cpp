#include "saxl/character.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <utility>

namespace saxl {

SkewComponent::SkewComponent(Partition out, Partition in)
    : outer(std::move(out)), inner(std::move(in)) {
    if (!outer.contains(inner))
        throw std::invalid_argument("skew component: outer must contain inner");
}

long long SkewShape::cells() const {
    long long s = 0;
    for (const auto& c : components) s += c.cells();
    return s;
}

SkewShape straight_shape(const Partition& p) {
    SkewShape s;
    if (!p.empty()) s.components.emplace_back(p, Partition());
    return s;
}

SkewShape disjoint_shapes(const std::vector<Partition>& ps) {
    SkewShape s;
    for (const auto& p : ps)
        if (!p.empty()) s.components.emplace_back(p, Partition());
    return s;
}

void for_each_removable_strip(
    const Partition& p, int t,
    const std::function<void(const Partition&, int, int)>& visit) {
    if (t <= 0) throw std::invalid_argument("strip size must be positive");
    const std::vector<int>& parts = p.parts();
    int L = (int)parts.size();
    // A border strip is determined by its top and bottom row: rows between
    // them shrink to one less than the row below, and the bottom row takes
    // whatever length keeps the total removed equal to t.
    for (int top = 0; top < L; ++top) {
        for (int bot = top; bot < L; ++bot) {
            int last = parts[top] - t + (bot - top);
            if (last < p.part(bot + 1)) continue;        // also rejects last < 0
            if (bot > top && last > parts[bot] - 1) continue;
            std::vector<int> v(parts);
            for (int r = top; r < bot; ++r) v[r] = parts[r + 1] - 1;
            v[bot] = last;
            visit(Partition(std::move(v)), top, bot);
        }
    }
}

ClassEvaluator::ClassEvaluator(const Partition& cls) : parts_(cls.parts()) {}

CharValue ClassEvaluator::value(const Partition& shape) {
    long long total = 0;
    for (int t : parts_) total += t;
    if (shape.n() != total)
        throw std::invalid_argument("character: shape and class must partition the same n");
    return eval(shape.parts(), 0);
}

CharValue ClassEvaluator::eval(const std::vector<int>& parts, int depth) {
    if (depth == (int)parts_.size()) return 1;  // empty shape: sizes are in sync
    auto key = std::make_pair(parts, depth);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int t = parts_[depth];
    const int L = (int)parts.size();
    std::vector<int> beads(L);
    for (int i = 0; i < L; ++i) beads[i] = parts[i] + L - i - 1;  // strictly decreasing
    std::vector<std::uint64_t> occ(L ? beads[0] / 64 + 1 : 1, 0);
    for (int b : beads) occ[b >> 6] |= 1ull << (b & 63);

    CharValue acc = 0;
    for (int i = 0; i < L; ++i) {
        int b = beads[i];
        int nb = b - t;
        if (nb < 0) break;  // beads are sorted; nothing further can move
        if (occ[nb >> 6] >> (nb & 63) & 1) continue;
        // Strip height - 1 = number of beads the moving bead jumps over.
        int between = 0;
        while (i + 1 + between < L && beads[i + 1 + between] > nb) ++between;
        // Decode the shifted bead sequence back to row lengths.
        std::vector<int> child;
        child.reserve(L);
        for (int r = 0; r < L; ++r) {
            int bead = r < i           ? beads[r]
                       : r < i + between ? beads[r + 1]
                       : r == i + between ? nb
                                          : beads[r];
            child.push_back(bead - (L - r - 1));
        }
        while (!child.empty() && child.back() == 0) child.pop_back();
        CharValue sub = eval(child, depth + 1);
        if (between % 2)
            acc -= sub;
        else
            acc += sub;
    }
    memo_.emplace(std::move(key), acc);
    return acc;
}

CharValue mn_char(const Partition& shape, const Partition& cls) {
    ClassEvaluator ev(cls);
    return ev.value(shape);
}

namespace {

CharValue skew_eval(std::vector<SkewComponent>& comps, const std::vector<int>& cls,
                    int depth) {
    if (depth == (int)cls.size()) return 1;
    const int t = cls[depth];
    CharValue acc = 0;
    for (auto& comp : comps) {
        const Partition outer = comp.outer;  // iterate over a stable copy
        for_each_removable_strip(outer, t, [&](const Partition& res, int top, int bot) {
            if (!res.contains(comp.inner)) return;
            comp.outer = res;
            CharValue sub = skew_eval(comps, cls, depth + 1);
            if ((bot - top) % 2)
                acc -= sub;
            else
                acc += sub;
        });
        comp.outer = outer;
    }
    return acc;
}

}  // namespace

CharValue mn_skew_char(const SkewShape& shape, const Partition& cls) {
    if (shape.cells() != cls.n())
        throw std::invalid_argument("character: shape and class must partition the same n");
    std::vector<SkewComponent> comps = shape.components;
    return skew_eval(comps, cls.parts(), 0);
}

namespace {

struct PartsDepthHash {
    std::size_t operator()(const std::pair<std::vector<int>, int>& s) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int x : s.first) {
            h ^= (std::uint64_t)x;
            h *= 1099511628211ull;
        }
        h ^= (std::uint64_t)s.second;
        h *= 1099511628211ull;
        return (std::size_t)h;
    }
};

using TilingMemo =
    std::unordered_map<std::pair<std::vector<int>, int>, Int, PartsDepthHash>;

// Tilings of `parts` by strips of sizes weights[0..idx], last index first.
Int count_tilings(const std::vector<int>& parts, int idx, const std::vector<int>& weights,
                  TilingMemo& memo) {
    if (idx < 0) return 1;  // shape is empty once all weights are used
    auto key = std::make_pair(parts, idx);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Int acc = 0;
    for_each_removable_strip(Partition(parts), weights[idx],
                             [&](const Partition& res, int, int) {
                                 acc += count_tilings(res.parts(), idx - 1, weights, memo);
                             });
    memo.emplace(std::move(key), acc);
    return acc;
}

}  // namespace

Int rim_hook_tableaux_count(const Partition& shape, const std::vector<int>& weights) {
    long long total = 0;
    for (int w : weights) {
        if (w < 1) throw std::invalid_argument("rim hook weights must be positive");
        total += w;
    }
    if (total != shape.n()) return 0;  // no tiling can exist
    TilingMemo memo;
    return count_tilings(shape.parts(), (int)weights.size() - 1, weights, memo);
}

int CharTable::index_of(const Partition& p) const {
    if (index_.empty() && !shapes.empty())
        for (int i = 0; i < (int)shapes.size(); ++i) index_.emplace(shapes[i], i);
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

CharTable char_table(long long n, int workers) {
    if (n < 0) throw std::invalid_argument("char_table: negative n");
    CharTable table;
    table.n = n;
    table.shapes = enumerate_partitions(n);
    const int C = (int)table.shapes.size();
    table.values.assign(C, std::vector<CharValue>(C));

    if (workers <= 0) workers = (int)std::thread::hardware_concurrency();
    if (workers < 1) workers = 1;
    workers = std::min(workers, C > 0 ? C : 1);

    std::atomic<int> next{0};
    auto run = [&]() {
        for (;;) {
            int col = next.fetch_add(1);
            if (col >= C) break;
            ClassEvaluator ev(table.shapes[col]);
            for (int row = 0; row < C; ++row)
                table.values[row][col] = ev.value(table.shapes[row]);
        }
    };
    if (workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& th : pool) th.join();
    }
    return table;
}

CharValue eval_expansion(const ShapeExpansion& terms, const Partition& cls) {
    CharValue acc = 0;
    for (const auto& term : terms) {
        CharValue v = mn_skew_char(term.shape, cls);
        if (term.sign < 0)
            acc -= v;
        else
            acc += v;
    }
    return acc;
}

ShapeExpansion frobenius_two_row(const Partition& two_row) {
    if (two_row.length() > 2)
        throw std::invalid_argument("frobenius_two_row: shape must have at most two rows");
    int p = two_row.part(0), q = two_row.part(1);
    ShapeExpansion out;
    out.push_back({+1, disjoint_shapes({Partition({p}), Partition({q})})});
    if (q >= 1)
        out.push_back({-1, disjoint_shapes({Partition({p + 1}), Partition({q - 1})})});
    return out;
}

ShapeExpansion jacobi_trudi_rows(const Partition& shape) {
    int r = shape.length();
    if (r > 3)
        throw std::invalid_argument("jacobi_trudi_rows: shape must have at most three rows");
    ShapeExpansion out;
    std::vector<int> sigma(r);
    for (int i = 0; i < r; ++i) sigma[i] = i;
    do {
        int inversions = 0;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (sigma[i] > sigma[j]) ++inversions;
        std::vector<Partition> rows;
        bool dead = false;
        for (int i = 0; i < r && !dead; ++i) {
            int len = shape.parts()[i] - i + sigma[i];
            if (len < 0)
                dead = true;
            else if (len > 0)
                rows.push_back(Partition({len}));
        }
        if (!dead) out.push_back({inversions % 2 ? -1 : +1, disjoint_shapes(rows)});
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    if (out.empty()) out.push_back({+1, SkewShape{}});  // empty shape
    return out;
}

ShapeExpansion giambelli_durfee2(const Partition& shape) {
    if (durfee(shape) != 2)
        throw std::invalid_argument("giambelli_durfee2: shape must have Durfee size 2");
    Partition conj = conjugate(shape);
    int a1 = shape.parts()[0] - 1, a2 = shape.parts()[1] - 2;
    int b1 = conj.parts()[0] - 1, b2 = conj.parts()[1] - 2;
    auto hook = [](int arm, int leg) {
        std::vector<int> v{arm + 1};
        v.insert(v.end(), leg, 1);
        return Partition(std::move(v));
    };
    ShapeExpansion out;
    out.push_back({+1, disjoint_shapes({hook(a1, b1), hook(a2, b2)})});
    out.push_back({-1, disjoint_shapes({hook(a1, b2), hook(a2, b1)})});
    return out;
}

}  // namespace saxl
