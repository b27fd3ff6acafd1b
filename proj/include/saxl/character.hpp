#ifndef SAXL_CHARACTER_HPP
#define SAXL_CHARACTER_HPP

/*
 * Exact symmetric-group characters via iterated rim-hook (border-strip)
 * removal.
 *
 * Straight shapes are evaluated on the abacus: removing a strip of size t
 * moves one bead b to the empty position b - t, and the sign of the strip
 * is (-1)^(number of beads strictly between the two positions).  Class
 * parts are processed largest first, so an oversized leading part prunes
 * the whole branch immediately.  A ClassEvaluator memoizes intermediate
 * shapes for one fixed class, which makes bulk evaluation of many rows at
 * the same class cheap.
 *
 * Skew and disconnected shapes are evaluated by direct border-strip
 * recursion on the diagram (row-interval enumeration, no abacus); a strip
 * never crosses between disconnected components.
 *
 * On top of these sit the determinantal expansions that rewrite a straight
 * shape as a signed sum of disconnected shapes: two-row shapes into row
 * pairs, up-to-three-row shapes into row triples, and Durfee-size-2 shapes
 * into hook pairs.
 */

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "saxl/partition.hpp"

namespace saxl {

using CharValue = Int;

// One skew component: cells of outer not in inner.
struct SkewComponent {
    Partition outer, inner;
    SkewComponent() = default;
    SkewComponent(Partition out, Partition in);
    long long cells() const { return outer.n() - inner.n(); }
};

// A disjoint union of skew components (possibly none: the empty shape).
struct SkewShape {
    std::vector<SkewComponent> components;
    long long cells() const;
};

SkewShape straight_shape(const Partition& p);
// Disconnected union of straight shapes, skipping empty ones.
SkewShape disjoint_shapes(const std::vector<Partition>& ps);

// Enumerate the removable border strips of size t: the callback receives
// the shrunken partition and the strip's top and bottom row (0-based).
void for_each_removable_strip(
    const Partition& p, int t,
    const std::function<void(const Partition& result, int top, int bottom)>& visit);

// Memoized evaluator for one fixed class.  Reuse one instance to evaluate
// many shapes at the same class: intermediate shapes are shared.
class ClassEvaluator {
  public:
    explicit ClassEvaluator(const Partition& cls);
    // Character of the irreducible indexed by shape at the fixed class;
    // shape must have the same size as the class.
    CharValue value(const Partition& shape);
    const std::vector<int>& class_parts() const { return parts_; }

  private:
    struct StateHash {
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

    CharValue eval(const std::vector<int>& parts, int depth);

    std::vector<int> parts_;  // class parts, sorted decreasing
    std::unordered_map<std::pair<std::vector<int>, int>, CharValue, StateHash> memo_;
};

// One-shot character value (builds a throwaway evaluator).
CharValue mn_char(const Partition& shape, const Partition& cls);

// Character of a skew/disconnected shape at the given class.
CharValue mn_skew_char(const SkewShape& shape, const Partition& cls);

// Number of ways to tile the shape by border strips whose sizes follow the
// given weight sequence (first weight placed first).  Unsigned count; its
// value bounds |mn_char| when the class parts are all equal, and a count
// of 1 forces a nonzero character.
Int rim_hook_tableaux_count(const Partition& shape, const std::vector<int>& weights);

// Full character table of the symmetric group on n letters.  Rows and
// columns are both indexed by partitions of n in lexicographically
// decreasing order.  Columns are computed independently, so the build
// parallelizes over columns with output identical for any worker count.
struct CharTable {
    long long n = 0;
    std::vector<Partition> shapes;                 // row/column labels
    std::vector<std::vector<CharValue>> values;    // values[row][col]

    const CharValue& at(int row, int col) const { return values[row][col]; }
    int index_of(const Partition& p) const;       // -1 if absent

  private:
    mutable std::unordered_map<Partition, int, PartitionHash> index_;  // lazy
};

CharTable char_table(long long n, int workers = 1);

// Signed sums of disconnected shapes produced by the determinantal
// expansions.
struct SignedShape {
    int sign = 1;  // +1 or -1
    SkewShape shape;
};
using ShapeExpansion = std::vector<SignedShape>;

CharValue eval_expansion(const ShapeExpansion& terms, const Partition& cls);

// (p, q) -> +(p)(q) - (p+1)(q-1); terms with a negative row vanish.
ShapeExpansion frobenius_two_row(const Partition& two_row);

// Shapes with at most three rows -> signed sum over row rearrangements
// lambda_i - i + sigma(i).
ShapeExpansion jacobi_trudi_rows(const Partition& shape);

// Durfee-size-2 shapes -> hook-pair expansion with arm/leg coordinates
// a_i = lambda_i - i, b_i = lambda'_i - i.
ShapeExpansion giambelli_durfee2(const Partition& shape);

}  // namespace saxl

#endif
