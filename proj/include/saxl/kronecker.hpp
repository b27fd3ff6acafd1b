#ifndef SAXL_KRONECKER_HPP
#define SAXL_KRONECKER_HPP

/*
 * Exact Kronecker coefficients g(lambda, mu, nu) of the symmetric group:
 * the multiplicity of the irreducible indexed by nu inside the tensor
 * product of those indexed by lambda and mu, computed as the class-weighted
 * triple product of character rows divided by n! (the division must be
 * exact, and the result non-negative; violations are internal errors).
 *
 * tensor_square streams one class column at a time: the weight
 * class_size * chi^mu[alpha]^2 is computed first and zero-weight columns
 * are skipped entirely, which in practice removes most of the table.
 *
 * corner_counts / corner_formula give the closed polynomial expressions
 * for multiplicities of shapes (n - |tau|, tau) with |tau| <= 3 in terms
 * of counts of removable border strips of mu, classified by their row
 * profile.  positivity_rules bundles the cheap structural tests that force
 * g(lambda, mu, mu) to be positive or zero without computing it.
 */

#include <string>
#include <vector>

#include "saxl/character.hpp"
#include "saxl/partition.hpp"

namespace saxl {

// Centralizer order z = prod_i i^(m_i) m_i! and class size n!/z.
Int class_weight_z(const Partition& cls);
Int class_size(const Partition& cls);

Int kron_g(const Partition& lambda, const Partition& mu, const Partition& nu);

// Class sizes aligned with a table's column order, and the triple product
// evaluated from table rows (cheap once the table exists).
std::vector<Int> class_sizes_for(const CharTable& table);
Int kron_g_from_table(const CharTable& table, const std::vector<Int>& sizes, int il,
                      int im, int in);

// Multiplicities of every irreducible in the tensor square of mu, aligned
// with enumerate_partitions(n).
struct TensorSquareSpectrum {
    Partition mu;
    std::vector<Partition> shapes;
    std::vector<Int> mult;

    Int multiplicity_of(const Partition& p) const;
    std::vector<Partition> support() const;  // shapes with positive multiplicity
    bool full_support() const;
};

TensorSquareSpectrum tensor_square(const Partition& mu, int workers = 1);

// Removable border strips of size <= 3, classified by their top-to-bottom
// row-length profile.
struct CornerCounts {
    long long c1 = 0;                       // (1)
    long long c2 = 0, c11 = 0;              // (2), (1,1)
    long long c3 = 0, c21 = 0, c12 = 0, c111 = 0;  // (3), (2,1), (1,2), (1,1,1)
};

CornerCounts corner_counts(const Partition& mu);

// Polynomial expression for g((n - |tau|, tau), mu, mu) in the corner
// counts of mu; tau must be one of {}, (1), (2), (1,1), (3), (2,1),
// (1,1,1).  The expression's validity region is an empirical matter: use
// corner_formula_reliable as the guard (n - |tau| >= tau_1 + |tau|).
Int corner_formula(const Partition& tau, const Partition& mu);
bool corner_formula_reliable(const Partition& tau, long long n);

enum class PositivityVerdict { ForcedPositive, ForcedZero, Unknown };

struct RuleResult {
    PositivityVerdict verdict = PositivityVerdict::Unknown;
    std::string rule;  // which structural test fired (empty when Unknown)
};

// Structural positivity/vanishing tests for g(lambda, mu, mu).  When mu is
// self-conjugate the tests are also applied to the conjugate of lambda.
RuleResult positivity_rules(const Partition& lambda, const Partition& mu);

}  // namespace saxl

#endif
