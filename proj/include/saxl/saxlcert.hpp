#ifndef SAXL_SAXLCERT_HPP
#define SAXL_SAXLCERT_HPP

/*
 * Tensor-square verification for the three self-conjugate shape families
 * (staircase, chopped square, caret).
 *
 * The certificate method: for self-conjugate mu, any lambda whose
 * character at the class of mu's principal hooks is nonzero is guaranteed
 * to appear in the tensor square of mu.  certify/certified_phi apply this
 * test; verify_conjecture combines it with exact Kronecker multiplicities
 * to decide whether the tensor square contains every irreducible.
 *
 * Closed forms: at a family's principal-hook class, hook and two-row
 * characters reduce to signed counts of distinct-part subset sums, exact
 * for every row index.  near_shape_char handles the neighbouring shapes
 * (near-hooks and near-two-rows) through the determinantal expansions.
 *
 * exp_family/vanishing_family build, by an explicit outer-rim chain
 * construction, exponentially many shapes with a forced +-1 certificate,
 * respectively exponentially many whose certificate vanishes.
 */

#include <string>
#include <vector>

#include "saxl/character.hpp"
#include "saxl/config.hpp"
#include "saxl/kronecker.hpp"
#include "saxl/partition.hpp"

namespace saxl {

enum class Family { Staircase, ChoppedSquare, Caret };

const char* family_name(Family f);
Family family_from_name(const std::string& name);
Partition family_shape(Family f, int k);

struct Certificate {
    Partition lambda, mu;
    PrincipalHooks hook_class;  // principal hooks of mu
    CharValue value;            // character of lambda at that class
    bool certified = false;     // value != 0
};

// mu must be self-conjugate.  An oversized top hook of lambda short-circuits
// to an uncomputed zero (the character provably vanishes).
Certificate certify(const Partition& lambda, const Partition& mu);

// Certificates for every partition of n, sharing one evaluator.
std::vector<Certificate> certify_all(const Partition& mu);

// The certified sublist only: shapes guaranteed inside the tensor square.
std::vector<Partition> certified_phi(const Partition& mu);

// Hook character (n-ell, 1^ell) at the family's principal-hook class:
// sum_{f=0}^{s-1} (-1)^f D_R(ell - f), where s is the smallest principal
// hook, R the remaining hooks, and D_R counts distinct-part subsets of R
// by sum (0 for negative arguments).
CharValue closed_form_hook(Family f, int k, long long ell);

// Two-row character (n-ell, ell) at the same class: D_R(ell) - D_R(ell-1)
// with R all principal hooks.
CharValue closed_form_two_row(Family f, int k, long long ell);

// Character of a near-hook (n-ell-m, m, 1^ell) or near-two-row
// (n-ell-m, ell, m) shape at an arbitrary class, via the hook-pair or
// row-triple expansion.  Throws if the shape fits neither profile.
CharValue near_shape_char(const Partition& lambda, const Partition& cls);

// Shapes of size |family_shape(k)| carrying a unique rim-hook tiling by
// the principal hooks (hence a +-1 certificate).  Chain construction:
// staircase grows k by 2 with 3 choices per step from the singleton base
// at k = 1 or 2, giving 3^(ceil(k/2) - 1) members; caret grows k by 1
// with 5 choices per step from base k = 1, giving 5^(k - 1).
std::vector<Partition> exp_family(Family f, int k);

// Shapes whose certificate vanishes: same chain construction run on the
// class obtained by shrinking the top principal hook by 2 and growing the
// smallest by 2; every member's top hook is then too short.
std::vector<Partition> vanishing_family(Family f, int k);
// The modified hook sequence used above, largest first.
std::vector<int> vanishing_weights(Family f, int k);

struct VerificationReport {
    Family family = Family::Staircase;
    int k = 0;
    long long n = 0;
    bool exact_mode = false;
    long long total = 0;          // partitions of n
    long long certified = 0;      // nonzero certificate
    long long rule_covered = 0;   // inconclusive but structurally forced positive
    long long exact_checked = 0;  // multiplicities computed exactly
    std::vector<Partition> inconclusive;  // certificate vanished
    std::vector<Partition> missing;       // exact mode: multiplicity zero
    bool conjecture_holds = false;
    double seconds = 0.0;
};

// Certificates-only mode cannot establish the conjecture unless every
// shape is certified; exact mode settles it by computing the full
// tensor-square spectrum (and re-verifies every certificate against it).
VerificationReport verify_conjecture(Family f, int k, bool exact,
                                     const RunConfig& cfg = RunConfig());

struct ClosedFormScan {
    Family family = Family::Staircase;
    int k = 0;
    bool two_row = false;
    long long first_agreement = 0;           // all rows from here on agree
    std::vector<long long> disagreements;    // row indices that differ
};

// Compare the closed form against direct evaluation for every valid row
// index (hooks: 0..n-1, two-rows: 0..n/2).
ClosedFormScan closed_form_scan(Family f, int k, bool two_row);

}  // namespace saxl

#endif
