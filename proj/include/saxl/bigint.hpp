#ifndef SAXL_BIGINT_HPP
#define SAXL_BIGINT_HPP

/*
 * Arbitrary-precision integer support.
 *
 * Every quantity that can outgrow 64 bits (character values, dimensions,
 * partition counts, Kronecker multiplicities) is carried as an exact
 * big integer.  No floating point is used on any exact code path.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace saxl {

using Int = boost::multiprecision::cpp_int;

// Exact n! as a big integer.
inline Int factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int f = 1;
    for (long long i = 2; i <= n; ++i) f *= i;
    return f;
}

// Number of involutions in the symmetric group on n letters:
// I(n) = I(n-1) + (n-1) * I(n-2).
inline Int involution_count(long long n) {
    if (n < 0) throw std::invalid_argument("involution_count: negative argument");
    Int a = 1, b = 1;  // I(0), I(1)
    if (n == 0) return a;
    for (long long i = 2; i <= n; ++i) {
        Int c = b + (i - 1) * a;
        a = b;
        b = c;
    }
    return b;
}

inline std::string to_decimal(const Int& v) { return v.str(); }

// Internal-consistency assertion: a failure indicates a bug, not bad input.
inline void internal_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("internal error: ") + what);
}

}  // namespace saxl

#endif
