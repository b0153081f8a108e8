#pragma once

// Elementary number theory on small positive integers: divisors, totient,
// Moebius, gcd classes, Ramanujan sums and the composition count that stands
// in for every binomial of the dimension formulas.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace dihedral {

using Int = std::int64_t;

struct DivisorList {
    Int n = 0;
    std::vector<Int> divisors; // strictly increasing, first 1, last n
};

// S_r(n) = { k in [1, n] : gcd(k, n) = r }.
struct GcdClass {
    Int n = 0;
    Int r = 0;
    std::vector<Int> members; // ascending
};

DivisorList divisors(Int n);
Int euler_phi(Int n);
int moebius(Int n);
GcdClass gcd_class(Int n, Int r);

/// Sum of exp(2 pi i m k / n) over 1 <= k <= n with gcd(k, n) = 1.
///
/// Evaluated in closed form as mu(n/g) phi(n) / phi(n/g) with
/// g = gcd(m mod n, n), so the result is always an integer. Negative m is
/// reduced into [0, n) first.
Int ramanujan_sum(Int n, Int m);

/// Number of ordered r-tuples of non-negative integers summing to `total`,
/// i.e. C(r + total - 1, r - 1).
///
/// A total that is not an integer yields 0: this is how a binomial such as
/// C(r + d/(n/r) - 1, r - 1) vanishes when n/r does not divide d. Throws
/// InvalidArgument for r < 1 or a negative total.
mpz_class composition_count(Int r, const mpq_class& total);
mpz_class composition_count(Int r, Int total);

mpz_class binomial(Int top, Int bottom);

// num/den in lowest terms; den must be nonzero.
mpq_class make_ratio(Int num, Int den);

} // namespace dihedral
