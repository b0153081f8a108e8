#include "dihedral/numtheory.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "dihedral/errors.hpp"

namespace dihedral {
namespace {

void require_positive(Int n, const char* what) {
    if (n < 1) {
        throw InvalidArgument(std::string(what) + ": argument must be positive, got " +
                              std::to_string(n));
    }
}

// (prime, exponent) pairs by trial division.
std::vector<std::pair<Int, int>> factorize(Int n) {
    std::vector<std::pair<Int, int>> factors;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

} // namespace

DivisorList divisors(Int n) {
    require_positive(n, "divisors");
    DivisorList out{n, {}};
    std::vector<Int> large;
    for (Int k = 1; k * k <= n; ++k) {
        if (n % k != 0) continue;
        out.divisors.push_back(k);
        if (k != n / k) large.push_back(n / k);
    }
    out.divisors.insert(out.divisors.end(), large.rbegin(), large.rend());
    return out;
}

Int euler_phi(Int n) {
    require_positive(n, "euler_phi");
    Int result = n;
    for (const auto& [p, e] : factorize(n)) {
        result = result / p * (p - 1);
    }
    return result;
}

int moebius(Int n) {
    require_positive(n, "moebius");
    int mu = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        mu = -mu;
    }
#ifdef DIHEDRAL_FAULT_MOEBIUS
    // Corrupted build used to prove the verification harness can fail.
    if (n == DIHEDRAL_FAULT_MOEBIUS) mu = -mu;
#endif
    return mu;
}

GcdClass gcd_class(Int n, Int r) {
    require_positive(n, "gcd_class");
    if (r < 1 || n % r != 0) {
        throw InvalidArgument("gcd_class: " + std::to_string(r) + " does not divide " +
                              std::to_string(n));
    }
    GcdClass out{n, r, {}};
    const Int q = n / r;
    for (Int a = 1; a <= q; ++a) {
        if (std::gcd(a, q) == 1) out.members.push_back(r * a);
    }
    return out;
}

Int ramanujan_sum(Int n, Int m) {
    require_positive(n, "ramanujan_sum");
    Int residue = m % n;
    if (residue < 0) residue += n;
    const Int g = std::gcd(residue, n); // gcd(0, n) = n
    const Int q = n / g;
    return moebius(q) * (euler_phi(n) / euler_phi(q));
}

mpz_class binomial(Int top, Int bottom) {
    if (top < 0 || bottom < 0 || bottom > top) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top),
                 static_cast<unsigned long>(bottom));
    return out;
}

mpq_class make_ratio(Int num, Int den) {
    if (den == 0) throw InvalidArgument("make_ratio: zero denominator");
    mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q.canonicalize();
    return q;
}

mpz_class composition_count(Int r, const mpq_class& total) {
    if (r < 1) {
        throw InvalidArgument("composition_count: part count must be positive, got " +
                              std::to_string(r));
    }
    if (sgn(total) < 0) {
        throw InvalidArgument("composition_count: negative total " + total.get_str());
    }
    if (total.get_den() != 1) return 0;
    const mpz_class& t = total.get_num();
    if (!t.fits_slong_p()) {
        throw InvalidArgument("composition_count: total too large " + t.get_str());
    }
    return binomial(r + t.get_si() - 1, r - 1);
}

mpz_class composition_count(Int r, Int total) {
    return composition_count(r, mpq_class(static_cast<long>(total)));
}

} // namespace dihedral
