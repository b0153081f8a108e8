#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the library: exponent vectors are rotated and reflected directly, traces are
// counted by enumerating monomials, character values come from cosines.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<long>;

inline std::vector<long> gcd_scan(long n, long r) {
    std::vector<long> out;
    for (long k = 1; k <= n; ++k) {
        if (std::gcd(k, n) == r) out.push_back(k);
    }
    return out;
}

// sum of cos(2 pi m k / n) over k coprime to n
inline double cosine_sum(long n, long m) {
    double sum = 0.0;
    for (long k = 1; k <= n; ++k) {
        if (std::gcd(k, n) == 1) {
            sum += std::cos(2.0 * std::numbers::pi * static_cast<double>(m * k) / static_cast<double>(n));
        }
    }
    return sum;
}

// ordered r-tuples of non-negative integers summing to total
inline long count_compositions(long r, long total) {
    if (r == 1) return 1;
    long count = 0;
    for (long first = 0; first <= total; ++first) count += count_compositions(r - 1, total - first);
    return count;
}

inline void for_each_monomial(long n, long d, const std::function<void(const Vec&)>& visit) {
    Vec e(static_cast<std::size_t>(n), 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long left) {
        if (pos + 1 == e.size()) {
            e[pos] = left;
            visit(e);
            return;
        }
        for (long v = 0; v <= left; ++v) {
            e[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, d);
}

inline std::vector<Vec> all_monomials(long n, long d) {
    std::vector<Vec> out;
    for_each_monomial(n, d, [&](const Vec& e) { out.push_back(e); });
    return out;
}

// Positions of the regular n-gon; rotation by k sends position i to i + k,
// reflection k sends i to -(i + k). One-line images, 0-based.
inline std::vector<long> polygon_map(long n, bool reflection, long k) {
    std::vector<long> img(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        long j = (i + k) % n;
        if (reflection) j = (n - 1 - j);
        img[static_cast<std::size_t>(i)] = j;
    }
    return img;
}

inline Vec act(const std::vector<long>& img, const Vec& e) {
    Vec out(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) out[static_cast<std::size_t>(img[i])] = e[i];
    return out;
}

// Tr of a permutation on degree-d monomials by direct enumeration.
inline long fixed_monomials(const std::vector<long>& img, long d) {
    long count = 0;
    for_each_monomial(static_cast<long>(img.size()), d, [&](const Vec& e) {
        if (act(img, e) == e) ++count;
    });
    return count;
}

// Number of orbits of degree-d monomials under D_n, by explicit orbit walks.
inline long orbit_count(long n, long d) {
    std::set<Vec> seen;
    long orbits = 0;
    for (const Vec& e : all_monomials(n, d)) {
        if (seen.count(e)) continue;
        ++orbits;
        for (int refl = 0; refl < 2; ++refl) {
            for (long k = 0; k < n; ++k) seen.insert(act(polygon_map(n, refl != 0, k), e));
        }
    }
    return orbits;
}

// Character values straight from the tables, as doubles. linear: index 1..4;
// two-dimensional: h.
inline double character(long n, bool two_dim, long index, bool reflection, long k) {
    if (two_dim) {
        return reflection ? 0.0
                          : 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(index * k) /
                                           static_cast<double>(n));
    }
    const double parity = k % 2 == 0 ? 1.0 : -1.0;
    switch (index) {
    case 1: return 1.0;
    case 2: return reflection ? -1.0 : 1.0;
    case 3: return parity;
    default: return reflection ? -parity : parity;
    }
}

// (chi(1)/2n) sum_g chi(g) Tr_d(g), floating point, rounded.
inline long float_character_sum(long n, long d, bool two_dim, long index) {
    double sum = 0.0;
    for (int refl = 0; refl < 2; ++refl) {
        for (long k = 0; k < n; ++k) {
            const double value = character(n, two_dim, index, refl != 0, k);
            if (value == 0.0) continue;
            sum += value * static_cast<double>(fixed_monomials(polygon_map(n, refl != 0, k), d));
        }
    }
    sum *= (two_dim ? 2.0 : 1.0) / static_cast<double>(2 * n);
    return std::lround(sum);
}

} // namespace oracle
