#pragma once

// Truncated power series with exact rational coefficients, and the dimension
// generating functions sum_d dim H_d(D_n, chi) t^d built from them.

#include <initializer_list>
#include <vector>

#include <gmpxx.h>

#include "dihedral/group.hpp"
#include "dihedral/numtheory.hpp"

namespace dihedral {

class PowerSeries {
public:
    // The zero series, coefficients 0..order.
    explicit PowerSeries(Int order);
    // Order is coeffs.size() - 1; coeffs must be non-empty.
    explicit PowerSeries(std::vector<mpq_class> coeffs);

    // A polynomial truncated (or zero-padded) to the given order.
    static PowerSeries polynomial(std::initializer_list<long> coeffs, Int order);
    static PowerSeries monomial(Int degree, Int order); // t^degree

    Int order() const { return static_cast<Int>(coeffs_.size()) - 1; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }
    const mpq_class& operator[](Int d) const { return coeffs_.at(static_cast<std::size_t>(d)); }
    mpq_class& operator[](Int d) { return coeffs_.at(static_cast<std::size_t>(d)); }

    bool has_integer_coefficients() const;

    PowerSeries& operator+=(const PowerSeries& rhs);
    PowerSeries& operator-=(const PowerSeries& rhs);
    PowerSeries& operator*=(const mpq_class& c);

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(PowerSeries a, const mpq_class& c) { return a *= c; }
    friend PowerSeries operator*(const mpq_class& c, PowerSeries a) { return a *= c; }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<mpq_class> coeffs_;
};

/// (1 - t^k)^{-r}: coefficient of t^d is composition_count(r, d/k).
PowerSeries geom_pow(Int k, Int r, Int order);

enum class RotationWeights { Plain, Alternating };
enum class Component { G1, G2, G3 };

/// Building blocks of the linear-character generating functions.
///
///   G1  sum_{r|n} w_r phi(n/r) (1 - t^{n/r})^{-r}, w_r = 1 or (-1)^r;
///       the rotation traces weighted by chi1 or chi3.
///   G2  (1 - t^2)^{-n/2}; traces of the fixed-point-free reflections
///       (even n).
///   G3  (1 - t^2)^{-(n-2)/2} (1 - t)^{-2}; traces of the reflections with
///       two fixed symbols (even n). Same series as g3_double_sum.
PowerSeries component_series(Component which, Int n, Int order,
                             RotationWeights weights = RotationWeights::Plain);

// b_d = sum_{l=0}^{floor(d/2)} C((n-2)/2 + l - 1, l) (d - 2l + 1), summed
// term by term.
PowerSeries g3_double_sum(Int n, Int order);

// sum_{l=0}^{floor(d/2)} C((n-1)/2 + l - 1, l) summed term by term, and its
// product form (1 - t^2)^{-(n-1)/2} (1 - t)^{-1}; odd n.
PowerSeries odd_reflection_sum(Int n, Int order);
PowerSeries odd_reflection_product(Int n, Int order);

/// sum_{d <= order} dim H_d(D_n, chi) t^d.
///
/// psi_h:          (2/n) sum_{r|n} c_{n/r}(h) (1 - t^{n/r})^{-r}
/// odd n, chi1/2:  (1/2n) [G1 +- n (1 - t^2)^{-(n-1)/2} (1 - t)^{-1}]
/// even n, chi1/2: (1/2n) [G1 +- (n/2)(G2 + G3)]
/// even n, chi3/4: (1/2n) [G1' +- (n/2)(G2 - G3)]    (G1' alternating)
PowerSeries generating_function(Int n, const CharacterId& chi, Int order);

} // namespace dihedral
