#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_n).
//
// An element is stored as its unique remainder modulo the n-th cyclotomic
// polynomial, a rational vector of length phi(n). Elements of one field share
// an immutable modulus; mixing conductors is an error.

#include <complex>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dihedral/numtheory.hpp"

namespace dihedral {

using IntPoly = std::vector<Int>; // index i holds the coefficient of x^i

IntPoly cyclotomic_polynomial(Int n);

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotRationalInteger : public std::domain_error {
public:
    enum class Kind { NonConstant, NonIntegerConstant };

    NotRationalInteger(Kind kind, std::vector<mpq_class> coeffs);

    Kind kind() const noexcept { return kind_; }
    const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }

private:
    Kind kind_;
    std::vector<mpq_class> coeffs_;
};

namespace detail {
struct CycloModulus;
}

class CycloNumber {
public:
    Int conductor() const;
    std::size_t degree() const { return coeffs_.size(); }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_constant() const; // zero counts as constant
    const mpq_class& constant_term() const { return coeffs_.front(); }

    CycloNumber& operator+=(const CycloNumber& rhs);
    CycloNumber& operator-=(const CycloNumber& rhs);
    CycloNumber& operator*=(const CycloNumber& rhs);
    CycloNumber& operator*=(const mpq_class& rhs);

    friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
    friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
    friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
    friend CycloNumber operator*(CycloNumber a, const mpq_class& b) { return a *= b; }
    friend CycloNumber operator*(const mpq_class& a, CycloNumber b) { return b *= a; }
    CycloNumber operator-() const;

    friend bool operator==(const CycloNumber& a, const CycloNumber& b);
    friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

    // Value at zeta_n = exp(2 pi i / n); for cross-checks only.
    std::complex<double> evaluate() const;
    std::string to_string() const;

private:
    friend class CycloField;
    friend CycloNumber inverse(const CycloNumber& a);
    CycloNumber(std::shared_ptr<const detail::CycloModulus> mod, std::vector<mpq_class> coeffs);
    void require_same_field(const CycloNumber& other) const;

    std::shared_ptr<const detail::CycloModulus> mod_;
    std::vector<mpq_class> coeffs_;
};

class CycloField {
public:
    explicit CycloField(Int n);

    Int conductor() const;
    Int degree() const;
    const IntPoly& modulus() const;

    CycloNumber zero() const;
    CycloNumber one() const;
    CycloNumber constant(const mpq_class& value) const;
    // zeta_n^k; k is taken mod n.
    CycloNumber root_power(Int k) const;
    // Reduces a polynomial of any length modulo Phi_n.
    CycloNumber from_polynomial(std::vector<mpq_class> coeffs) const;

private:
    std::shared_ptr<const detail::CycloModulus> mod_;
};

CycloNumber root_power(Int n, Int k);

// Inverse via the extended Euclidean algorithm against Phi_n over Q.
CycloNumber inverse(const CycloNumber& a);

// The element as an integer, or NotRationalInteger naming why it is not one.
mpz_class as_rational_integer(const CycloNumber& a);

} // namespace dihedral
