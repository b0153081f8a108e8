#pragma once

// Dimensions of the isotypic components H_d(D_n, chi) of the degree-d
// homogeneous polynomials in n variables under the permutation action of D_n.
//
// Three independent routes are provided:
//   closed form  divisor sums over n, integer arithmetic only;
//   char sum     (chi(1)/2n) * sum over all 2n elements of chi(g) Tr_d(g),
//                accumulated exactly in Q(zeta_n);
//   rank         rank of the projection (chi(1)/2n) sum_g chi(g) g on the
//                monomial basis, by exact Gaussian elimination over Q(zeta_n).

#include <cstddef>
#include <map>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "dihedral/cyclo.hpp"
#include "dihedral/group.hpp"

namespace dihedral {

inline constexpr std::size_t kDefaultBasisCap = 300;

using Exponents = std::vector<Int>;

struct MonomialBasis {
    Int n = 0;
    Int d = 0;
    std::vector<Exponents> monomials; // lexicographically descending
};

// C(n + d - 1, n - 1).
mpz_class monomial_count(Int n, Int d);
MonomialBasis monomial_basis(Int n, Int d);

enum class Method { ClosedForm, CharSum, Rank };

std::string_view method_name(Method m);

struct DimensionRecord {
    Int n = 0;
    Int d = 0;
    CharacterId chi;
    mpz_class value;
    Method method = Method::ClosedForm;
};

/// Number of degree-d monomials fixed by a permutation with cycle type `t`,
/// i.e. the coefficient of x^d in prod_i 1/(1 - x^{c_i}).
mpz_class fixed_monomial_count(const CycleType& t, Int d);

mpz_class dim_closed_form(Int n, Int d, const CharacterId& chi);
mpz_class dim_char_sum(Int n, Int d, const CharacterId& chi);

class CycloMatrix {
public:
    CycloMatrix(std::size_t rows, std::size_t cols, const CycloField& field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const CycloField& field() const { return field_; }

    CycloNumber& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const CycloNumber& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    CycloNumber trace() const;
    bool is_zero() const;
    friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
    friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);

private:
    std::size_t rows_;
    std::size_t cols_;
    CycloField field_;
    std::vector<CycloNumber> data_;
};

struct RowReduction {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

// Forward elimination; the pivot is the first nonzero entry at or below the
// current row, columns scanned left to right.
RowReduction row_reduce(CycloMatrix m);

struct ProjectionMatrix {
    MonomialBasis basis;
    CycloMatrix matrix;
};

/// Matrix of the projection onto the chi-isotypic component in the basis of
/// monomial_basis(n, d); column j is the image of monomial j. Throws
/// CapExceeded when the basis is larger than `cap`.
ProjectionMatrix projection_matrix(Int n, Int d, const CharacterId& chi,
                                   std::size_t cap = kDefaultBasisCap);

mpz_class dim_rank(Int n, Int d, const CharacterId& chi, std::size_t cap = kDefaultBasisCap);

using Polynomial = std::map<Exponents, CycloNumber>;

// The pivot columns of the projection matrix as polynomials: a basis of the
// chi-isotypic component.
std::vector<Polynomial> basis_extract(Int n, Int d, const CharacterId& chi,
                                      std::size_t cap = kDefaultBasisCap);

DimensionRecord dimension(Int n, Int d, const CharacterId& chi, Method method,
                          std::size_t cap = kDefaultBasisCap);

} // namespace dihedral
