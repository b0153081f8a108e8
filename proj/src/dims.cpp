#include "dihedral/dims.hpp"

#include <string>
#include <utility>

#include "dihedral/errors.hpp"

namespace dihedral {
namespace {

void require_degree(Int d) {
    if (d < 0) throw InvalidArgument("degree must be non-negative, got " + std::to_string(d));
}

void require_character(Int n, const CharacterId& chi) {
    require_dihedral_order(n);
    if (chi.n() != n) {
        throw InvalidArgument("character " + chi.name() + " belongs to D_" +
                              std::to_string(chi.n()) + ", not D_" + std::to_string(n));
    }
}

// C(r + d/(n/r) - 1, r - 1) for the divisor r of n; zero unless n/r divides d.
mpz_class rotation_trace(Int n, Int r, Int d) {
    return composition_count(r, make_ratio(d, n / r));
}

mpz_class exact_quotient(const mpz_class& total, Int divisor, const CharacterId& chi, Int d) {
    if (total % divisor != 0 || total < 0) {
        throw InternalInconsistency("divisor sum " + total.get_str() + " for " + chi.name() +
                                    ", n=" + std::to_string(chi.n()) + ", d=" + std::to_string(d) +
                                    " is not a non-negative multiple of " +
                                    std::to_string(divisor));
    }
    return total / divisor;
}

mpz_class two_dim_closed_form(Int n, Int d, Int h, const CharacterId& chi) {
    mpz_class total = 0;
    for (Int r : divisors(n).divisors) {
        const mpz_class trace = rotation_trace(n, r, d);
        if (trace == 0) continue;
        total += trace * ramanujan_sum(n / r, h);
    }
    return exact_quotient(2 * total, n, chi, d);
}

mpz_class linear_closed_form(Int n, Int d, const CharacterId& chi) {
    const int index = static_cast<int>(chi.index());
    const bool alternating = index >= 3;

    mpz_class rotations = 0;
    for (Int r : divisors(n).divisors) {
        const mpz_class trace = rotation_trace(n, r, d);
        if (trace == 0) continue;
        const Int weight = euler_phi(n / r) * (alternating && r % 2 != 0 ? -1 : 1);
        rotations += trace * weight;
    }

    mpz_class total;
    if (n % 2 != 0) {
        // every reflection fixes one symbol and swaps (n-1)/2 pairs
        const Int pairs = (n - 1) / 2;
        mpz_class reflection = 0;
        for (Int l = 0; l <= d / 2; ++l) reflection += composition_count(pairs, l);
        const int sign = index == 1 ? 1 : -1;
        total = rotations + sign * n * reflection;
    } else {
        // tau sigma^k for even k: n/2 transpositions; odd k: two fixed symbols
        const mpz_class free_involution =
            composition_count(n / 2, make_ratio(d, 2));
        mpz_class two_fixed = 0;
        for (Int l = 0; l <= d / 2; ++l) {
            two_fixed += composition_count((n - 2) / 2, l) * (d - 2 * l + 1);
        }
        const mpz_class reflection =
            alternating ? mpz_class(free_involution - two_fixed)
                        : mpz_class(free_involution + two_fixed);
        const int sign = (index == 1 || index == 3) ? 1 : -1;
        total = rotations + sign * (n / 2) * reflection;
    }
    return exact_quotient(total, 2 * n, chi, d);
}

} // namespace

std::string_view method_name(Method m) {
    switch (m) {
    case Method::ClosedForm: return "closed_form";
    case Method::CharSum: return "char_sum";
    case Method::Rank: return "rank";
    }
    return "unknown";
}

mpz_class monomial_count(Int n, Int d) {
    if (n < 1) throw InvalidArgument("variable count must be positive");
    require_degree(d);
    return binomial(n + d - 1, n - 1);
}

MonomialBasis monomial_basis(Int n, Int d) {
    (void)monomial_count(n, d);
    MonomialBasis basis{n, d, {}};
    Exponents current(static_cast<std::size_t>(n), 0);
    auto fill = [&](auto&& self, std::size_t pos, Int remaining) -> void {
        if (pos + 1 == current.size()) {
            current[pos] = remaining;
            basis.monomials.push_back(current);
            return;
        }
        for (Int e = remaining; e >= 0; --e) {
            current[pos] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    fill(fill, 0, d);
    return basis;
}

mpz_class fixed_monomial_count(const CycleType& t, Int d) {
    require_degree(d);
    std::vector<mpz_class> ways(static_cast<std::size_t>(d) + 1, 0);
    ways[0] = 1;
    for (Int c : t.lengths) {
        for (Int s = c; s <= d; ++s) {
            ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - c)];
        }
    }
    return ways[static_cast<std::size_t>(d)];
}

mpz_class dim_closed_form(Int n, Int d, const CharacterId& chi) {
    require_character(n, chi);
    require_degree(d);
    if (chi.kind() == CharacterId::Kind::TwoDim) return two_dim_closed_form(n, d, chi.index(), chi);
    return linear_closed_form(n, d, chi);
}

mpz_class dim_char_sum(Int n, Int d, const CharacterId& chi) {
    require_character(n, chi);
    require_degree(d);
    const CycloField field(n);
    CycloNumber sum = field.zero();
    std::map<std::vector<Int>, mpz_class> trace_cache;
    for (const GroupElement& g : elements(n)) {
        const CycleType type = cycle_type(to_permutation(g));
        auto [it, inserted] = trace_cache.try_emplace(type.lengths);
        if (inserted) it->second = fixed_monomial_count(type, d);
        if (it->second == 0) continue;
        sum += character_value(chi, g, field) * mpq_class(it->second);
    }
    sum *= make_ratio(chi.degree(), 2 * n);
    mpz_class value;
    try {
        value = as_rational_integer(sum);
    } catch (const NotRationalInteger&) {
        throw InternalInconsistency("character sum for " + chi.name() + ", n=" +
                                    std::to_string(n) + ", d=" + std::to_string(d) +
                                    " is not an integer: " + sum.to_string());
    }
    if (value < 0) throw InternalInconsistency("negative character sum for " + chi.name());
    return value;
}

// ---- matrices -------------------------------------------------------------

CycloMatrix::CycloMatrix(std::size_t rows, std::size_t cols, const CycloField& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, field.zero()) {}

CycloNumber CycloMatrix::trace() const {
    CycloNumber sum = field_.zero();
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) sum += at(i, i);
    return sum;
}

bool CycloMatrix::is_zero() const {
    for (const auto& x : data_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix shape mismatch");
    CycloMatrix out(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const CycloNumber& lhs = a.at(i, k);
            if (lhs.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const CycloNumber& rhs = b.at(k, j);
                if (rhs.is_zero()) continue;
                out.at(i, j) += lhs * rhs;
            }
        }
    }
    return out;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RowReduction row_reduce(CycloMatrix m) {
    RowReduction out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row) {
            for (std::size_t j = col; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
        }
        const CycloNumber pivot_inverse = inverse(m.at(row, col));
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            if (m.at(i, col).is_zero()) continue;
            const CycloNumber factor = m.at(i, col) * pivot_inverse;
            for (std::size_t j = col; j < m.cols(); ++j) {
                const CycloNumber& source = m.at(row, j);
                if (source.is_zero()) continue;
                m.at(i, j) -= factor * source;
            }
        }
        out.pivot_columns.push_back(col);
        ++row;
    }
    out.rank = row;
    return out;
}

ProjectionMatrix projection_matrix(Int n, Int d, const CharacterId& chi, std::size_t cap) {
    require_character(n, chi);
    const mpz_class size = monomial_count(n, d);
    if (size > static_cast<unsigned long>(cap)) {
        throw CapExceeded(size.fits_ulong_p() ? size.get_ui() : static_cast<std::size_t>(-1), cap);
    }
    MonomialBasis basis = monomial_basis(n, d);
    std::map<Exponents, std::size_t> index;
    for (std::size_t i = 0; i < basis.monomials.size(); ++i) index.emplace(basis.monomials[i], i);

    const CycloField field(n);
    CycloMatrix matrix(basis.monomials.size(), basis.monomials.size(), field);
    Exponents image(static_cast<std::size_t>(n));
    for (const GroupElement& g : elements(n)) {
        const CycloNumber value = character_value(chi, g, field);
        if (value.is_zero()) continue;
        const Permutation p = to_permutation(g);
        for (std::size_t j = 0; j < basis.monomials.size(); ++j) {
            // g sends x_i to x_{p(i)}
            const Exponents& source = basis.monomials[j];
            for (std::size_t i = 0; i < source.size(); ++i) {
                image[static_cast<std::size_t>(p[i] - 1)] = source[i];
            }
            matrix.at(index.at(image), j) += value;
        }
    }
    const mpq_class scale = make_ratio(chi.degree(), 2 * n);
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
        for (std::size_t j = 0; j < matrix.cols(); ++j) matrix.at(i, j) *= scale;
    }
    return {std::move(basis), std::move(matrix)};
}

mpz_class dim_rank(Int n, Int d, const CharacterId& chi, std::size_t cap) {
    ProjectionMatrix p = projection_matrix(n, d, chi, cap);
    return static_cast<unsigned long>(row_reduce(std::move(p.matrix)).rank);
}

std::vector<Polynomial> basis_extract(Int n, Int d, const CharacterId& chi, std::size_t cap) {
    const ProjectionMatrix p = projection_matrix(n, d, chi, cap);
    const RowReduction reduced = row_reduce(p.matrix);
    std::vector<Polynomial> out;
    for (std::size_t col : reduced.pivot_columns) {
        Polynomial poly;
        for (std::size_t i = 0; i < p.matrix.rows(); ++i) {
            if (!p.matrix.at(i, col).is_zero()) poly.emplace(p.basis.monomials[i], p.matrix.at(i, col));
        }
        out.push_back(std::move(poly));
    }
    return out;
}

DimensionRecord dimension(Int n, Int d, const CharacterId& chi, Method method, std::size_t cap) {
    DimensionRecord record{n, d, chi, 0, method};
    switch (method) {
    case Method::ClosedForm: record.value = dim_closed_form(n, d, chi); break;
    case Method::CharSum: record.value = dim_char_sum(n, d, chi); break;
    case Method::Rank: record.value = dim_rank(n, d, chi, cap); break;
    }
    return record;
}

} // namespace dihedral
