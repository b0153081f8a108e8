#include "doctest.h"

#include <numeric>

#include "dihedral/dims.hpp"
#include "dihedral/errors.hpp"
#include "oracles.hpp"

using namespace dihedral;

namespace {

CharacterId chi(Int n, int i) { return CharacterId::linear(n, i); }
CharacterId psi(Int n, Int h) { return CharacterId::two_dim(n, h); }

long float_oracle(Int n, Int d, const CharacterId& c) {
    return oracle::float_character_sum(n, d, c.kind() == CharacterId::Kind::TwoDim, c.index());
}

// P applied to a polynomial given as a coefficient column.
std::vector<CycloNumber> apply(const CycloMatrix& p, const std::vector<CycloNumber>& v) {
    std::vector<CycloNumber> out(p.rows(), p.field().zero());
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t j = 0; j < p.cols(); ++j) out[i] += p.at(i, j) * v[j];
    }
    return out;
}

std::vector<CycloNumber> as_column(const Polynomial& poly, const ProjectionMatrix& p) {
    std::vector<CycloNumber> v(p.basis.monomials.size(), p.matrix.field().zero());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (auto it = poly.find(p.basis.monomials[i]); it != poly.end()) v[i] = it->second;
    }
    return v;
}

} // namespace

TEST_CASE("monomial basis") {
    const auto basis = monomial_basis(3, 2);
    REQUIRE(basis.monomials.size() == 6);
    CHECK(basis.monomials.front() == Exponents{2, 0, 0});
    CHECK(basis.monomials.back() == Exponents{0, 0, 2});
    for (Int n = 1; n <= 6; ++n) {
        for (Int d = 0; d <= 6; ++d) {
            REQUIRE(monomial_basis(n, d).monomials.size() == monomial_count(n, d).get_ui());
            REQUIRE(monomial_count(n, d).get_ui() == oracle::all_monomials(n, d).size());
        }
    }
}

TEST_CASE("fixed_monomial_count") {
    CHECK(fixed_monomial_count(CycleType{{1, 1, 1}}, 3) == 10);
    CHECK(fixed_monomial_count(CycleType{{3}}, 3) == 1);
    CHECK(fixed_monomial_count(CycleType{{1, 1, 2}}, 2) == 4);
    CHECK(fixed_monomial_count(CycleType{{2, 2}}, 3) == 0);

    for (Int n = 3; n <= 7; ++n) {
        for (const auto& g : elements(n)) {
            const auto type = cycle_type(to_permutation(g));
            const auto img =
                oracle::polygon_map(n, g.kind == ElementKind::Reflection, g.k);
            for (Int d = 0; d <= 6; ++d) {
                REQUIRE(fixed_monomial_count(type, d) == oracle::fixed_monomials(img, d));
            }
        }
    }
}

TEST_CASE("anchor values") {
    // oracle values first, then the frozen numbers
    CHECK(float_oracle(3, 3, psi(3, 1)) == 6);
    CHECK(oracle::orbit_count(4, 2) == 3);
    CHECK(float_oracle(4, 2, psi(4, 1)) == 4);
    CHECK(float_oracle(4, 2, chi(4, 3)) == 1);
    CHECK(float_oracle(5, 1, chi(5, 2)) == 0);
    CHECK(float_oracle(5, 1, psi(5, 2)) == 2);
    CHECK(float_oracle(10, 2, psi(10, 1)) == 10);
    CHECK(float_oracle(4, 2, chi(4, 4)) == 2);

    for (Method m : {Method::ClosedForm, Method::CharSum, Method::Rank}) {
        CAPTURE(method_name(m));
        CHECK(dimension(3, 3, psi(3, 1), m).value == 6);
        CHECK(dimension(4, 2, chi(4, 1), m).value == 3);
        CHECK(dimension(4, 2, psi(4, 1), m).value == 4);
        CHECK(dimension(4, 2, chi(4, 3), m).value == 1);
        CHECK(dimension(4, 2, chi(4, 4), m).value == 2);
        CHECK(dimension(5, 1, chi(5, 2), m).value == 0);
        CHECK(dimension(5, 1, psi(5, 2), m).value == 2);
        CHECK(dimension(10, 2, psi(10, 1), m).value == 10);
    }
}

TEST_CASE("degree zero") {
    for (Int n = 3; n <= 12; ++n) {
        for (const auto& c : irreducible_characters(n)) {
            const int expected = c == chi(n, 1) ? 1 : 0;
            REQUIRE(dim_closed_form(n, 0, c) == expected);
            REQUIRE(dim_char_sum(n, 0, c) == expected);
            REQUIRE(dim_rank(n, 0, c) == expected);
        }
    }
}

TEST_CASE("degree one: trivial, sign and two-dimensional characters") {
    for (Int n = 3; n <= 12; ++n) {
        for (const auto& c : irreducible_characters(n)) {
            const mpz_class value = dim_closed_form(n, 1, c);
            if (c.kind() == CharacterId::Kind::TwoDim) {
                REQUIRE(value == 2);
            } else if (c.index() == 1) {
                REQUIRE(value == 1);
            } else if (c.index() == 2) {
                REQUIRE(value == 0);
            }
        }
    }
}

TEST_CASE("closed form matches the floating-point character sum") {
    for (Int n = 3; n <= 8; ++n) {
        for (Int d = 0; d <= 6; ++d) {
            for (const auto& c : irreducible_characters(n)) {
                CAPTURE(n);
                CAPTURE(d);
                CAPTURE(c.name());
                REQUIRE(dim_closed_form(n, d, c) == float_oracle(n, d, c));
            }
        }
    }
}

TEST_CASE("three routes agree") {
    for (Int n = 3; n <= 7; ++n) {
        for (Int d = 0; d <= 8; ++d) {
            const bool rank_ok = monomial_count(n, d) <= 120;
            for (const auto& c : irreducible_characters(n)) {
                CAPTURE(n);
                CAPTURE(d);
                CAPTURE(c.name());
                const mpz_class closed = dim_closed_form(n, d, c);
                REQUIRE(closed == dim_char_sum(n, d, c));
                if (rank_ok) REQUIRE(closed == dim_rank(n, d, c));
            }
        }
    }
}

TEST_CASE("trivial character counts orbits") {
    for (Int n = 3; n <= 6; ++n) {
        for (Int d = 0; d <= 6; ++d) REQUIRE(dim_closed_form(n, d, chi(n, 1)) == oracle::orbit_count(n, d));
    }
}

TEST_CASE("isotypic dimensions sum to the monomial count") {
    for (Int n = 3; n <= 10; ++n) {
        for (Int d = 0; d <= 12; ++d) {
            mpz_class total = 0;
            for (const auto& c : irreducible_characters(n)) total += dim_closed_form(n, d, c);
            REQUIRE(total == monomial_count(n, d));
        }
    }
}

TEST_CASE("coprime h reduces to the Moebius weights term by term") {
    for (Int n = 3; n <= 30; ++n) {
        for (Int h = 1; 2 * h < n; ++h) {
            if (std::gcd(h, n) != 1) continue;
            for (Int r : divisors(n).divisors) REQUIRE(ramanujan_sum(n / r, h) == moebius(n / r));
        }
    }
}

TEST_CASE("projection matrix") {
    const auto avg = projection_matrix(3, 1, chi(3, 1));
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            REQUIRE(avg.matrix.at(i, j) == avg.matrix.field().constant(mpq_class(1, 3)));
        }
    }
    CHECK(projection_matrix(3, 2, chi(3, 2)).matrix.is_zero());
    CHECK(as_rational_integer(projection_matrix(4, 2, psi(4, 1)).matrix.trace()) == 4);

    for (Int n = 3; n <= 5; ++n) {
        for (Int d = 0; d <= 3; ++d) {
            for (const auto& c : irreducible_characters(n)) {
                const auto p = projection_matrix(n, d, c);
                REQUIRE(p.matrix * p.matrix == p.matrix);
                REQUIRE(as_rational_integer(p.matrix.trace()) == dim_char_sum(n, d, c));
            }
        }
    }
}

TEST_CASE("size cap") {
    CHECK_THROWS_AS(projection_matrix(10, 4, chi(10, 1)), CapExceeded); // 715 monomials
    CHECK_NOTHROW(projection_matrix(10, 3, chi(10, 1), 220));
    CHECK_THROWS_AS(projection_matrix(10, 3, chi(10, 1), 219), CapExceeded);
    CHECK_THROWS_AS(dim_rank(4, 2, chi(4, 1), 9), CapExceeded);
    try {
        dim_rank(6, 4, chi(6, 1), 100);
        FAIL("expected cap");
    } catch (const CapExceeded& e) {
        CHECK(e.basis_size() == 126);
        CHECK(e.cap() == 100);
    }
}

TEST_CASE("basis_extract") {
    const auto sym = basis_extract(3, 1, chi(3, 1));
    REQUIRE(sym.size() == 1);
    const CycloField f3(3);
    CHECK(sym[0].size() == 3);
    for (const auto& [e, c] : sym[0]) CHECK(c == f3.constant(mpq_class(1, 3)));

    CHECK(basis_extract(3, 2, chi(3, 2)).empty());

    const auto two = basis_extract(4, 1, psi(4, 1));
    REQUIRE(two.size() == 2);
    const auto p_psi = projection_matrix(4, 1, psi(4, 1));
    const auto p_triv = projection_matrix(4, 1, chi(4, 1));
    for (const auto& poly : two) {
        const auto v = as_column(poly, p_psi);
        CHECK(apply(p_psi.matrix, v) == v);
        for (const auto& x : apply(p_triv.matrix, v)) CHECK(x.is_zero());
    }
}

TEST_CASE("basis_extract spans an independent set fixed by the projection") {
    for (Int n = 3; n <= 6; ++n) {
        for (Int d = 1; d <= 3; ++d) {
            for (const auto& c : irreducible_characters(n)) {
                const auto p = projection_matrix(n, d, c);
                const auto polys = basis_extract(n, d, c);
                REQUIRE(mpz_class(static_cast<unsigned long>(polys.size())) == dim_rank(n, d, c));
                CycloMatrix stacked(polys.size(), p.basis.monomials.size(), p.matrix.field());
                for (std::size_t i = 0; i < polys.size(); ++i) {
                    const auto v = as_column(polys[i], p);
                    REQUIRE(apply(p.matrix, v) == v);
                    for (std::size_t j = 0; j < v.size(); ++j) stacked.at(i, j) = v[j];
                }
                REQUIRE(row_reduce(stacked).rank == polys.size());
            }
        }
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(dim_closed_form(5, 2, chi(6, 1)), InvalidArgument);
    CHECK_THROWS_AS(dim_closed_form(5, -1, chi(5, 1)), InvalidArgument);
    CHECK_THROWS_AS(dim_char_sum(2, 1, chi(5, 1)), InvalidArgument);
}
