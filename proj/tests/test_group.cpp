#include "doctest.h"

#include <numeric>

#include "dihedral/errors.hpp"
#include "dihedral/group.hpp"

using namespace dihedral;

namespace {

GroupElement rot(Int n, Int k) { return {n, ElementKind::Rotation, k}; }
GroupElement refl(Int n, Int k) { return {n, ElementKind::Reflection, k}; }

} // namespace

TEST_CASE("elements") {
    const auto d3 = elements(3);
    REQUIRE(d3.size() == 6);
    CHECK(d3[0] == rot(3, 0));
    CHECK(d3[2] == rot(3, 2));
    CHECK(d3[3] == refl(3, 0));
    CHECK(d3[5] == refl(3, 2));
    CHECK(elements(4).size() == 8);
    CHECK(elements(10).size() == 20);
    CHECK_THROWS_AS(elements(2), InvalidArgument);
}

TEST_CASE("to_permutation") {
    CHECK(to_permutation(rot(4, 1)) == Permutation{2, 3, 4, 1});
    CHECK(to_permutation(refl(4, 0)) == Permutation{4, 3, 2, 1});
    CHECK(to_permutation(refl(5, 1)) == Permutation{4, 3, 2, 1, 5});
    CHECK(compose(to_permutation(refl(5, 0)), to_permutation(rot(5, 1))) ==
          to_permutation(refl(5, 1)));
}

TEST_CASE("to_permutation is a homomorphism") {
    for (Int n = 3; n <= 8; ++n) {
        const auto group = elements(n);
        for (const auto& a : group) {
            for (const auto& b : group) {
                REQUIRE(to_permutation(multiply(a, b)) ==
                        compose(to_permutation(a), to_permutation(b)));
            }
        }
    }
}

TEST_CASE("cycle_type") {
    CHECK(cycle_type(Permutation{1, 2, 3, 4, 5}).lengths == std::vector<Int>{1, 1, 1, 1, 1});
    CHECK(cycle_type(to_permutation(rot(10, 2))).lengths == std::vector<Int>{5, 5});
    CHECK(cycle_type(to_permutation(refl(5, 0))).lengths == std::vector<Int>{1, 2, 2});
    CHECK_THROWS_AS(cycle_type(Permutation{1, 1, 2}), InvalidArgument);
    CHECK_THROWS_AS(cycle_type(Permutation{0, 1}), InvalidArgument);
    CHECK_THROWS_AS(cycle_type(Permutation{1, 4}), InvalidArgument);
}

TEST_CASE("rotation cycle types are gcd(n, k) cycles of length n / gcd") {
    for (Int n = 3; n <= 20; ++n) {
        for (Int k = 0; k < n; ++k) {
            const Int r = std::gcd(n, k);
            REQUIRE(cycle_type(to_permutation(rot(n, k))).lengths ==
                    std::vector<Int>(static_cast<std::size_t>(r), n / r));
        }
    }
}

TEST_CASE("reflection cycle types") {
    for (Int n = 3; n <= 20; ++n) {
        for (Int k = 0; k < n; ++k) {
            const auto lengths = cycle_type(to_permutation(refl(n, k))).lengths;
            std::vector<Int> expected;
            if (n % 2 != 0) {
                expected.assign(1, 1);
                expected.resize(static_cast<std::size_t>((n + 1) / 2), 2);
            } else if (k % 2 == 0) {
                expected.assign(static_cast<std::size_t>(n / 2), 2);
            } else {
                expected = {1, 1};
                expected.resize(static_cast<std::size_t>(n / 2 + 1), 2);
            }
            REQUIRE(lengths == expected);
        }
    }
}

TEST_CASE("character ids") {
    CHECK(CharacterId::parse(6, "chi3").name() == "chi3");
    CHECK(CharacterId::parse(6, "psi:2") == CharacterId::two_dim(6, 2));
    CHECK(CharacterId::two_dim(6, 2).degree() == 2);
    CHECK_THROWS_AS(CharacterId::parse(5, "chi3"), InvalidArgument);
    CHECK_THROWS_AS(CharacterId::parse(5, "chi5"), InvalidArgument);
    CHECK_THROWS_AS(CharacterId::parse(6, "psi:3"), InvalidArgument);
    CHECK_THROWS_AS(CharacterId::parse(6, "psi:0"), InvalidArgument);
    CHECK_THROWS_AS(CharacterId::parse(6, "psi:x"), InvalidArgument);
    CHECK_THROWS_AS(CharacterId::parse(6, "phi"), InvalidArgument);
}

TEST_CASE("character values") {
    const CycloField f5(5);
    CHECK(character_value(CharacterId::linear(5, 2), refl(5, 3), f5) == f5.constant(-1));
    const CycloField f6(6);
    CHECK(character_value(CharacterId::linear(6, 3), rot(6, 3), f6) == f6.constant(-1));
    CHECK(character_value(CharacterId::linear(6, 4), refl(6, 3), f6) == f6.constant(1));
    CHECK(character_value(CharacterId::two_dim(6, 1), rot(6, 1), f6) == f6.one());
    CHECK(character_value(CharacterId::two_dim(6, 1), refl(6, 1), f6) == f6.zero());
}

TEST_CASE("irreducible characters") {
    auto names = [](Int n) {
        std::vector<std::string> out;
        for (const auto& chi : irreducible_characters(n)) out.push_back(chi.name());
        return out;
    };
    CHECK(names(5) == std::vector<std::string>{"chi1", "chi2", "psi:1", "psi:2"});
    CHECK(names(10).size() == 8);
    CHECK(names(4) == std::vector<std::string>{"chi1", "chi2", "chi3", "chi4", "psi:1"});

    for (Int n = 3; n <= 30; ++n) {
        Int squares = 0;
        for (const auto& chi : irreducible_characters(n)) squares += chi.degree() * chi.degree();
        REQUIRE(squares == 2 * n);
    }
}

TEST_CASE("character orthogonality") {
    for (Int n = 3; n <= 12; ++n) {
        const CycloField field(n);
        const auto chars = irreducible_characters(n);
        const auto group = elements(n);
        for (std::size_t i = 0; i < chars.size(); ++i) {
            for (std::size_t j = 0; j < chars.size(); ++j) {
                CycloNumber sum = field.zero();
                for (const auto& g : group) {
                    sum += character_value(chars[i], g, field) * character_value(chars[j], g, field);
                }
                sum *= make_ratio(1, 2 * n);
                REQUIRE(sum == field.constant(i == j ? 1 : 0));
            }
        }
    }
}
