#pragma once

// The dihedral group D_n of order 2n, its embedding in S_n and its
// irreducible characters.
//
// sigma is the n-cycle (1 2 ... n), tau the reversal j -> n + 1 - j. Every
// element is written sigma^k (a rotation) or tau sigma^k (a reflection) with
// 0 <= k < n; products follow sigma tau = tau sigma^{-1}.

#include <string>
#include <string_view>
#include <vector>

#include "dihedral/cyclo.hpp"
#include "dihedral/numtheory.hpp"

namespace dihedral {

enum class ElementKind { Rotation, Reflection };

struct GroupElement {
    Int n = 0;
    ElementKind kind = ElementKind::Rotation;
    Int k = 0;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// One-line notation: entry i is the image of symbol i + 1, symbols are 1..n.
using Permutation = std::vector<Int>;

struct CycleType {
    std::vector<Int> lengths; // ascending

    Int symbol_count() const;
    friend bool operator==(const CycleType&, const CycleType&) = default;
};

class CharacterId {
public:
    enum class Kind { Linear, TwoDim };

    // chi_1 .. chi_4; chi_3 and chi_4 exist only for even n.
    static CharacterId linear(Int n, int index);
    // psi_h, 1 <= h < n/2.
    static CharacterId two_dim(Int n, Int h);
    // "chi1" .. "chi4" or "psi:<h>".
    static CharacterId parse(Int n, std::string_view text);

    Int n() const { return n_; }
    Kind kind() const { return kind_; }
    Int index() const { return index_; } // i for chi_i, h for psi_h
    int degree() const { return kind_ == Kind::Linear ? 1 : 2; }
    std::string name() const;

    friend bool operator==(const CharacterId&, const CharacterId&) = default;

private:
    CharacterId(Int n, Kind kind, Int index) : n_(n), kind_(kind), index_(index) {}

    Int n_;
    Kind kind_;
    Int index_;
};

void require_dihedral_order(Int n);

// Rotations by ascending k, then reflections by ascending k.
std::vector<GroupElement> elements(Int n);

GroupElement multiply(const GroupElement& a, const GroupElement& b);

Permutation to_permutation(const GroupElement& g);

// (a o b)(j) = a(b(j)).
Permutation compose(const Permutation& a, const Permutation& b);

CycleType cycle_type(const Permutation& p);

CycloNumber character_value(const CharacterId& chi, const GroupElement& g,
                            const CycloField& field);
CycloNumber character_value(const CharacterId& chi, const GroupElement& g);

// Odd n: chi1, chi2, psi_1..psi_{(n-1)/2}. Even n: chi1..chi4, psi_1..psi_{n/2-1}.
std::vector<CharacterId> irreducible_characters(Int n);

} // namespace dihedral
