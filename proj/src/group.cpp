#include "dihedral/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "dihedral/errors.hpp"

namespace dihedral {
namespace {

Int mod(Int a, Int n) {
    Int r = a % n;
    return r < 0 ? r + n : r;
}

} // namespace

Int CycleType::symbol_count() const {
    return std::accumulate(lengths.begin(), lengths.end(), Int{0});
}

// ---- characters -----------------------------------------------------------

void require_dihedral_order(Int n) {
    if (n < 3) throw InvalidArgument("dihedral group needs n >= 3, got " + std::to_string(n));
}

CharacterId CharacterId::linear(Int n, int index) {
    require_dihedral_order(n);
    if (index < 1 || index > 4) {
        throw InvalidArgument("linear character index must be 1..4, got " + std::to_string(index));
    }
    if (index > 2 && n % 2 != 0) {
        throw InvalidArgument("chi" + std::to_string(index) + " exists only for even n, got n=" +
                              std::to_string(n));
    }
    return CharacterId(n, Kind::Linear, index);
}

CharacterId CharacterId::two_dim(Int n, Int h) {
    require_dihedral_order(n);
    if (h < 1 || 2 * h >= n) {
        throw InvalidArgument("psi:" + std::to_string(h) + " needs 1 <= h < n/2 for n=" +
                              std::to_string(n));
    }
    return CharacterId(n, Kind::TwoDim, h);
}

CharacterId CharacterId::parse(Int n, std::string_view text) {
    auto parse_int = [&](std::string_view digits) {
        Int value = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
            throw InvalidArgument("malformed character '" + std::string(text) + "'");
        }
        return value;
    };
    if (text.starts_with("chi") && text.size() == 4) {
        return linear(n, static_cast<int>(parse_int(text.substr(3))));
    }
    if (text.starts_with("psi:")) return two_dim(n, parse_int(text.substr(4)));
    throw InvalidArgument("unknown character '" + std::string(text) +
                          "' (expected chi1..chi4 or psi:<h>)");
}

std::string CharacterId::name() const {
    if (kind_ == Kind::Linear) return "chi" + std::to_string(index_);
    return "psi:" + std::to_string(index_);
}

std::vector<CharacterId> irreducible_characters(Int n) {
    require_dihedral_order(n);
    std::vector<CharacterId> out;
    const int linear_count = n % 2 == 0 ? 4 : 2;
    for (int i = 1; i <= linear_count; ++i) out.push_back(CharacterId::linear(n, i));
    for (Int h = 1; 2 * h < n; ++h) out.push_back(CharacterId::two_dim(n, h));
    return out;
}

CycloNumber character_value(const CharacterId& chi, const GroupElement& g,
                            const CycloField& field) {
    if (chi.n() != g.n || field.conductor() != g.n) {
        throw InvalidArgument("character, element and field disagree on n");
    }
    const bool rotation = g.kind == ElementKind::Rotation;
    if (chi.kind() == CharacterId::Kind::TwoDim) {
        if (!rotation) return field.zero();
        const Int hk = chi.index() * g.k;
        return field.root_power(hk) + field.root_power(-hk);
    }
    const int parity = g.k % 2 == 0 ? 1 : -1;
    int value = 1;
    switch (chi.index()) {
    case 1: value = 1; break;
    case 2: value = rotation ? 1 : -1; break;
    case 3: value = parity; break;
    case 4: value = rotation ? parity : -parity; break;
    }
    return field.constant(value);
}

CycloNumber character_value(const CharacterId& chi, const GroupElement& g) {
    return character_value(chi, g, CycloField(g.n));
}

// ---- elements and permutations ---------------------------------------------

std::vector<GroupElement> elements(Int n) {
    require_dihedral_order(n);
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(2 * n));
    for (Int k = 0; k < n; ++k) out.push_back({n, ElementKind::Rotation, k});
    for (Int k = 0; k < n; ++k) out.push_back({n, ElementKind::Reflection, k});
    return out;
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
    if (a.n != b.n) throw InvalidArgument("elements of different dihedral groups");
    const Int n = a.n;
    if (a.kind == ElementKind::Rotation) {
        // sigma^a sigma^b, or sigma^a tau sigma^b = tau sigma^{b-a}
        if (b.kind == ElementKind::Rotation) return {n, ElementKind::Rotation, mod(a.k + b.k, n)};
        return {n, ElementKind::Reflection, mod(b.k - a.k, n)};
    }
    // tau sigma^a sigma^b, or tau sigma^a tau sigma^b = sigma^{b-a}
    if (b.kind == ElementKind::Rotation) return {n, ElementKind::Reflection, mod(a.k + b.k, n)};
    return {n, ElementKind::Rotation, mod(b.k - a.k, n)};
}

Permutation to_permutation(const GroupElement& g) {
    const Int n = g.n;
    Permutation p(static_cast<std::size_t>(n));
    for (Int j = 1; j <= n; ++j) {
        const Int rotated = mod(j - 1 + g.k, n) + 1;
        p[static_cast<std::size_t>(j - 1)] =
            g.kind == ElementKind::Rotation ? rotated : n + 1 - rotated;
    }
    return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw InvalidArgument("composing permutations of different size");
    Permutation out(a.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] = a[static_cast<std::size_t>(b[i] - 1)];
    }
    return out;
}

CycleType cycle_type(const Permutation& p) {
    const auto n = static_cast<Int>(p.size());
    std::vector<bool> seen(p.size(), false);
    for (Int v : p) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
            throw InvalidArgument("not a bijection on 1.." + std::to_string(n));
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    CycleType out;
    for (std::size_t start = 0; start < p.size(); ++start) {
        if (seen[start]) continue;
        Int length = 0;
        for (std::size_t j = start; !seen[j]; j = static_cast<std::size_t>(p[j] - 1)) {
            seen[j] = true;
            ++length;
        }
        out.lengths.push_back(length);
    }
    std::sort(out.lengths.begin(), out.lengths.end());
    return out;
}

} // namespace dihedral
