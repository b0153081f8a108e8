#include "dihedral/series.hpp"

#include <string>
#include <utility>

#include "dihedral/errors.hpp"

namespace dihedral {
namespace {

void require_order(Int order) {
    if (order < 0) throw InvalidArgument("series order must be non-negative");
}

void require_even(Int n, const char* what) {
    if (n < 4 || n % 2 != 0) {
        throw InvalidArgument(std::string(what) + " needs an even n >= 4, got " + std::to_string(n));
    }
}

} // namespace

PowerSeries::PowerSeries(Int order) {
    require_order(order);
    coeffs_.assign(static_cast<std::size_t>(order) + 1, mpq_class(0));
}

PowerSeries::PowerSeries(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InvalidArgument("power series needs at least one coefficient");
}

PowerSeries PowerSeries::polynomial(std::initializer_list<long> coeffs, Int order) {
    PowerSeries out(order);
    Int d = 0;
    for (long c : coeffs) {
        if (d > order) break;
        out[d++] = c;
    }
    return out;
}

PowerSeries PowerSeries::monomial(Int degree, Int order) {
    PowerSeries out(order);
    if (degree >= 0 && degree <= order) out[degree] = 1;
    return out;
}

bool PowerSeries::has_integer_coefficients() const {
    for (const auto& c : coeffs_) {
        if (c.get_den() != 1) return false;
    }
    return true;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
    if (order() != rhs.order()) throw InvalidArgument("series order mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
    if (order() != rhs.order()) throw InvalidArgument("series order mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

PowerSeries& PowerSeries::operator*=(const mpq_class& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order()) throw InvalidArgument("series order mismatch");
    PowerSeries out(a.order());
    const std::size_t len = a.coeffs_.size();
    for (std::size_t i = 0; i < len; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; i + j < len; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

PowerSeries geom_pow(Int k, Int r, Int order) {
    if (k < 1 || r < 1) throw InvalidArgument("geom_pow needs k >= 1 and r >= 1");
    PowerSeries out(order);
    for (Int d = 0; d <= order; ++d) out[d] = composition_count(r, make_ratio(d, k));
    return out;
}

PowerSeries component_series(Component which, Int n, Int order, RotationWeights weights) {
    switch (which) {
    case Component::G1: {
        require_dihedral_order(n);
        PowerSeries out(order);
        for (Int r : divisors(n).divisors) {
            Int w = euler_phi(n / r);
            if (weights == RotationWeights::Alternating && r % 2 != 0) w = -w;
            out += mpq_class(static_cast<long>(w)) * geom_pow(n / r, r, order);
        }
        return out;
    }
    case Component::G2:
        require_even(n, "G2");
        return geom_pow(2, n / 2, order);
    case Component::G3: {
        require_even(n, "G3");
        return geom_pow(2, (n - 2) / 2, order) * geom_pow(1, 2, order);
    }
    }
    throw InvalidArgument("unknown component");
}

PowerSeries g3_double_sum(Int n, Int order) {
    require_even(n, "G3");
    PowerSeries out(order);
    for (Int d = 0; d <= order; ++d) {
        mpz_class b = 0;
        for (Int l = 0; l <= d / 2; ++l) b += binomial((n - 2) / 2 + l - 1, l) * (d - 2 * l + 1);
        out[d] = b;
    }
    return out;
}

PowerSeries odd_reflection_sum(Int n, Int order) {
    require_dihedral_order(n);
    if (n % 2 == 0) throw InvalidArgument("odd reflection series needs odd n");
    PowerSeries out(order);
    for (Int d = 0; d <= order; ++d) {
        mpz_class b = 0;
        for (Int l = 0; l <= d / 2; ++l) b += binomial((n - 1) / 2 + l - 1, l);
        out[d] = b;
    }
    return out;
}

PowerSeries odd_reflection_product(Int n, Int order) {
    require_dihedral_order(n);
    if (n % 2 == 0) throw InvalidArgument("odd reflection series needs odd n");
    return geom_pow(2, (n - 1) / 2, order) * geom_pow(1, 1, order);
}

PowerSeries generating_function(Int n, const CharacterId& chi, Int order) {
    require_dihedral_order(n);
    if (chi.n() != n) throw InvalidArgument("character " + chi.name() + " is not a character of D_" + std::to_string(n));
    require_order(order);

    if (chi.kind() == CharacterId::Kind::TwoDim) {
        PowerSeries out(order);
        for (Int r : divisors(n).divisors) {
            const Int weight = ramanujan_sum(n / r, chi.index());
            if (weight != 0) out += mpq_class(static_cast<long>(weight)) * geom_pow(n / r, r, order);
        }
        return make_ratio(2, n) * out;
    }

    const Int index = chi.index();
    const bool alternating = index >= 3;
    PowerSeries total = component_series(
        Component::G1, n, order, alternating ? RotationWeights::Alternating : RotationWeights::Plain);
    const mpq_class sign = (index == 1 || index == 3) ? 1 : -1;
    if (n % 2 != 0) {
        total += sign * mpq_class(static_cast<long>(n)) * odd_reflection_product(n, order);
    } else {
        const PowerSeries g2 = component_series(Component::G2, n, order);
        const PowerSeries g3 = component_series(Component::G3, n, order);
        const PowerSeries reflections = alternating ? g2 - g3 : g2 + g3;
        total += sign * mpq_class(static_cast<long>(n / 2)) * reflections;
    }
    return make_ratio(1, 2 * n) * total;
}

} // namespace dihedral
