#include "dihedral/printed_forms.hpp"

#include <numeric>
#include <utility>

#include "dihedral/dims.hpp"
#include "dihedral/errors.hpp"

namespace dihedral {
namespace {

mpq_class q(long v) { return mpq_class(v); }

PowerSeries dimension_series(Int n, const CharacterId& chi, Int order) {
    PowerSeries out(order);
    for (Int d = 0; d <= order; ++d) out[d] = dim_closed_form(n, d, chi);
    return out;
}

PrintedFormCheck compare(std::string label, std::string expression, PowerSeries printed,
                         PowerSeries expected) {
    PrintedFormCheck check{std::move(label), std::move(expression), std::move(printed),
                           std::move(expected), {}};
    for (Int d = 0; d <= check.expected.order(); ++d) {
        if (check.printed[d] != check.expected[d]) check.divergent_degrees.push_back(d);
    }
    return check;
}

// sum_{r|n} w(r) (1 - t^{n/r})^{-r}
template <typename Weight>
PowerSeries divisor_series(Int n, Int order, Weight weight) {
    PowerSeries out(order);
    for (Int r : divisors(n).divisors) {
        const Int w = weight(r);
        if (w != 0) out += q(w) * geom_pow(n / r, r, order);
    }
    return out;
}

// mu((n/r)/g) phi(n/r) / phi((n/r)/g), g = gcd(h, n/r)
Int moebius_totient_weight(Int n, Int r, Int h) {
    const Int m = n / r;
    const Int g = std::gcd(h, m);
    return moebius(m / g) * (euler_phi(m) / euler_phi(m / g));
}

PowerSeries two_dim_printed(Int n, Int h, Int order) {
    const bool coprime = std::gcd(h, n) == 1;
    PowerSeries sum = divisor_series(n, order, [&](Int r) {
        return coprime ? Int{moebius(n / r)} : moebius_totient_weight(n, r, h);
    });
    return make_ratio(2, n) * sum;
}

PowerSeries linear_rotation_part(Int n, Int order, bool alternating) {
    return divisor_series(n, order, [&](Int r) {
        const Int phi = euler_phi(n / r);
        return alternating && r % 2 != 0 ? -phi : phi;
    });
}

void add_two_dim_checks(Int n, Int order, PrintedFormReport& report) {
    for (const CharacterId& chi : irreducible_characters(n)) {
        if (chi.kind() != CharacterId::Kind::TwoDim) continue;
        const bool coprime = std::gcd(chi.index(), n) == 1;
        report.checks.push_back(compare(
            chi.name(),
            coprime ? "(2/n) sum_{r|n} mu(n/r) (1-t^{n/r})^{-r}"
                    : "(2/n) sum_{r|n} mu((n/r)/g) phi(n/r)/phi((n/r)/g) (1-t^{n/r})^{-r}, "
                      "g = gcd(h, n/r)",
            two_dim_printed(n, chi.index(), order), dimension_series(n, chi, order)));
    }
}

void add_odd_linear_checks(Int n, Int order, PrintedFormReport& report) {
    const PowerSeries rotations = linear_rotation_part(n, order, false);
    const PowerSeries reflections =
        q(n) * geom_pow(2, (n - 1) / 2, order) * geom_pow(1, 1, order);
    const mpq_class scale = make_ratio(1, 2 * n);
    report.checks.push_back(compare(
        "chi1", "(1/2n)[sum_{r|n} phi(n/r)(1-t^{n/r})^{-r} + n(1-t^2)^{-(n-1)/2}/(1-t)]",
        scale * (rotations + reflections), dimension_series(n, CharacterId::linear(n, 1), order)));
    report.checks.push_back(compare(
        "chi2", "(1/2n)[sum_{r|n} phi(n/r)(1-t^{n/r})^{-r} - n(1-t^2)^{-(n-1)/2}/(1-t)]",
        scale * (rotations - reflections), dimension_series(n, CharacterId::linear(n, 2), order)));
}

void add_even_linear_checks(Int n, Int order, PrintedFormReport& report) {
    const mpq_class scale = make_ratio(1, 2 * n);
    const PowerSeries denominator = geom_pow(2, (n + 2) / 2, order);
    const PowerSeries symmetric = q(n / 2) * denominator * PowerSeries::polynomial({2, 2, 1, 1}, order);
    const PowerSeries alternating = q(n / 2) * denominator * PowerSeries::polynomial({1, 1, 1}, order);
    const PowerSeries plain_rotations = linear_rotation_part(n, order, false);
    const PowerSeries signed_rotations = linear_rotation_part(n, order, true);

    struct Form {
        int index;
        const char* expression;
        const PowerSeries& rotations;
        const PowerSeries& reflections;
        int sign;
    };
    const Form forms[] = {
        {1, "(1/2n)[sum_{r|n} phi(n/r)(1-t^{n/r})^{-r} + (n/2)(1-t^2)^{-(n+2)/2}(2+t^2)(1+t)]",
         plain_rotations, symmetric, 1},
        {2, "(1/2n)[sum_{r|n} phi(n/r)(1-t^{n/r})^{-r} - (n/2)(1-t^2)^{-(n+2)/2}(2+t^2)(1+t)]",
         plain_rotations, symmetric, -1},
        {3, "(1/2n)[sum_{r|n} phi(n/r)(-1)^r(1-t^{n/r})^{-r} - (n/2)(1-t^2)^{-(n+2)/2}(1+t+t^2)]",
         signed_rotations, alternating, -1},
        {4, "(1/2n)[sum_{r|n} phi(n/r)(-1)^r(1-t^{n/r})^{-r} + (n/2)(1-t^2)^{-(n+2)/2}(1+t+t^2)]",
         signed_rotations, alternating, 1},
    };
    for (const Form& f : forms) {
        const CharacterId chi = CharacterId::linear(n, f.index);
        report.checks.push_back(compare(chi.name(), f.expression,
                                        scale * (f.rotations + q(f.sign) * f.reflections),
                                        dimension_series(n, chi, order)));
    }
}

void add_component_checks(Int n, Int order, PrintedFormReport& report) {
    // (1 - t^2)^{n/2}, exponent as printed
    PowerSeries g2_printed(order);
    for (Int j = 0; 2 * j <= order && j <= n / 2; ++j) {
        mpq_class c(binomial(n / 2, j));
        g2_printed[2 * j] = j % 2 == 0 ? c : mpq_class(-c);
    }
    PowerSeries g2_expected(order);
    for (Int d = 0; d <= order; d += 2) g2_expected[d] = binomial(n / 2 + d / 2 - 1, d / 2);
    report.checks.push_back(
        compare("G2", "(1-t^2)^{n/2}", std::move(g2_printed), std::move(g2_expected)));

    const PowerSeries g3_expected = g3_double_sum(n, order);
    const PowerSeries denominator = geom_pow(2, (n + 2) / 2, order);
    report.checks.push_back(compare("G3", "(1-t^2)^{-(n+2)/2}(1+2t+t^2+t^3)",
                                    denominator * PowerSeries::polynomial({1, 2, 1, 1}, order),
                                    g3_expected));
    report.checks.push_back(compare("G3'", "(1-t^2)^{-(n+2)/2}(1+2t+2t^2+t^3)",
                                    denominator * PowerSeries::polynomial({1, 2, 2, 1}, order),
                                    g3_expected));
}

void add_d10_checks(Int order, PrintedFormReport& report) {
    constexpr Int n = 10;
    for (Int h = 1; h <= 4; ++h) {
        const bool coprime = h % 2 != 0;
        report.checks.push_back(compare(
            "D10 psi:" + std::to_string(h),
            coprime ? "(1/5)[1/(1-t^10) - 1/(1-t^5)^2 - 1/(1-t^2)^5 + 1/(1-t)^10]"
                    : "(1/5)[-1/(1-t^10) - 1/(1-t^5)^2 + 1/(1-t^2)^5 + 1/(1-t)^10]",
            printed_d10_two_dim(coprime, order),
            dimension_series(n, CharacterId::two_dim(n, h), order)));
    }

    const PowerSeries denominator = geom_pow(2, 6, order);
    const PowerSeries plain = geom_pow(10, 1, order) + q(4) * geom_pow(5, 2, order) +
                              geom_pow(2, 5, order) + geom_pow(1, 10, order);
    const PowerSeries signed_part = q(-1) * geom_pow(10, 1, order) + q(4) * geom_pow(5, 2, order) -
                                    geom_pow(2, 5, order) + geom_pow(1, 10, order);
    const PowerSeries symmetric = q(10) * denominator * PowerSeries::polynomial({2, 2, 1, 1}, order);
    const PowerSeries alternating = q(10) * denominator * PowerSeries::polynomial({1, 1, 1}, order);
    const mpq_class scale = make_ratio(1, 20);

    const std::string plain_text = "(1/20){[1/(1-t^10) + 4/(1-t^5)^2 + 1/(1-t^2)^5 + 1/(1-t)^10] ";
    const std::string signed_text = "(1/20){[-1/(1-t^10) + 4/(1-t^5)^2 - 1/(1-t^2)^5 + 1/(1-t)^10] ";
    report.checks.push_back(compare("D10 chi1", plain_text + "+ 10 (2+t^2)(1+t)/(1-t^2)^6}",
                                    scale * (plain + symmetric),
                                    dimension_series(n, CharacterId::linear(n, 1), order)));
    report.checks.push_back(compare("D10 chi2", plain_text + "- 10 (2+t^2)(1+t)/(1-t^2)^6}",
                                    scale * (plain - symmetric),
                                    dimension_series(n, CharacterId::linear(n, 2), order)));
    report.checks.push_back(compare("D10 chi3", signed_text + "- 10 (1+t+t^2)/(1-t^2)^6}",
                                    scale * (signed_part - alternating),
                                    dimension_series(n, CharacterId::linear(n, 3), order)));
    report.checks.push_back(compare("D10 chi4", signed_text + "+ 10 (1+t+t^2)/(1-t^2)^6}",
                                    scale * (signed_part + alternating),
                                    dimension_series(n, CharacterId::linear(n, 4), order)));
}

} // namespace

std::optional<Int> PrintedFormCheck::first_divergence() const {
    if (divergent_degrees.empty()) return std::nullopt;
    return divergent_degrees.front();
}

const PrintedFormCheck* PrintedFormReport::find(const std::string& label) const {
    for (const auto& check : checks) {
        if (check.label == label) return &check;
    }
    return nullptr;
}

PowerSeries printed_d10_two_dim(bool h_coprime, Int order) {
    const mpq_class outer = h_coprime ? 1 : -1;
    const mpq_class inner = h_coprime ? -1 : 1;
    PowerSeries sum = outer * geom_pow(10, 1, order) - geom_pow(5, 2, order) +
                      inner * geom_pow(2, 5, order) + geom_pow(1, 10, order);
    return make_ratio(1, 5) * sum;
}

PrintedFormReport printed_form_report(Int n, Int order) {
    require_dihedral_order(n);
    if (order < 0) throw InvalidArgument("series order must be non-negative");
    PrintedFormReport report{n, order, {}};
    if (n % 2 != 0) {
        add_odd_linear_checks(n, order, report);
    } else {
        add_even_linear_checks(n, order, report);
    }
    add_two_dim_checks(n, order, report);
    if (n % 2 == 0) add_component_checks(n, order, report);
    if (n == 10) add_d10_checks(order, report);
    return report;
}

} // namespace dihedral
