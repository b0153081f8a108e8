#pragma once

// Closed-form generating functions as they appear in print, expanded
// verbatim and compared coefficient by coefficient with the dimensions they
// are supposed to count. Several of the even-n linear-character forms do not
// survive this check; nothing in the trusted path reads from this module.

#include <optional>
#include <string>
#include <vector>

#include "dihedral/series.hpp"

namespace dihedral {

struct PrintedFormCheck {
    std::string label;      // "chi1", "psi:2", "G3", ...
    std::string expression; // the printed closed form
    PowerSeries printed;    // its expansion
    PowerSeries expected;   // dimensions (or defining coefficients)
    std::vector<Int> divergent_degrees;

    std::optional<Int> first_divergence() const;
    bool agrees() const { return divergent_degrees.empty(); }
};

struct PrintedFormReport {
    Int n = 0;
    Int order = 0;
    std::vector<PrintedFormCheck> checks;

    const PrintedFormCheck* find(const std::string& label) const;
};

/// All printed forms that apply to D_n:
///   psi_h        two-dimensional characters, Moebius/totient form (any n);
///   chi1..chi2   odd n;
///   chi1..chi4   even n, with the (2+t^2)(1+t) and (1+t+t^2) factors;
///   G2, G3, G3'  even n, the reflection component series as stated;
///   D10 ...      n = 10 only, the worked D_10 expressions.
/// Characters are compared against dim_closed_form at every degree.
PrintedFormReport printed_form_report(Int n, Int order);

// The two worked D_10 expressions for psi_h (h coprime to 10, and not).
PowerSeries printed_d10_two_dim(bool h_coprime, Int order);

} // namespace dihedral
