#include "dihedral/cyclo.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <utility>

#include "dihedral/errors.hpp"

namespace dihedral {

namespace detail {

struct CycloModulus {
    Int n = 0;
    IntPoly phi; // monic, degree = euler_phi(n)
    // Reduced forms of x^k for 0 <= k < n.
    std::vector<std::vector<mpq_class>> powers;

    std::size_t degree() const { return phi.size() - 1; }
};

} // namespace detail

namespace {

using QPoly = std::vector<mpq_class>;

// Exact quotient of a by a monic b; the remainder must vanish.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
    IntPoly rem = a;
    const std::size_t db = b.size() - 1;
    IntPoly quot(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const Int c = rem[i];
        if (c == 0) continue;
        quot[i - db] = c;
        for (std::size_t t = 0; t <= db; ++t) rem[i - db + t] -= c * b[t];
    }
    for (std::size_t i = 0; i < db; ++i) {
        if (rem[i] != 0) throw InternalInconsistency("cyclotomic division left a remainder");
    }
    return quot;
}

IntPoly cyclotomic_memo(Int n, std::map<Int, IntPoly>& memo) {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    IntPoly p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (Int d : divisors(n).divisors) {
        if (d == n) break;
        p = divide_exact(p, cyclotomic_memo(d, memo));
    }
    memo.emplace(n, p);
    return p;
}

// In place: reduce p modulo the monic phi, leaving exactly deg(phi) coefficients.
void reduce(QPoly& p, const IntPoly& phi) {
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = p.size(); i-- > deg;) {
        if (sgn(p[i]) == 0) continue;
        const mpq_class c = p[i];
        for (std::size_t t = 0; t < deg; ++t) {
            if (phi[t] != 0) p[i - deg + t] -= c * static_cast<long>(phi[t]);
        }
        p[i] = 0;
    }
    p.resize(deg, mpq_class(0));
}

void trim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Polynomial long division over Q; b must be nonzero and trimmed.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    trim(a);
    if (a.size() < b.size()) return {QPoly{}, a};
    QPoly q(a.size() - b.size() + 1);
    const mpq_class& lead = b.back();
    for (std::size_t shift = q.size(); shift-- > 0;) {
        const mpq_class& top = a[shift + b.size() - 1];
        if (sgn(top) == 0) continue;
        const mpq_class c = top / lead;
        q[shift] = c;
        for (std::size_t t = 0; t < b.size(); ++t) a[shift + t] -= c * b[t];
    }
    trim(a);
    trim(q);
    return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

QPoly sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

} // namespace

IntPoly cyclotomic_polynomial(Int n) {
    if (n < 1) throw InvalidArgument("cyclotomic_polynomial: n must be positive");
    std::map<Int, IntPoly> memo;
    return cyclotomic_memo(n, memo);
}

NotRationalInteger::NotRationalInteger(Kind kind, std::vector<mpq_class> coeffs)
    : std::domain_error(kind == Kind::NonConstant ? "cyclotomic value is not a constant"
                                                  : "constant is not an integer"),
      kind_(kind), coeffs_(std::move(coeffs)) {}

// ---- CycloNumber ----------------------------------------------------------

CycloNumber::CycloNumber(std::shared_ptr<const detail::CycloModulus> mod,
                         std::vector<mpq_class> coeffs)
    : mod_(std::move(mod)), coeffs_(std::move(coeffs)) {}

Int CycloNumber::conductor() const { return mod_->n; }

bool CycloNumber::is_zero() const {
    for (const auto& c : coeffs_) {
        if (sgn(c) != 0) return false;
    }
    return true;
}

bool CycloNumber::is_constant() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) != 0) return false;
    }
    return true;
}

void CycloNumber::require_same_field(const CycloNumber& other) const {
    if (mod_->n != other.mod_->n) {
        throw InvalidArgument("conductor mismatch: " + std::to_string(mod_->n) + " vs " +
                              std::to_string(other.mod_->n));
    }
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& rhs) {
    require_same_field(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& rhs) {
    require_same_field(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycloNumber& CycloNumber::operator*=(const mpq_class& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& rhs) {
    require_same_field(rhs);
    if (rhs.is_constant()) return *this *= rhs.coeffs_.front();
    if (is_constant()) {
        const mpq_class c = coeffs_.front();
        coeffs_ = rhs.coeffs_;
        return *this *= c;
    }
    QPoly product = mul(coeffs_, rhs.coeffs_);
    reduce(product, mod_->phi);
    coeffs_ = std::move(product);
    return *this;
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
    return a.mod_->n == b.mod_->n && a.coeffs_ == b.coeffs_;
}

std::complex<double> CycloNumber::evaluate() const {
    const double angle = 2.0 * std::numbers::pi / static_cast<double>(mod_->n);
    std::complex<double> sum = 0.0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (sgn(coeffs_[k]) == 0) continue;
        sum += coeffs_[k].get_d() * std::polar(1.0, angle * static_cast<double>(k));
    }
    return sum;
}

std::string CycloNumber::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (sgn(coeffs_[k]) == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << coeffs_[k].get_str();
        if (k > 0) os << "*z^" << k;
    }
    if (first) os << "0";
    return os.str();
}

// ---- CycloField -----------------------------------------------------------

CycloField::CycloField(Int n) {
    if (n < 1) throw InvalidArgument("CycloField: conductor must be positive");
    auto mod = std::make_shared<detail::CycloModulus>();
    mod->n = n;
    mod->phi = cyclotomic_polynomial(n);
    const std::size_t deg = mod->degree();
    mod->powers.reserve(static_cast<std::size_t>(n));
    QPoly current(deg, mpq_class(0));
    current[0] = 1;
    for (Int k = 0; k < n; ++k) {
        mod->powers.push_back(current);
        // multiply by x and fold the overflowing coefficient back
        QPoly shifted(deg + 1, mpq_class(0));
        for (std::size_t i = 0; i < deg; ++i) shifted[i + 1] = current[i];
        reduce(shifted, mod->phi);
        current = std::move(shifted);
    }
    mod_ = std::move(mod);
}

Int CycloField::conductor() const { return mod_->n; }
Int CycloField::degree() const { return static_cast<Int>(mod_->degree()); }
const IntPoly& CycloField::modulus() const { return mod_->phi; }

CycloNumber CycloField::zero() const {
    return CycloNumber(mod_, std::vector<mpq_class>(mod_->degree(), mpq_class(0)));
}

CycloNumber CycloField::one() const { return constant(1); }

CycloNumber CycloField::constant(const mpq_class& value) const {
    CycloNumber out = zero();
    out.coeffs_.front() = value;
    return out;
}

CycloNumber CycloField::root_power(Int k) const {
    Int r = k % mod_->n;
    if (r < 0) r += mod_->n;
    return CycloNumber(mod_, mod_->powers[static_cast<std::size_t>(r)]);
}

CycloNumber CycloField::from_polynomial(std::vector<mpq_class> coeffs) const {
    if (coeffs.size() < mod_->degree()) coeffs.resize(mod_->degree(), mpq_class(0));
    reduce(coeffs, mod_->phi);
    return CycloNumber(mod_, std::move(coeffs));
}

CycloNumber root_power(Int n, Int k) { return CycloField(n).root_power(k); }

CycloNumber inverse(const CycloNumber& a) {
    if (a.is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" +
                                          std::to_string(a.conductor()) + ")");
    if (a.is_constant()) {
        CycloNumber out = a;
        out.coeffs_.front() = 1 / a.constant_term();
        return out;
    }

    const IntPoly& phi = a.mod_->phi;
    // Invariant: s_i * a == r_i (mod Phi_n).
    QPoly r0;
    for (Int c : phi) r0.emplace_back(static_cast<long>(c));
    QPoly r1 = a.coeffs();
    trim(r1);
    QPoly s0;
    QPoly s1{mpq_class(1)};
    while (r1.size() > 1) {
        auto [q, rem] = divmod(r0, r1);
        QPoly s2 = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // Phi_n is irreducible, so the last nonzero remainder is a unit.
    if (r1.empty()) throw InternalInconsistency("non-unit gcd against cyclotomic polynomial");
    const mpq_class scale = 1 / r1.front();
    for (auto& c : s1) c *= scale;
    if (s1.size() < phi.size() - 1) s1.resize(phi.size() - 1, mpq_class(0));
    reduce(s1, phi);
    return CycloNumber(a.mod_, std::move(s1));
}

mpz_class as_rational_integer(const CycloNumber& a) {
    if (!a.is_constant()) {
        throw NotRationalInteger(NotRationalInteger::Kind::NonConstant, a.coeffs());
    }
    const mpq_class& c = a.constant_term();
    if (c.get_den() != 1) {
        throw NotRationalInteger(NotRationalInteger::Kind::NonIntegerConstant, a.coeffs());
    }
    return c.get_num();
}

} // namespace dihedral
