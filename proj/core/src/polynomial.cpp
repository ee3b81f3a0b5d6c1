#include "liedegen/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "liedegen/error.hpp"

namespace liedegen {

namespace {

std::uint32_t monomial_total_degree(const Monomial& m) {
    std::uint32_t d = 0;
    for (auto e : m) d += e;
    return d;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
    // a | b as monomials
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial monomial_quotient(const Monomial& b, const Monomial& a) {
    Monomial q(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
    return q;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
    Monomial p(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) p[i] = a[i] + b[i];
    return p;
}

}  // namespace

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
    const auto da = monomial_total_degree(a);
    const auto db = monomial_total_degree(b);
    if (da != db) return da > db;
    return a > b;  // lexicographic, earlier symbol more significant
}

Poly Poly::constant(SymbolsPtr syms, const Rational& value) {
    Poly p(std::move(syms));
    if (value != 0) p.terms_.emplace(Monomial(p.syms_->size(), 0), value);
    return p;
}

Poly Poly::variable(SymbolsPtr syms, std::size_t var, std::uint32_t power) {
    Poly p(std::move(syms));
    if (var >= p.syms_->size()) throw DimensionError("variable index out of range");
    Monomial m(p.syms_->size(), 0);
    m[var] = power;
    if (power == 0) m.assign(p.syms_->size(), 0);
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && monomial_total_degree(terms_.begin()->first) == 0;
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw UnsupportedError("polynomial is not constant: " + to_string());
    return terms_.begin()->second;
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) throw DivisionByZeroError("leading term of the zero polynomial");
    return terms_.begin()->first;
}

const Rational& Poly::leading_coefficient() const {
    if (terms_.empty()) throw DivisionByZeroError("leading term of the zero polynomial");
    return terms_.begin()->second;
}

int Poly::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
    return d;
}

int Poly::lowest_degree_in(std::size_t var) const {
    if (terms_.empty()) return -1;
    int d = std::numeric_limits<int>::max();
    for (const auto& [m, c] : terms_) d = std::min(d, static_cast<int>(m[var]));
    return d;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    // Leading term has maximal total degree under graded-lex.
    return static_cast<int>(monomial_total_degree(terms_.begin()->first));
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(syms_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_symbols(syms_, o.syms_);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    require_same_symbols(syms_, o.syms_);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    require_same_symbols(syms_, o.syms_);
    Poly r(syms_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(monomial_product(ma, mb), ca * cb);
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    Poly r(syms_);
    if (c == 0) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

Poly Poly::pow(std::uint32_t e) const {
    Poly r = Poly::constant(syms_, 1);
    for (std::uint32_t i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool Poly::operator==(const Poly& o) const {
    return same_symbols(syms_, o.syms_) && terms_ == o.terms_;
}

Poly Poly::coefficient_of(std::size_t var, std::uint32_t k) const {
    Poly r(syms_);
    for (const auto& [m, c] : terms_) {
        if (m[var] != k) continue;
        Monomial stripped = m;
        stripped[var] = 0;
        r.terms_.emplace(std::move(stripped), c);
    }
    return r;
}

Poly Poly::substitute_value(std::size_t var, const Rational& value) const {
    Poly r(syms_);
    for (const auto& [m, c] : terms_) {
        Rational scaled = c;
        for (std::uint32_t i = 0; i < m[var]; ++i) scaled *= value;
        Monomial stripped = m;
        stripped[var] = 0;
        r.add_term(stripped, scaled);
    }
    return r;
}

std::optional<Poly> Poly::exact_divide(const Poly& divisor) const {
    require_same_symbols(syms_, divisor.syms_);
    if (divisor.is_zero()) throw DivisionByZeroError("division by the zero polynomial");
    Poly q(syms_);
    Poly r = *this;
    const Monomial& lmb = divisor.leading_monomial();
    const Rational& lcb = divisor.leading_coefficient();
    while (!r.is_zero()) {
        const Monomial& lmr = r.leading_monomial();
        if (!monomial_divides(lmb, lmr)) return std::nullopt;
        Monomial qm = monomial_quotient(lmr, lmb);
        Rational qc = r.leading_coefficient() / lcb;
        Poly step(syms_);
        step.terms_.emplace(qm, qc);
        q = q + step;
        r = r - step * divisor;
    }
    return q;
}

Poly Poly::monic() const {
    if (terms_.empty()) return *this;
    return *this * (Rational(1) / leading_coefficient());
}

// Pseudo-remainder of a by b in the variable `var`: repeatedly kills the
// leading var-term of a after scaling by b's leading var-coefficient.
Poly Poly::pseudo_remainder(Poly a, const Poly& b, std::size_t var) {
    const int db = b.degree_in(var);
    Poly lcb = b.coefficient_of(var, static_cast<std::uint32_t>(db));
    int da = a.degree_in(var);
    while (!a.is_zero() && da >= db) {
        Poly lca = a.coefficient_of(var, static_cast<std::uint32_t>(da));
        Poly shift = Poly::variable(a.symbols(), var, static_cast<std::uint32_t>(da - db));
        a = a * lcb - b * (lca * shift);
        da = a.degree_in(var);
    }
    return a;
}

// Content/primitive-part split with respect to `var`: content is the gcd of
// the var-coefficients (a polynomial in the remaining variables).
Poly Poly::primitive_part(std::size_t var, Poly* content_out) const {
    const int d = degree_in(var);
    Poly content(syms_);
    for (int k = 0; k <= d; ++k) {
        Poly ck = coefficient_of(var, static_cast<std::uint32_t>(k));
        if (!ck.is_zero()) content = gcd_impl(content, ck);
    }
    if (content_out) *content_out = content;
    if (content.is_zero()) return *this;  // zero polynomial
    auto pp = exact_divide(content);
    if (!pp) throw Error("internal: content does not divide polynomial");
    return pp->monic();
}

Poly Poly::gcd_impl(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly::constant(a.symbols(), 1);

    // Main variable: first symbol actually present in either operand.
    std::size_t var = 0;
    const std::size_t nv = a.symbols()->size();
    while (var < nv && a.degree_in(var) <= 0 && b.degree_in(var) <= 0) ++var;

    Poly ca(a.symbols()), cb(a.symbols());
    Poly pa = a.primitive_part(var, &ca);
    Poly pb = b.primitive_part(var, &cb);
    Poly c = gcd_impl(ca, cb);

    // Primitive PRS in `var`; every remainder renormalized to a monic
    // primitive polynomial, which keeps coefficient growth in check.
    while (!pb.is_zero()) {
        Poly r = pseudo_remainder(pa, pb, var);
        pa = pb;
        if (r.is_zero()) {
            pb = r;
        } else if (r.degree_in(var) <= 0) {
            // Nonzero remainder free of var: the var-parts are coprime.
            pa = Poly::constant(a.symbols(), 1);
            pb = Poly(a.symbols());
        } else {
            pb = r.primitive_part(var, nullptr);
        }
    }
    return (c * pa).monic();
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    require_same_symbols(a.symbols(), b.symbols());
    return gcd_impl(a, b);
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string mono;
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += syms_->name(v);
            if (m[v] > 1) mono += "^" + std::to_string(m[v]);
        }
        if (mono.empty()) {
            out << liedegen::to_string(abs_c);
        } else if (abs_c == 1) {
            out << mono;
        } else {
            out << liedegen::to_string(abs_c) << "*" << mono;
        }
    }
    return out.str();
}

}  // namespace liedegen
