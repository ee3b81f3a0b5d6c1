#include "liedegen/scalar.hpp"

#include <sstream>

#include "liedegen/error.hpp"

namespace liedegen {

Scalar::Scalar(SymbolsPtr syms) : num_(syms), den_(Poly::constant(syms, 1)) {}

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_symbols(num_.symbols(), den_.symbols());
    if (den_.is_zero()) throw DivisionByZeroError("scalar with zero denominator");
    normalize();
}

Scalar Scalar::from_rational(SymbolsPtr syms, const Rational& value) {
    Scalar s(syms);
    s.num_ = Poly::constant(syms, value);
    return s;
}

Scalar Scalar::from_poly(Poly p) {
    auto syms = p.symbols();
    return Scalar(std::move(p), Poly::constant(syms, 1));
}

Scalar Scalar::variable(SymbolsPtr syms, std::size_t var) {
    return from_poly(Poly::variable(std::move(syms), var));
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.symbols(), 1);
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_constant()) {
        auto qn = num_.exact_divide(g);
        auto qd = den_.exact_divide(g);
        if (!qn || !qd) throw Error("internal: gcd does not divide operands");
        num_ = *qn;
        den_ = *qd;
    }
    const Rational lc = den_.leading_coefficient();
    if (lc != 1) {
        const Rational inv = Rational(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

bool Scalar::is_one() const {
    return den_.is_constant() && den_.constant_value() == 1 && num_.is_constant() &&
           num_.constant_value() == 1;
}

bool Scalar::is_rational() const { return num_.is_constant() && den_.is_constant(); }

Rational Scalar::as_rational() const {
    if (!is_rational())
        throw UnsupportedError("scalar is not a rational constant: " + to_string());
    return num_.constant_value() / den_.constant_value();
}

bool Scalar::is_t_free() const {
    return num_.degree_in(Symbols::kDeformationVar) <= 0 &&
           den_.degree_in(Symbols::kDeformationVar) <= 0;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    // Cross-cancel the denominators first to keep gcd inputs small.
    const Poly g = Poly::gcd(den_, o.den_);
    if (g.is_constant()) return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    const Poly da = *den_.exact_divide(g);
    const Poly db = *o.den_.exact_divide(g);
    return Scalar(num_ * db + o.num_ * da, den_ * db);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar(symbols());
    const Poly g1 = Poly::gcd(num_, o.den_);
    const Poly g2 = Poly::gcd(o.num_, den_);
    const Poly n1 = g1.is_constant() ? num_ : *num_.exact_divide(g1);
    const Poly d2 = g1.is_constant() ? o.den_ : *o.den_.exact_divide(g1);
    const Poly n2 = g2.is_constant() ? o.num_ : *o.num_.exact_divide(g2);
    const Poly d1 = g2.is_constant() ? den_ : *den_.exact_divide(g2);
    return Scalar(n1 * n2, d1 * d2);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw DivisionByZeroError("division by the zero scalar");
    return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of the zero scalar");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(std::uint32_t e) const {
    Scalar r = Scalar::one(symbols());
    for (std::uint32_t i = 0; i < e; ++i) r = r * *this;
    return r;
}

namespace {

// Horner-style evaluation of one variable at a Scalar, the remaining
// variables staying symbolic.
Scalar eval_poly_at(const Poly& p, std::size_t var, const Scalar& value) {
    const int d = p.degree_in(var);
    Scalar acc = Scalar::zero(p.symbols());
    for (int k = d < 0 ? 0 : d; k >= 0; --k) {
        Scalar coeff = Scalar::from_poly(p.coefficient_of(var, static_cast<std::uint32_t>(k)));
        acc = acc * value + coeff;
        if (k == 0) break;
    }
    return acc;
}

}  // namespace

Scalar Scalar::substitute(std::size_t var, const Scalar& value) const {
    require_same_symbols(symbols(), value.symbols());
    if (var >= symbols()->size()) throw DimensionError("variable index out of range");
    Scalar den_eval = eval_poly_at(den_, var, value);
    if (den_eval.is_zero())
        throw PoleError("substitution makes the denominator vanish; offending factor: " +
                            den_.to_string(),
                        den_.to_string());
    Scalar num_eval = eval_poly_at(num_, var, value);
    return num_eval / den_eval;
}

std::optional<long> Scalar::valuation_at_t0() const {
    if (is_zero()) return std::nullopt;  // +infinity
    const long vn = num_.lowest_degree_in(Symbols::kDeformationVar);
    const long vd = den_.lowest_degree_in(Symbols::kDeformationVar);
    return vn - vd;
}

Scalar Scalar::value_at_t0() const {
    auto v = valuation_at_t0();
    if (v && *v < 0)
        throw PoleError("pole at t=0 (valuation " + std::to_string(*v) + ") in " + to_string(),
                        den_.to_string());
    if (!v || *v > 0) return Scalar::zero(symbols());
    // Valuation 0: in canonical form t cannot divide the denominator here.
    return Scalar(num_.substitute_value(Symbols::kDeformationVar, 0),
                  den_.substitute_value(Symbols::kDeformationVar, 0));
}

Scalar Scalar::lifted(const SymbolsPtr& target) const {
    if (same_symbols(symbols(), target)) return *this;
    std::vector<std::size_t> map(symbols()->size());
    for (std::size_t v = 0; v < symbols()->size(); ++v) {
        auto idx = target->index_of(symbols()->name(v));
        if (!idx)
            throw DimensionError("cannot lift scalar: target lacks symbol '" +
                                 symbols()->name(v) + "'");
        map[v] = *idx;
    }
    auto lift_poly = [&](const Poly& p) {
        Poly out(target);
        for (const auto& [m, c] : p.terms()) {
            Monomial mm(target->size(), 0);
            for (std::size_t v = 0; v < m.size(); ++v) mm[map[v]] = m[v];
            out.add_term(mm, c);
        }
        return out;
    };
    return Scalar(lift_poly(num_), lift_poly(den_));
}

std::string Scalar::to_string() const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string();
    std::ostringstream out;
    const bool num_simple = num_.terms().size() <= 1;
    const bool den_simple = den_.terms().size() == 1;
    out << (num_simple ? num_.to_string() : "(" + num_.to_string() + ")");
    out << "/";
    // A denominator like "2*t" still needs parentheses: x/2*t parses as (x/2)*t.
    const bool den_atomic = den_simple && den_.leading_coefficient() == 1 &&
                            [&] {
                                int nonzero = 0;
                                for (auto e : den_.leading_monomial()) nonzero += e > 0;
                                return nonzero <= 1;
                            }();
    out << (den_atomic ? den_.to_string() : "(" + den_.to_string() + ")");
    return out.str();
}

}  // namespace liedegen
