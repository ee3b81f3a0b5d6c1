#pragma once

#include <optional>
#include <string>

#include "liedegen/polynomial.hpp"

namespace liedegen {

/// Element of the rational-function field Q(t, p1, ..., pk), stored as a
/// reduced fraction num/den of polynomials.
///
/// Canonical form: gcd(num, den) = 1, den nonzero with graded-lex leading
/// coefficient 1, and zero represented as 0/1. Equality of canonical forms
/// is structural, so comparing against zero decides equality of values.
/// Values are immutable; every operation returns a fresh canonical Scalar.
class Scalar {
public:
    explicit Scalar(SymbolsPtr syms);                    // zero
    Scalar(Poly num, Poly den);                          // normalizes

    static Scalar from_rational(SymbolsPtr syms, const Rational& value);
    static Scalar from_poly(Poly p);
    static Scalar variable(SymbolsPtr syms, std::size_t var);
    static Scalar t(SymbolsPtr syms) { return variable(std::move(syms), Symbols::kDeformationVar); }
    static Scalar zero(SymbolsPtr syms) { return Scalar(std::move(syms)); }
    static Scalar one(SymbolsPtr syms) { return from_rational(std::move(syms), 1); }

    const SymbolsPtr& symbols() const { return num_.symbols(); }
    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    /// True when the value lies in Q (both parts constant).
    bool is_rational() const;
    Rational as_rational() const;  // throws UnsupportedError unless is_rational()
    /// True when neither part involves the deformation variable t.
    bool is_t_free() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws DivisionByZeroError
    Scalar inverse() const;
    Scalar pow(std::uint32_t e) const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Exact substitution var := value; throws PoleError when the
    /// substituted denominator vanishes identically.
    Scalar substitute(std::size_t var, const Scalar& value) const;

    /// v with *this = t^v * u, u regular and nonzero at t = 0.
    /// nullopt encodes +infinity (the zero scalar).
    std::optional<long> valuation_at_t0() const;

    /// Value at t = 0; throws PoleError when valuation is negative.
    Scalar value_at_t0() const;

    /// Re-expresses the value over a larger variable set (same names must
    /// all be present in `target`).
    Scalar lifted(const SymbolsPtr& target) const;

    std::string to_string() const;

    /// Parses the coefficient expression grammar: integers, rationals a/b,
    /// t and declared parameters, + - * / ^ and parentheses.
    static Scalar parse(std::string_view text, const SymbolsPtr& syms);

private:
    void normalize();

    Poly num_;
    Poly den_;
};

}  // namespace liedegen
