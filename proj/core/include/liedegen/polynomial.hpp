#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liedegen/rational.hpp"
#include "liedegen/symbols.hpp"

namespace liedegen {

/// Exponent vector, one slot per symbol of the owning variable set.
using Monomial = std::vector<std::uint32_t>;

/// Graded lexicographic order, larger-first: higher total degree wins,
/// ties broken lexicographically with earlier symbols more significant.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial over Q with a canonical term map: no zero
/// coefficients are stored and terms are kept in graded-lex order, so
/// structural equality is mathematical equality.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

    explicit Poly(SymbolsPtr syms) : syms_(std::move(syms)) {}

    static Poly constant(SymbolsPtr syms, const Rational& value);
    static Poly variable(SymbolsPtr syms, std::size_t var, std::uint32_t power = 1);

    const SymbolsPtr& symbols() const { return syms_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial (zero for the zero polynomial).
    Rational constant_value() const;

    /// Leading term under graded-lex (largest); polynomial must be nonzero.
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    int degree_in(std::size_t var) const;   // -1 for the zero polynomial
    int lowest_degree_in(std::size_t var) const;
    int total_degree() const;               // -1 for the zero polynomial
    bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    Poly pow(std::uint32_t e) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Coefficient of var^k, as a polynomial with the var slot zeroed.
    Poly coefficient_of(std::size_t var, std::uint32_t k) const;

    /// Exact substitution var := value; the result stays polynomial.
    Poly substitute_value(std::size_t var, const Rational& value) const;

    /// Quotient when the division is exact, nullopt otherwise.
    std::optional<Poly> exact_divide(const Poly& divisor) const;

    /// Monic (graded-lex leading coefficient 1) greatest common divisor.
    static Poly gcd(const Poly& a, const Poly& b);

    /// Canonical rendering in the coefficient expression grammar.
    std::string to_string() const;

    /// Term insertion used by builders; drops zero coefficients.
    void add_term(const Monomial& m, const Rational& c);

private:
    /// Divides every coefficient by the graded-lex leading coefficient.
    Poly monic() const;
    static Poly gcd_impl(const Poly& a, const Poly& b);
    Poly primitive_part(std::size_t var, Poly* content_out) const;
    static Poly pseudo_remainder(Poly a, const Poly& b, std::size_t var);

    SymbolsPtr syms_;
    TermMap terms_;
};

}  // namespace liedegen
