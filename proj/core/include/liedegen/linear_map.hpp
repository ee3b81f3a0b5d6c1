#pragma once

#include <optional>
#include <vector>

#include "liedegen/scalar.hpp"

namespace liedegen {

/// Coordinate vector over the scalar field.
using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n, const SymbolsPtr& syms);
Vector unit_vector(std::size_t n, std::size_t i, const SymbolsPtr& syms);
bool is_zero_vector(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Vector& v, const Scalar& c);
/// Renders as a combination of basis vectors, e.g. "e2 + 2*e4"; "0" if zero.
std::string vector_to_string(const Vector& v);

/// Dense rectangular matrix over the scalar field. Column j holds the image
/// of basis vector e_j, so apply() computes (Mv)_i = sum_j M[i][j] v_j.
class LinearMap {
public:
    LinearMap(std::size_t rows, std::size_t cols, SymbolsPtr syms);

    static LinearMap identity(std::size_t n, const SymbolsPtr& syms);
    static LinearMap diagonal(const Vector& entries);
    static LinearMap from_rows(const std::vector<Vector>& rows, const SymbolsPtr& syms);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const SymbolsPtr& symbols() const { return syms_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Scalar v) { entries_[i * cols_ + j] = std::move(v); }

    Vector apply(const Vector& v) const;
    Vector column(std::size_t j) const;
    Vector row(std::size_t i) const;

    LinearMap operator+(const LinearMap& o) const;
    LinearMap operator-(const LinearMap& o) const;
    LinearMap operator*(const LinearMap& o) const;  // matmul
    LinearMap scaled(const Scalar& c) const;

    bool operator==(const LinearMap& o) const;
    bool operator!=(const LinearMap& o) const { return !(*this == o); }

    bool is_zero() const;
    /// True when every off-diagonal entry vanishes.
    bool is_diagonal() const;
    /// True when no entry involves the deformation variable t.
    bool is_t_free() const;

private:
    std::size_t rows_, cols_;
    SymbolsPtr syms_;
    std::vector<Scalar> entries_;
};

LinearMap matmul(const LinearMap& a, const LinearMap& b);

/// Exact determinant by fraction-full Gaussian elimination with the first
/// nonzero pivot in row order.
Scalar determinant(const LinearMap& a);

/// Exact inverse; throws SingularMatrixError when the determinant vanishes.
LinearMap inverse(const LinearMap& a);

std::size_t rank(const LinearMap& a);

/// Echelonized basis of the right kernel. Deterministic: free columns in
/// increasing order, each basis vector has a 1 at its free column.
std::vector<Vector> kernel(const LinearMap& a);

/// General solution of A x = b.
struct AffineSolution {
    Vector particular;
    std::vector<Vector> kernel;
};
std::optional<AffineSolution> solve(const LinearMap& a, const Vector& b);

/// Dense univariate polynomial over the scalar field, used for minimal
/// polynomials. Coefficient i multiplies x^i.
class UnivariatePoly {
public:
    explicit UnivariatePoly(SymbolsPtr syms) : syms_(std::move(syms)) {}
    UnivariatePoly(SymbolsPtr syms, std::vector<Scalar> coeffs);

    const std::vector<Scalar>& coefficients() const { return coeffs_; }
    const SymbolsPtr& symbols() const { return syms_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    UnivariatePoly derivative() const;
    UnivariatePoly monic() const;
    UnivariatePoly operator*(const UnivariatePoly& o) const;
    UnivariatePoly operator-(const UnivariatePoly& o) const;
    bool operator==(const UnivariatePoly& o) const;

    Scalar evaluate(const Scalar& x) const;
    LinearMap evaluate_at_matrix(const LinearMap& a) const;

    /// Remainder of this by o (o nonzero).
    UnivariatePoly remainder(const UnivariatePoly& o) const;
    /// Monic gcd by the Euclidean algorithm over the scalar field.
    static UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b);

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();

    SymbolsPtr syms_;
    std::vector<Scalar> coeffs_;
};

/// Monic least-degree annihilating polynomial, found by iterating powers of
/// `a` and solving for the first linear dependence. Entries must be free of
/// the deformation variable t (parameters are fine).
UnivariatePoly minimal_polynomial(const LinearMap& a);

/// Squarefree minimal polynomial, i.e. diagonalizable over an algebraic
/// closure. Same t-free requirement as minimal_polynomial.
bool is_semisimple(const LinearMap& a);

/// A^n = 0 for n the dimension.
bool is_nilpotent_matrix(const LinearMap& a);

struct Eigenpair {
    Rational value;
    std::vector<Vector> eigenvectors;  // echelonized kernel of A - value*I
};

/// Distinct rational eigenvalues with eigenspace bases; requires a
/// semisimple operator whose minimal polynomial splits over Q. Throws
/// UnsupportedError for irrational or parameter-dependent spectra.
std::vector<Eigenpair> rational_eigenvalues(const LinearMap& a);

}  // namespace liedegen
