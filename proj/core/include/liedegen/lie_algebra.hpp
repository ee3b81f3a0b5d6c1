#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liedegen/subspace.hpp"

namespace liedegen {

/// Sparse antisymmetric bilinear table on a coordinate space: only pairs
/// i < j are stored (0-based), the accessor supplies the sign for j < i,
/// and zero coefficients are never kept.
class BracketTable {
public:
    using Component = std::map<std::size_t, Scalar>;  // k -> coefficient
    using Entries = std::map<std::pair<std::size_t, std::size_t>, Component>;

    BracketTable(std::size_t dim, SymbolsPtr syms) : dim_(dim), syms_(std::move(syms)) {}

    std::size_t dim() const { return dim_; }
    const SymbolsPtr& symbols() const { return syms_; }
    const Entries& entries() const { return entries_; }

    /// Sets the coefficient of e_k in the value on (e_i, e_j); i != j.
    void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
    void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);

    /// Value on the basis pair (e_i, e_j), with antisymmetry applied.
    Vector on_basis(std::size_t i, std::size_t j) const;

    /// Bilinear antisymmetric extension to arbitrary vectors.
    Vector apply(const Vector& x, const Vector& y) const;

    bool is_zero() const { return entries_.empty(); }
    bool operator==(const BracketTable& o) const;
    bool operator!=(const BracketTable& o) const { return !(*this == o); }

    BracketTable operator+(const BracketTable& o) const;
    BracketTable scaled(const Scalar& c) const;
    /// Entrywise substitution t := value (a rational), for specialization.
    BracketTable substituted_t(const Rational& value) const;
    /// Entrywise limit t -> 0; throws PoleError on negative valuation.
    BracketTable limit_t_to_zero() const;
    /// Re-expresses every coefficient over a larger variable set.
    BracketTable lifted(const SymbolsPtr& target) const;

    std::string to_string() const;

private:
    std::size_t dim_;
    SymbolsPtr syms_;
    Entries entries_;
};

/// Lie algebra presented by structure constants. The Jacobi identity is
/// not enforced at construction; jacobi_residuals() is the explicit check,
/// which lets the toolkit represent and report broken tables.
class LieAlgebra {
public:
    LieAlgebra(std::string name, BracketTable table)
        : name_(std::move(name)), table_(std::move(table)) {}
    LieAlgebra(std::string name, std::size_t dim, SymbolsPtr syms)
        : name_(std::move(name)), table_(dim, std::move(syms)) {}

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    std::size_t dim() const { return table_.dim(); }
    const SymbolsPtr& symbols() const { return table_.symbols(); }
    const BracketTable& table() const { return table_; }
    BracketTable& table() { return table_; }

    Vector bracket(const Vector& x, const Vector& y) const { return table_.apply(x, y); }

    bool operator==(const LieAlgebra& o) const { return table_ == o.table_; }
    bool operator!=(const LieAlgebra& o) const { return !(*this == o); }

private:
    std::string name_;
    BracketTable table_;
};

struct JacobiResidual {
    std::size_t i, j, k;  // 0-based triple i < j < k
    Vector residual;
};

/// Nonzero Jacobi residuals J(i,j,k) over all basis triples, sorted by
/// triple; an empty list certifies a Lie algebra symbolically in all
/// declared parameters.
std::vector<JacobiResidual> jacobi_residuals(const LieAlgebra& mu);

/// Change-of-basis action (g.mu)(x, y) = g(mu(g^-1 x, g^-1 y)).
LieAlgebra gl_action(const LinearMap& g, const LieAlgebra& mu);

/// mu(ambient, h) contained in h.
bool subspace_is_ideal(const LieAlgebra& mu, const Subspace& h);

struct LeibnizResidual {
    std::size_t i, j;
    Vector residual;  // D(mu(e_i,e_j)) - mu(De_i, e_j) - mu(e_i, De_j)
};

struct DerivationReport {
    bool ok = false;
    std::vector<LeibnizResidual> residuals;
};

DerivationReport is_derivation(const LieAlgebra& mu, const LinearMap& d);

/// Basis of the full derivation algebra, solved from the Leibniz linear
/// system in dim^2 unknowns over the coefficient field.
std::vector<LinearMap> derivation_space(const LieAlgebra& mu);

/// Basis of the weight-vector space {w : w_i + w_j = w_k whenever
/// c_{ij}^k != 0}; each solution gives the diagonal derivation diag(w).
std::vector<Vector> diagonal_derivations(const LieAlgebra& mu);

enum class SeriesKind { LowerCentral, Derived };

/// Descending chain until stabilization, starting with the whole algebra.
std::vector<Subspace> series(const LieAlgebra& mu, SeriesKind kind);

bool is_nilpotent(const LieAlgebra& mu);
bool is_solvable(const LieAlgebra& mu);

/// The derived subalgebra [g, g].
Subspace derived_subalgebra(const LieAlgebra& mu);

/// Eigenvalue grading of a semisimple derivation.
struct Grading {
    std::vector<std::pair<Rational, Subspace>> pieces;  // sorted by weight
};

/// Grading by eigenspaces of the semisimple derivation D, with the
/// compatibility check mu(piece_a, piece_b) in piece_{a+b} (the zero space
/// when a+b is not a weight). Throws InvalidInputError on a non-derivation
/// or a compatibility violation, UnsupportedError on irrational spectra.
Grading eigen_grading(const LieAlgebra& mu, const LinearMap& d);

/// Structure constants of a bracket-closed subspace in its echelon basis.
/// Throws InvalidInputError when the subspace is not closed.
LieAlgebra restrict_to(const LieAlgebra& mu, const Subspace& h);

/// ad(x) = mu(x, .) as a matrix.
LinearMap ad(const LieAlgebra& mu, const Vector& x);

}  // namespace liedegen
