#pragma once

#include "liedegen/lie_algebra.hpp"

namespace liedegen {

/// Skew bilinear form on a coordinate space (same sparse storage as a
/// structure-constant table); houses deformation cocycles.
class BilinearForm {
public:
    explicit BilinearForm(BracketTable table) : table_(std::move(table)) {}
    BilinearForm(std::size_t dim, SymbolsPtr syms) : table_(dim, std::move(syms)) {}

    std::size_t dim() const { return table_.dim(); }
    const SymbolsPtr& symbols() const { return table_.symbols(); }
    const BracketTable& table() const { return table_; }
    BracketTable& table() { return table_; }

    Vector apply(const Vector& x, const Vector& y) const { return table_.apply(x, y); }
    bool is_zero() const { return table_.is_zero(); }
    bool operator==(const BilinearForm& o) const { return table_ == o.table_; }

private:
    BracketTable table_;
};

/// The cocycle of the codimension-1 construction: phi(X, z) = D(z) for z in
/// the ideal, phi vanishing on ideal x ideal and on (X, X), extended
/// bilinearly. D acts in the echelon basis of h. Throws InvalidInputError
/// when X lies in h, h is not an ideal, or D fails Leibniz on h.
BilinearForm build_mu_D(const LieAlgebra& mu, const Vector& X, const Subspace& h,
                        const LinearMap& D);

/// Per-power Jacobi residual of the pencil mu + t*phi for one basis triple.
struct CurveJacobiResidual {
    std::size_t i, j, k;
    std::vector<std::pair<int, Vector>> by_power;  // nonzero t-powers only
};

struct DeformationValidity {
    bool valid = false;
    std::vector<CurveJacobiResidual> residuals;
};

/// True iff Jacobi of mu + t*phi vanishes identically in t. For t-free
/// inputs the failing powers are reported: t^0 is Jacobi of mu, t^1 the
/// cocycle condition, t^2 Jacobi of phi.
DeformationValidity is_valid_deformation(const LieAlgebra& mu, const BilinearForm& phi);

/// One-parameter family mu_t = mu + t*phi with its realized table over
/// Q(t, params).
class DeformationCurve {
public:
    DeformationCurve(LieAlgebra base, BilinearForm cocycle);

    const LieAlgebra& base() const { return base_; }
    const BilinearForm& cocycle() const { return cocycle_; }
    /// The table of mu_t, entries polynomial in t.
    const LieAlgebra& realized() const { return realized_; }

private:
    LieAlgebra base_;
    BilinearForm cocycle_;
    LieAlgebra realized_;
};

/// Builds the curve after validating the deformation; throws
/// InvalidInputError carrying the residual report summary otherwise.
DeformationCurve deform(const LieAlgebra& mu, const BilinearForm& phi);

/// Exact substitution t := t0 in the realized table.
LieAlgebra specialize(const DeformationCurve& curve, const Rational& t0);

/// Output of the ideal-construction pipeline: a codimension-1 ideal h
/// containing the derived subalgebra, a complementary eigenvector X of unit
/// coordinate, and the restriction of the derivation to h.
struct Codim1Split {
    Vector X;
    Subspace ideal;
    LinearMap D_ideal;  // in the echelon basis of `ideal`
};

/// For a nilpotent algebra with a nontrivial semisimple derivation D with
/// rational eigenvalues: completes an eigenvector basis of a D-invariant
/// complement of [n,n], picks the first eigenvector with nonzero eigenvalue
/// as X (nonzero eigenvalues first, in increasing order), and returns
/// h = span(remaining eigenvectors) + [n,n] with D restricted to it.
Codim1Split codim1_split(const LieAlgebra& mu, const LinearMap& D);

}  // namespace liedegen
