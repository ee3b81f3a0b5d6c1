#include "liedegen/deformation.hpp"

#include <algorithm>
#include <sstream>

#include "liedegen/error.hpp"

namespace liedegen {

BilinearForm build_mu_D(const LieAlgebra& mu, const Vector& X, const Subspace& h,
                        const LinearMap& D) {
    const std::size_t n = mu.dim();
    if (X.size() != n) throw DimensionError("build_mu_D: X has wrong length");
    if (h.ambient_dim() != n || h.dim() + 1 != n)
        throw InvalidInputError("build_mu_D: h must have codimension 1");
    if (D.rows() != h.dim() || D.cols() != h.dim())
        throw DimensionError("build_mu_D: D must act on the ideal");
    if (h.contains(X)) throw InvalidInputError("build_mu_D: X lies in the ideal");
    if (!subspace_is_ideal(mu, h)) throw InvalidInputError("build_mu_D: h is not an ideal");
    auto rep = is_derivation(restrict_to(mu, h), D);
    if (!rep.ok)
        throw InvalidInputError("build_mu_D: D fails the Leibniz rule on the ideal");

    // Normalize X so the pivot its residual adds on top of h's echelon
    // basis carries coordinate 1. The residual of X is zero at every pivot
    // column of h, so its leading coordinate sits at the new pivot.
    Vector Xn = X;
    {
        Vector residual = h.reduce(X);
        Scalar lead = Scalar::zero(mu.symbols());
        for (std::size_t i = 0; i < n; ++i) {
            if (!residual[i].is_zero()) {
                lead = residual[i];
                break;
            }
        }
        if (lead.is_zero()) throw InvalidInputError("build_mu_D: X lies in the ideal");
        Xn = scale(Xn, lead.inverse());
    }

    // Decompose e_i = alpha_i X + (part in h) by solving in the basis
    // [X | h-basis]; then phi(e_i, e_j) = alpha_i D(h_j) - alpha_j D(h_i).
    LinearMap basis_cols(n, n, mu.symbols());
    for (std::size_t i = 0; i < n; ++i) basis_cols.set(i, 0, Xn[i]);
    for (std::size_t b = 0; b < h.dim(); ++b)
        for (std::size_t i = 0; i < n; ++i) basis_cols.set(i, b + 1, h.basis()[b][i]);
    const LinearMap to_split = inverse(basis_cols);

    // Ambient image of D applied to the h-part of a split vector.
    auto d_of_hpart = [&](const Vector& split) {
        Vector hcoords(split.begin() + 1, split.end());
        Vector dh = D.apply(hcoords);
        Vector out = zero_vector(n, mu.symbols());
        for (std::size_t b = 0; b < h.dim(); ++b)
            out = add(out, scale(h.basis()[b], dh[b]));
        return out;
    };

    BracketTable table(n, mu.symbols());
    std::vector<Vector> splits;
    for (std::size_t i = 0; i < n; ++i)
        splits.push_back(to_split.apply(unit_vector(n, i, mu.symbols())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Scalar& ai = splits[i][0];
            const Scalar& aj = splits[j][0];
            Vector v = zero_vector(n, mu.symbols());
            if (!ai.is_zero()) v = add(v, scale(d_of_hpart(splits[j]), ai));
            if (!aj.is_zero()) v = sub(v, scale(d_of_hpart(splits[i]), aj));
            for (std::size_t k = 0; k < n; ++k)
                if (!v[k].is_zero()) table.set(i, j, k, v[k]);
        }
    return BilinearForm(std::move(table));
}

namespace {

// Realized table of mu + t*phi over the shared variable set.
BracketTable pencil_table(const LieAlgebra& mu, const BilinearForm& phi) {
    if (mu.dim() != phi.dim()) throw DimensionError("deformation dimension mismatch");
    require_same_symbols(mu.symbols(), phi.symbols());
    const Scalar t = Scalar::t(mu.symbols());
    return mu.table() + phi.table().scaled(t);
}

}  // namespace

DeformationValidity is_valid_deformation(const LieAlgebra& mu, const BilinearForm& phi) {
    LieAlgebra pencil("pencil", pencil_table(mu, phi));
    DeformationValidity out;
    for (auto& res : jacobi_residuals(pencil)) {
        CurveJacobiResidual item{res.i, res.j, res.k, {}};
        // Decompose each residual component by powers of t. Components are
        // polynomial in t when the inputs are t-free; otherwise the whole
        // residual is reported at the power of its t-valuation.
        int max_pow = 0;
        bool polynomial = true;
        for (const auto& c : res.residual) {
            if (c.denominator().degree_in(Symbols::kDeformationVar) > 0) polynomial = false;
            max_pow = std::max(max_pow, c.numerator().degree_in(Symbols::kDeformationVar));
        }
        if (polynomial) {
            for (int p = 0; p <= max_pow; ++p) {
                Vector comp = zero_vector(pencil.dim(), mu.symbols());
                bool nonzero = false;
                for (std::size_t k = 0; k < res.residual.size(); ++k) {
                    const Scalar& c = res.residual[k];
                    Poly cp = c.numerator().coefficient_of(Symbols::kDeformationVar,
                                                           static_cast<std::uint32_t>(p));
                    if (cp.is_zero()) continue;
                    comp[k] = Scalar(std::move(cp), c.denominator());
                    nonzero = true;
                }
                if (nonzero) item.by_power.emplace_back(p, std::move(comp));
            }
        } else {
            item.by_power.emplace_back(0, res.residual);
        }
        out.residuals.push_back(std::move(item));
    }
    out.valid = out.residuals.empty();
    return out;
}

DeformationCurve::DeformationCurve(LieAlgebra base, BilinearForm cocycle)
    : base_(std::move(base)),
      cocycle_(std::move(cocycle)),
      realized_(LieAlgebra(base_.name() + "_t", pencil_table(base_, cocycle_))) {}

DeformationCurve deform(const LieAlgebra& mu, const BilinearForm& phi) {
    auto validity = is_valid_deformation(mu, phi);
    if (!validity.valid) {
        std::ostringstream msg;
        msg << "deform: the form is not a valid linear deformation; failing triples:";
        for (const auto& r : validity.residuals) {
            msg << " (" << (r.i + 1) << "," << (r.j + 1) << "," << (r.k + 1) << ") at t-powers";
            for (const auto& [p, v] : r.by_power) msg << " " << p;
            msg << ";";
        }
        throw InvalidInputError(msg.str());
    }
    return DeformationCurve(mu, phi);
}

LieAlgebra specialize(const DeformationCurve& curve, const Rational& t0) {
    BracketTable t = curve.realized().table().substituted_t(t0);
    return LieAlgebra(curve.base().name() + "_at_" + to_string(t0), std::move(t));
}

Codim1Split codim1_split(const LieAlgebra& mu, const LinearMap& D) {
    if (D.rows() != mu.dim() || D.cols() != mu.dim())
        throw DimensionError("codim1_split: derivation size mismatch");
    if (D.is_zero()) throw InvalidInputError("codim1_split: the derivation is trivial");
    if (!is_nilpotent(mu)) throw InvalidInputError("codim1_split: the algebra is not nilpotent");
    {
        auto rep = is_derivation(mu, D);
        if (!rep.ok) throw InvalidInputError("codim1_split: the operator is not a derivation");
    }
    if (!is_semisimple(D))
        throw InvalidInputError("codim1_split: the derivation is not semisimple");

    const Subspace derived = derived_subalgebra(mu);

    // Eigenvalues of D, nonzero first in increasing order, zero last; the
    // greedy completion of [n,n] by eigenvectors then starts with vectors D
    // acts on nontrivially.
    auto pairs = rational_eigenvalues(D);
    std::sort(pairs.begin(), pairs.end(), [](const Eigenpair& a, const Eigenpair& b) {
        const bool za = a.value == 0, zb = b.value == 0;
        if (za != zb) return zb;
        return a.value < b.value;
    });

    struct Picked {
        Vector v;
        Rational eigenvalue;
    };
    std::vector<Picked> complement;
    Subspace grown = derived;
    for (const auto& ep : pairs)
        for (const auto& v : ep.eigenvectors) {
            if (grown.contains(v)) continue;
            std::vector<Vector> gens = grown.basis();
            gens.push_back(v);
            grown = Subspace::span(mu.dim(), mu.symbols(), gens);
            complement.push_back({v, ep.value});
        }
    if (grown.dim() != mu.dim())
        throw InvalidInputError("codim1_split: eigenvectors do not complete the derived ideal");
    if (complement.empty() || complement.front().eigenvalue == 0)
        throw InvalidInputError(
            "codim1_split: no eigenvector with nonzero eigenvalue outside the derived ideal");

    Vector X = complement.front().v;
    std::vector<Vector> h_gens = derived.basis();
    for (std::size_t i = 1; i < complement.size(); ++i) h_gens.push_back(complement[i].v);
    Subspace h = Subspace::span(mu.dim(), mu.symbols(), h_gens);

    // Restriction of D to h in h's echelon basis.
    LinearMap D_h(h.dim(), h.dim(), mu.symbols());
    for (std::size_t b = 0; b < h.dim(); ++b) {
        Vector img = D.apply(h.basis()[b]);
        auto coords = h.coordinates(img);
        if (!coords)
            throw InvalidInputError("codim1_split: derivation does not preserve the ideal");
        for (std::size_t a = 0; a < h.dim(); ++a) D_h.set(a, b, (*coords)[a]);
    }

    // Normalize X at the pivot its residual adds on top of h.
    {
        Vector residual = h.reduce(X);
        for (std::size_t i = 0; i < mu.dim(); ++i) {
            if (!residual[i].is_zero()) {
                X = scale(X, residual[i].inverse());
                break;
            }
        }
    }

    // Postconditions of the construction.
    if (!subspace_is_ideal(mu, h))
        throw InvalidInputError("codim1_split: constructed subspace is not an ideal");
    if (!is_semisimple(D_h))
        throw InvalidInputError("codim1_split: restricted derivation is not semisimple");

    return Codim1Split{std::move(X), std::move(h), std::move(D_h)};
}

}  // namespace liedegen
