#pragma once

#include <optional>

#include "liedegen/deformation.hpp"

namespace liedegen {

/// One-parameter change-of-basis family g_t, invertible for generic t.
class WitnessFamily {
public:
    explicit WitnessFamily(LinearMap g);

    const LinearMap& matrix() const { return g_; }
    std::size_t dim() const { return g_.rows(); }

    bool operator==(const WitnessFamily& o) const { return g_ == o.g_; }

private:
    LinearMap g_;
};

struct WitnessResidual {
    std::size_t i, j;  // basis pair, 0-based
    Vector residual;   // mu1(g e_i, g e_j) - g(mu_t(e_i, e_j))
};

/// Symbolic check of mu1(g x, g y) = g(mu_t(x, y)) on all basis pairs; an
/// empty list certifies g_t^-1 . mu1 = mu_t identically in t and the
/// declared parameters.
std::vector<WitnessResidual> verify_witness(const LieAlgebra& mu1, const DeformationCurve& curve,
                                            const WitnessFamily& g);

/// diag(t^(N*w_1), ..., t^(N*w_n)) with N the lcm of the weight
/// denominators; integral weights give the plain diag(t^(w_i)). Validity is
/// not guaranteed here; compose with verify_witness.
WitnessFamily witness_from_weights(const DeformationCurve& curve,
                                   const std::vector<Rational>& weights);

/// Solves for a derivation of the whole algebra restricting to D on the
/// codimension-1 ideal h, with value on X unconstrained. Prefers the
/// eigenvector form D~(X) = l0*X and otherwise any solution whose X
/// component is nonzero; the result is scaled so that component equals 1.
/// Returns nullopt when every extension kills the X component.
std::optional<LinearMap> extend_derivation(const LieAlgebra& mu, const Subspace& h,
                                           const LinearMap& D, const Vector& X);

/// Entrywise t -> 0 limit of a structure-constant table with entries in
/// Q(t, params). Throws PoleError on a negative valuation and
/// InvalidInputError when the limit violates Jacobi.
LieAlgebra limit_at_zero(const LieAlgebra& curve_table);

struct CertificateCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Full record of one degeneration certification run. VALID means every
/// check passed: ideal, derivation, cocycle, witness identity, limit, and
/// the solvable-not-nilpotent evidence.
struct DegenerationCertificate {
    explicit DegenerationCertificate(LieAlgebra base_algebra) : base(std::move(base_algebra)) {}

    LieAlgebra base;
    std::optional<DeformationCurve> curve;
    std::optional<LieAlgebra> mu1;
    std::optional<WitnessFamily> witness;
    bool witness_supplied = false;

    /// Extension solver outcome, reported independently of the verdict.
    bool extension_exists = false;
    std::optional<LinearMap> extended_derivation;
    /// Weight-built family, auxiliary when an explicit witness was given.
    std::optional<WitnessFamily> auxiliary_witness;

    std::vector<CertificateCheck> checks;
    bool valid = false;

    const CertificateCheck* check(const std::string& name) const;
};

/// Runs the end-to-end certification: ideal and derivation checks, cocycle
/// construction and validity, mu1 = specialization at t = 1, witness
/// verification (the supplied g, or one constructed from a derivation
/// extension), the t -> 0 limit of g^-1 . mu1 against the base, and the
/// solvable-not-nilpotent comparison. Failures never throw; they become
/// failing checks.
DegenerationCertificate certify_degeneration(const LieAlgebra& mu, const Vector& X,
                                             const Subspace& h, const LinearMap& D,
                                             const std::optional<WitnessFamily>& g = std::nullopt);

}  // namespace liedegen
