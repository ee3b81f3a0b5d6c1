#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liedegen/degeneration.hpp"

namespace liedegen {

/// One bundled degeneration datum: a target algebra (possibly pending
/// external structure constants), a codimension-1 coordinate ideal, a
/// semisimple derivation of it, and the change-of-basis family g_t.
struct Fixture {
    std::string name;
    std::size_t dim;
    std::vector<std::string> parameters;

    /// Absent while requires_external is true.
    std::optional<LieAlgebra> algebra;

    /// 1-based standard-basis indices spanning the ideal, ascending; the
    /// derivation below acts in this basis order.
    std::vector<std::size_t> ideal_indices;
    LinearMap ideal_derivation;
    WitnessFamily witness;

    std::string provenance;
    bool requires_external = false;

    Subspace ideal_subspace() const;
    /// The complement basis vector: first standard index outside the ideal.
    Vector complement_vector() const;
};

/// All bundled fixtures: the six-dimensional algebra 12346E and the
/// seven-dimensional family g7_0.4(lam) complete, plus the seven rows
/// g7_0.1 ... g7_0.8 whose structure constants ship separately.
std::vector<Fixture> bundled_fixtures();

/// Looks a bundled fixture up by name.
std::optional<Fixture> find_fixture(const std::string& name);

/// Completes a fixture with externally supplied structure constants.
/// Throws DimensionError on a size mismatch, InvalidInputError when the
/// names disagree or the fixture is already complete (unless `replace`).
Fixture attach_constants(const Fixture& fixture, const LieAlgebra& mu, bool replace = false);

/// Runs the full degeneration certificate of a complete fixture.
DegenerationCertificate certify_fixture(const Fixture& fixture);

/// Standard test families.
LieAlgebra abelian(std::size_t n);
/// Heisenberg algebra of dimension 2k+1: mu(e_{2i-1}, e_{2i}) = e_{2k+1}.
LieAlgebra heisenberg(std::size_t k);
/// Filiform algebra L_n: mu(e_1, e_i) = e_{i+1} for 2 <= i < n.
LieAlgebra filiform(std::size_t n);

/// Builders shared with the file loaders: 1-based bracket descriptions.
struct BracketSpec {
    std::size_t left;
    std::size_t right;
    std::vector<std::pair<std::size_t, std::string>> rhs;  // (k, coefficient expression)
};

LieAlgebra make_algebra(const std::string& name, std::size_t dim,
                        const std::vector<std::string>& parameters,
                        const std::vector<BracketSpec>& brackets);

LinearMap make_matrix(const SymbolsPtr& syms,
                      const std::vector<std::vector<std::string>>& rows);

}  // namespace liedegen
