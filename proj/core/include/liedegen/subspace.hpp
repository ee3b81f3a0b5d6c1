#pragma once

#include <optional>
#include <vector>

#include "liedegen/linear_map.hpp"

namespace liedegen {

/// Subspace of a coordinate space, stored as a reduced-row-echelon basis
/// with the deterministic pivot rule of the elimination kernel. The echelon
/// form is canonical, so equality of subspaces is structural equality.
class Subspace {
public:
    static Subspace span(std::size_t ambient, SymbolsPtr syms,
                         const std::vector<Vector>& generators);
    static Subspace zero(std::size_t ambient, SymbolsPtr syms);
    static Subspace full(std::size_t ambient, SymbolsPtr syms);
    /// Span of the standard basis vectors with the given 0-based indices.
    static Subspace coordinate(std::size_t ambient, SymbolsPtr syms,
                               const std::vector<std::size_t>& indices);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const SymbolsPtr& symbols() const { return syms_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    /// Residual of v after reduction by the echelon basis; zero iff member.
    Vector reduce(const Vector& v) const;

    /// Coordinates of v in the echelon basis, nullopt when v is outside.
    std::optional<Vector> coordinates(const Vector& v) const;

    friend Subspace sum(const Subspace& a, const Subspace& b);

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Subspace(std::size_t ambient, SymbolsPtr syms) : ambient_(ambient), syms_(std::move(syms)) {}

    std::size_t ambient_;
    SymbolsPtr syms_;
    std::vector<Vector> basis_;          // echelon rows, pivot entries 1
    std::vector<std::size_t> pivots_;    // pivot column per basis row
};

}  // namespace liedegen
