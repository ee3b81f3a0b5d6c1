#include "liedegen/subspace.hpp"

#include <sstream>

#include "liedegen/error.hpp"

namespace liedegen {

Subspace Subspace::span(std::size_t ambient, SymbolsPtr syms,
                        const std::vector<Vector>& generators) {
    for (const auto& g : generators)
        if (g.size() != ambient) throw DimensionError("generator has wrong length");
    Subspace s(ambient, syms);
    if (generators.empty()) return s;

    // Reduce the generator rows to RREF via the kernel engine's conventions:
    // gauss on the row matrix, dropping zero rows.
    std::vector<Vector> work = generators;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ambient && row < work.size(); ++col) {
        std::size_t r = row;
        while (r < work.size() && work[r][col].is_zero()) ++r;
        if (r == work.size()) continue;
        std::swap(work[row], work[r]);
        const Scalar inv = work[row][col].inverse();
        work[row] = scale(work[row], inv);
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i == row || work[i][col].is_zero()) continue;
            work[i] = sub(work[i], scale(work[row], work[i][col]));
        }
        pivots.push_back(col);
        ++row;
    }
    work.resize(row);
    s.basis_ = std::move(work);
    s.pivots_ = std::move(pivots);
    return s;
}

Subspace Subspace::zero(std::size_t ambient, SymbolsPtr syms) {
    return Subspace(ambient, std::move(syms));
}

Subspace Subspace::full(std::size_t ambient, SymbolsPtr syms) {
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < ambient; ++i) gens.push_back(unit_vector(ambient, i, syms));
    return span(ambient, std::move(syms), gens);
}

Subspace Subspace::coordinate(std::size_t ambient, SymbolsPtr syms,
                              const std::vector<std::size_t>& indices) {
    std::vector<Vector> gens;
    for (auto i : indices) {
        if (i >= ambient) throw DimensionError("coordinate index out of range");
        gens.push_back(unit_vector(ambient, i, syms));
    }
    return span(ambient, std::move(syms), gens);
}

Vector Subspace::reduce(const Vector& v) const {
    if (v.size() != ambient_) throw DimensionError("vector has wrong length");
    Vector r = v;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const Scalar c = r[pivots_[k]];
        if (!c.is_zero()) r = sub(r, scale(basis_[k], c));
    }
    return r;
}

bool Subspace::contains(const Vector& v) const { return is_zero_vector(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    for (const auto& b : other.basis_)
        if (!contains(b)) return false;
    return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
    if (v.size() != ambient_) throw DimensionError("vector has wrong length");
    Vector r = v;
    Vector coords = zero_vector(basis_.size(), syms_);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const Scalar c = r[pivots_[k]];
        if (!c.is_zero()) {
            coords[k] = c;
            r = sub(r, scale(basis_[k], c));
        }
    }
    if (!is_zero_vector(r)) return std::nullopt;
    return coords;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw DimensionError("subspace ambient mismatch");
    std::vector<Vector> gens = a.basis_;
    gens.insert(gens.end(), b.basis_.begin(), b.basis_.end());
    return Subspace::span(a.ambient_, a.syms_, gens);
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && pivots_ == o.pivots_ && basis_ == o.basis_;
}

std::string Subspace::to_string() const {
    std::ostringstream out;
    out << "span{";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (i) out << ", ";
        out << vector_to_string(basis_[i]);
    }
    out << "}";
    return out.str();
}

}  // namespace liedegen
