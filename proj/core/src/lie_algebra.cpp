#include "liedegen/lie_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "liedegen/error.hpp"
#include "liedegen/parallel.hpp"

namespace liedegen {

void BracketTable::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
    if (i >= dim_ || j >= dim_ || k >= dim_) throw DimensionError("bracket index out of range");
    if (i == j) throw InvalidInputError("bracket (e_i, e_i) must vanish by antisymmetry");
    const bool flip = i > j;
    if (flip) std::swap(i, j);
    auto key = std::make_pair(i, j);
    auto& comp = entries_[key];
    if (c.is_zero()) {
        comp.erase(k);
    } else {
        comp.insert_or_assign(k, flip ? -c : c);
    }
    if (comp.empty()) entries_.erase(key);
}

void BracketTable::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
    if (c.is_zero()) return;
    const bool flip = i > j;
    std::size_t a = i, b = j;
    if (flip) std::swap(a, b);
    Scalar cur = Scalar::zero(syms_);
    auto it = entries_.find({a, b});
    if (it != entries_.end()) {
        auto kt = it->second.find(k);
        if (kt != it->second.end()) cur = kt->second;
    }
    set(a, b, k, cur + (flip ? -c : c));
}

Vector BracketTable::on_basis(std::size_t i, std::size_t j) const {
    Vector v = zero_vector(dim_, syms_);
    if (i == j) return v;
    const bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = entries_.find({i, j});
    if (it == entries_.end()) return v;
    for (const auto& [k, c] : it->second) v[k] = flip ? -c : c;
    return v;
}

Vector BracketTable::apply(const Vector& x, const Vector& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw DimensionError("bracket argument has wrong length");
    Vector v = zero_vector(dim_, syms_);
    for (const auto& [pair, comp] : entries_) {
        const auto [i, j] = pair;
        // Antisymmetric expansion: coefficient x_i y_j - x_j y_i.
        const Scalar w = x[i] * y[j] - x[j] * y[i];
        if (w.is_zero()) continue;
        for (const auto& [k, c] : comp) v[k] = v[k] + c * w;
    }
    return v;
}

bool BracketTable::operator==(const BracketTable& o) const {
    return dim_ == o.dim_ && entries_ == o.entries_;
}

BracketTable BracketTable::operator+(const BracketTable& o) const {
    if (dim_ != o.dim_) throw DimensionError("bracket table dimension mismatch");
    BracketTable r = *this;
    for (const auto& [pair, comp] : o.entries_)
        for (const auto& [k, c] : comp) r.add(pair.first, pair.second, k, c);
    return r;
}

BracketTable BracketTable::scaled(const Scalar& c) const {
    BracketTable r(dim_, syms_);
    if (c.is_zero()) return r;
    for (const auto& [pair, comp] : entries_)
        for (const auto& [k, cc] : comp) r.set(pair.first, pair.second, k, cc * c);
    return r;
}

BracketTable BracketTable::substituted_t(const Rational& value) const {
    BracketTable r(dim_, syms_);
    const Scalar v = Scalar::from_rational(syms_, value);
    for (const auto& [pair, comp] : entries_)
        for (const auto& [k, c] : comp)
            r.set(pair.first, pair.second, k, c.substitute(Symbols::kDeformationVar, v));
    return r;
}

BracketTable BracketTable::limit_t_to_zero() const {
    BracketTable r(dim_, syms_);
    for (const auto& [pair, comp] : entries_)
        for (const auto& [k, c] : comp) {
            auto val = c.valuation_at_t0();
            if (val && *val < 0)
                throw PoleError("pole at t=0 in entry mu(e" + std::to_string(pair.first + 1) +
                                    ", e" + std::to_string(pair.second + 1) + ") -> e" +
                                    std::to_string(k + 1) + " = " + c.to_string() +
                                    " (valuation " + std::to_string(*val) + ")",
                                c.denominator().to_string());
            r.set(pair.first, pair.second, k, c.value_at_t0());
        }
    return r;
}

BracketTable BracketTable::lifted(const SymbolsPtr& target) const {
    BracketTable r(dim_, target);
    for (const auto& [pair, comp] : entries_)
        for (const auto& [k, c] : comp) r.set(pair.first, pair.second, k, c.lifted(target));
    return r;
}

std::string BracketTable::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [pair, comp] : entries_) {
        Vector v = on_basis(pair.first, pair.second);
        if (!first) out << ", ";
        first = false;
        out << "[e" << (pair.first + 1) << ",e" << (pair.second + 1) << "] = "
            << vector_to_string(v);
    }
    if (first) out << "(abelian)";
    return out.str();
}

std::vector<JacobiResidual> jacobi_residuals(const LieAlgebra& mu) {
    const std::size_t n = mu.dim();
    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) triples.push_back({i, j, k});

    const auto& table = mu.table();
    auto residual_of = [&](const std::array<std::size_t, 3>& t) {
        const auto [i, j, k] = t;
        const Vector ei = unit_vector(n, i, mu.symbols());
        const Vector ej = unit_vector(n, j, mu.symbols());
        const Vector ek = unit_vector(n, k, mu.symbols());
        Vector r = table.apply(table.on_basis(i, j), ek);
        r = add(r, table.apply(table.on_basis(j, k), ei));
        r = add(r, table.apply(table.on_basis(k, i), ej));
        return r;
    };

    std::vector<Vector> results = parallel_map<Vector>(triples.size(), [&](std::size_t idx) {
        return residual_of(triples[idx]);
    });

    std::vector<JacobiResidual> out;
    for (std::size_t idx = 0; idx < triples.size(); ++idx)
        if (!is_zero_vector(results[idx]))
            out.push_back({triples[idx][0], triples[idx][1], triples[idx][2],
                           std::move(results[idx])});
    return out;
}

LieAlgebra gl_action(const LinearMap& g, const LieAlgebra& mu) {
    if (g.rows() != g.cols() || g.rows() != mu.dim())
        throw DimensionError("gl_action: operator size mismatch");
    const LinearMap ginv = inverse(g);  // throws SingularMatrixError
    BracketTable out(mu.dim(), mu.symbols());
    for (std::size_t i = 0; i < mu.dim(); ++i)
        for (std::size_t j = i + 1; j < mu.dim(); ++j) {
            Vector w = g.apply(mu.bracket(ginv.column(i), ginv.column(j)));
            for (std::size_t k = 0; k < mu.dim(); ++k)
                if (!w[k].is_zero()) out.set(i, j, k, w[k]);
        }
    return LieAlgebra(mu.name(), std::move(out));
}

bool subspace_is_ideal(const LieAlgebra& mu, const Subspace& h) {
    for (std::size_t i = 0; i < mu.dim(); ++i) {
        const Vector ei = unit_vector(mu.dim(), i, mu.symbols());
        for (const auto& b : h.basis())
            if (!h.contains(mu.bracket(ei, b))) return false;
    }
    return true;
}

DerivationReport is_derivation(const LieAlgebra& mu, const LinearMap& d) {
    if (d.rows() != mu.dim() || d.cols() != mu.dim())
        throw DimensionError("is_derivation: operator size mismatch");
    DerivationReport report;
    for (std::size_t i = 0; i < mu.dim(); ++i)
        for (std::size_t j = i + 1; j < mu.dim(); ++j) {
            const Vector ei = unit_vector(mu.dim(), i, mu.symbols());
            const Vector ej = unit_vector(mu.dim(), j, mu.symbols());
            Vector lhs = d.apply(mu.table().on_basis(i, j));
            Vector rhs = add(mu.bracket(d.column(i), ej), mu.bracket(ei, d.column(j)));
            Vector res = sub(lhs, rhs);
            if (!is_zero_vector(res)) report.residuals.push_back({i, j, std::move(res)});
        }
    report.ok = report.residuals.empty();
    return report;
}

std::vector<LinearMap> derivation_space(const LieAlgebra& mu) {
    const std::size_t n = mu.dim();
    // Unknown matrix M, column-major unknown index u = col*n + row.
    // Leibniz on (e_i, e_j), component k:
    //   sum_l c_{ij}^l M[k][l] - sum_l (M[l][i] c_{lj}^k + M[l][j] c_{il}^k) = 0.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    LinearMap system(pairs.size() * n, n * n, mu.symbols());
    auto unknown = [n](std::size_t row, std::size_t col) { return col * n + row; };
    std::size_t eq = 0;
    for (const auto& [i, j] : pairs) {
        const Vector cij = mu.table().on_basis(i, j);
        for (std::size_t k = 0; k < n; ++k) {
            // D(mu(e_i,e_j))_k = sum_l c_{ij}^l M[k][l]
            for (std::size_t l = 0; l < n; ++l)
                if (!cij[l].is_zero())
                    system.set(eq + k, unknown(k, l),
                               system.at(eq + k, unknown(k, l)) + cij[l]);
        }
        for (std::size_t l = 0; l < n; ++l) {
            // -mu(M e_i, e_j)_k has coefficient -c_{lj}^k on M[l][i]
            const Vector clj = mu.table().on_basis(l, j);
            for (std::size_t k = 0; k < n; ++k)
                if (!clj[k].is_zero())
                    system.set(eq + k, unknown(l, i),
                               system.at(eq + k, unknown(l, i)) - clj[k]);
            // -mu(e_i, M e_j)_k has coefficient -c_{il}^k on M[l][j]
            const Vector cil = mu.table().on_basis(i, l);
            for (std::size_t k = 0; k < n; ++k)
                if (!cil[k].is_zero())
                    system.set(eq + k, unknown(l, j),
                               system.at(eq + k, unknown(l, j)) - cil[k]);
        }
        eq += n;
    }

    std::vector<LinearMap> basis;
    for (const auto& v : kernel(system)) {
        LinearMap m(n, n, mu.symbols());
        for (std::size_t col = 0; col < n; ++col)
            for (std::size_t row = 0; row < n; ++row) m.set(row, col, v[unknown(row, col)]);
        basis.push_back(std::move(m));
    }
    return basis;
}

std::vector<Vector> diagonal_derivations(const LieAlgebra& mu) {
    const std::size_t n = mu.dim();
    std::vector<Vector> rows;
    for (const auto& [pair, comp] : mu.table().entries()) {
        for (const auto& [k, c] : comp) {
            // w_i + w_j - w_k = 0
            Vector row = zero_vector(n, mu.symbols());
            row[pair.first] = row[pair.first] + Scalar::one(mu.symbols());
            row[pair.second] = row[pair.second] + Scalar::one(mu.symbols());
            row[k] = row[k] - Scalar::one(mu.symbols());
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) {
        // Abelian: every weight vector works.
        std::vector<Vector> all;
        for (std::size_t i = 0; i < n; ++i) all.push_back(unit_vector(n, i, mu.symbols()));
        return all;
    }
    return kernel(LinearMap::from_rows(rows, mu.symbols()));
}

namespace {

Subspace bracket_span(const LieAlgebra& mu, const Subspace& a, const Subspace& b) {
    std::vector<Vector> gens;
    for (const auto& x : a.basis())
        for (const auto& y : b.basis()) gens.push_back(mu.bracket(x, y));
    return Subspace::span(mu.dim(), mu.symbols(), gens);
}

}  // namespace

std::vector<Subspace> series(const LieAlgebra& mu, SeriesKind kind) {
    std::vector<Subspace> chain;
    Subspace current = Subspace::full(mu.dim(), mu.symbols());
    chain.push_back(current);
    const Subspace whole = current;
    for (;;) {
        Subspace next = kind == SeriesKind::LowerCentral ? bracket_span(mu, whole, current)
                                                         : bracket_span(mu, current, current);
        if (next == current) break;
        chain.push_back(next);
        current = next;
        if (current.dim() == 0) break;
    }
    return chain;
}

bool is_nilpotent(const LieAlgebra& mu) {
    return series(mu, SeriesKind::LowerCentral).back().dim() == 0;
}

bool is_solvable(const LieAlgebra& mu) {
    return series(mu, SeriesKind::Derived).back().dim() == 0;
}

Subspace derived_subalgebra(const LieAlgebra& mu) {
    const Subspace whole = Subspace::full(mu.dim(), mu.symbols());
    return bracket_span(mu, whole, whole);
}

Grading eigen_grading(const LieAlgebra& mu, const LinearMap& d) {
    auto rep = is_derivation(mu, d);
    if (!rep.ok) throw InvalidInputError("eigen_grading: the operator is not a derivation");
    auto pairs = rational_eigenvalues(d);  // checks semisimplicity, throws Unsupported

    Grading g;
    for (auto& ep : pairs)
        g.pieces.emplace_back(ep.value, Subspace::span(mu.dim(), mu.symbols(), ep.eigenvectors));
    std::sort(g.pieces.begin(), g.pieces.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    // Compatibility: mu(piece_a, piece_b) lands in the piece of weight a+b,
    // or is zero when that weight does not occur.
    for (const auto& [wa, sa] : g.pieces)
        for (const auto& [wb, sb] : g.pieces) {
            const Rational target = wa + wb;
            const Subspace* target_piece = nullptr;
            for (const auto& [w, s] : g.pieces)
                if (w == target) target_piece = &s;
            for (const auto& x : sa.basis())
                for (const auto& y : sb.basis()) {
                    Vector v = mu.bracket(x, y);
                    if (is_zero_vector(v)) continue;
                    if (!target_piece || !target_piece->contains(v))
                        throw InvalidInputError(
                            "eigen_grading: bracket of weights " + to_string(wa) + " and " +
                            to_string(wb) + " leaves the graded piece (value " +
                            vector_to_string(v) + ")");
                }
        }
    return g;
}

LieAlgebra restrict_to(const LieAlgebra& mu, const Subspace& h) {
    const std::size_t m = h.dim();
    BracketTable table(m, mu.symbols());
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            Vector w = mu.bracket(h.basis()[a], h.basis()[b]);
            auto coords = h.coordinates(w);
            if (!coords)
                throw InvalidInputError("restrict: subspace is not closed under the bracket (["
                                        "basis " + std::to_string(a + 1) + ", basis " +
                                        std::to_string(b + 1) + "] escapes)");
            for (std::size_t k = 0; k < m; ++k)
                if (!(*coords)[k].is_zero()) table.set(a, b, k, (*coords)[k]);
        }
    return LieAlgebra(mu.name() + "|h", std::move(table));
}

LinearMap ad(const LieAlgebra& mu, const Vector& x) {
    LinearMap m(mu.dim(), mu.dim(), mu.symbols());
    for (std::size_t j = 0; j < mu.dim(); ++j) {
        Vector col = mu.bracket(x, unit_vector(mu.dim(), j, mu.symbols()));
        for (std::size_t i = 0; i < mu.dim(); ++i) m.set(i, j, col[i]);
    }
    return m;
}

}  // namespace liedegen
