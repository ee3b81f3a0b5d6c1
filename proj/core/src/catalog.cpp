#include "liedegen/catalog.hpp"

#include <algorithm>

#include "liedegen/error.hpp"

namespace liedegen {

Subspace Fixture::ideal_subspace() const {
    auto syms = witness.matrix().symbols();
    std::vector<std::size_t> zero_based;
    for (auto i : ideal_indices) zero_based.push_back(i - 1);
    return Subspace::coordinate(dim, syms, zero_based);
}

Vector Fixture::complement_vector() const {
    auto syms = witness.matrix().symbols();
    for (std::size_t i = 1; i <= dim; ++i)
        if (std::find(ideal_indices.begin(), ideal_indices.end(), i) == ideal_indices.end())
            return unit_vector(dim, i - 1, syms);
    throw InvalidInputError("fixture ideal covers the whole space");
}

LieAlgebra make_algebra(const std::string& name, std::size_t dim,
                        const std::vector<std::string>& parameters,
                        const std::vector<BracketSpec>& brackets) {
    auto syms = Symbols::make(parameters);
    BracketTable table(dim, syms);
    for (const auto& b : brackets) {
        if (b.left < 1 || b.left > dim || b.right < 1 || b.right > dim)
            throw DimensionError("bracket index out of range in " + name);
        if (b.left >= b.right)
            throw InvalidInputError("brackets must be given with left < right in " + name);
        for (const auto& [k, expr] : b.rhs) {
            if (k < 1 || k > dim) throw DimensionError("component index out of range in " + name);
            table.set(b.left - 1, b.right - 1, k - 1, Scalar::parse(expr, syms));
        }
    }
    return LieAlgebra(name, std::move(table));
}

LinearMap make_matrix(const SymbolsPtr& syms,
                      const std::vector<std::vector<std::string>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    LinearMap m(r, c, syms);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionError("ragged matrix literal");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar::parse(rows[i][j], syms));
    }
    return m;
}

namespace {

LinearMap diag_matrix(const SymbolsPtr& syms, const std::vector<std::string>& entries) {
    LinearMap m(entries.size(), entries.size(), syms);
    for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, Scalar::parse(entries[i], syms));
    return m;
}

Fixture fixture_12346E() {
    LieAlgebra mu = make_algebra("12346E", 6, {},
                                 {
                                     {1, 2, {{3, "1"}}},
                                     {1, 3, {{4, "1"}}},
                                     {1, 4, {{5, "1"}}},
                                     {2, 3, {{5, "1"}}},
                                     {2, 5, {{6, "1"}}},
                                     {3, 4, {{6, "-1"}}},
                                 });
    auto syms = mu.symbols();
    return Fixture{
        .name = "12346E",
        .dim = 6,
        .parameters = {},
        .algebra = mu,
        .ideal_indices = {2, 3, 4, 5, 6},
        .ideal_derivation = diag_matrix(syms, {"1", "0", "2", "1", "2"}),
        .witness = WitnessFamily(diag_matrix(syms, {"t", "t^2", "t^3", "t^4", "t^5", "t^7"})),
        .provenance = "six-dimensional nilpotent algebra 12346_E of Seeley's classification",
        .requires_external = false,
    };
}

Fixture fixture_g7_04() {
    LieAlgebra mu = make_algebra("g7_0.4", 7, {"lam"},
                                 {
                                     {1, 2, {{3, "1"}}},
                                     {1, 3, {{4, "1"}}},
                                     {1, 4, {{6, "1"}, {7, "lam"}}},
                                     {1, 5, {{7, "1"}}},
                                     {1, 6, {{7, "1"}}},
                                     {2, 3, {{5, "1"}}},
                                     {2, 4, {{7, "1"}}},
                                     {2, 5, {{6, "1"}}},
                                     {3, 5, {{7, "1"}}},
                                 });
    auto syms = mu.symbols();
    LinearMap g = make_matrix(
        syms,
        {
            {"t", "0", "0", "0", "0", "0", "0"},
            {"0", "1", "0", "0", "0", "0", "0"},
            {"0", "0", "t", "0", "0", "0", "0"},
            {"0", "0", "0", "t^2", "0", "0", "0"},
            {"(1/4)*((t^2-1)/t)", "1-lam+lam/t-1/t^2", "0", "0", "t", "0", "0"},
            {"0", "0", "(1/4)*((1-t^2)/t)", "(1/2)*(1-t^2)", "0", "t", "0"},
            {"0", "0", "t-lam*t+lam-1/t", "(1/2)*t^2-lam*t^2+lam*t-1/2", "lam*t-t-lam+1/t", "0",
             "t^2"},
        });
    return Fixture{
        .name = "g7_0.4",
        .dim = 7,
        .parameters = {"lam"},
        .algebra = mu,
        .ideal_indices = {2, 3, 4, 5, 6, 7},
        .ideal_derivation = diag_matrix(syms, {"1", "0", "0", "1", "2", "1"}),
        .witness = WitnessFamily(std::move(g)),
        .provenance =
            "one-parameter family g7,0.4(lambda) of Magnin's classification of "
            "seven-dimensional nilpotent algebras",
        .requires_external = false,
    };
}

Fixture row_fixture(const std::string& name, std::vector<std::size_t> ideal,
                    LinearMap derivation, LinearMap g) {
    return Fixture{
        .name = name,
        .dim = 7,
        .parameters = {},
        .algebra = std::nullopt,
        .ideal_indices = std::move(ideal),
        .ideal_derivation = std::move(derivation),
        .witness = WitnessFamily(std::move(g)),
        .provenance = "degeneration row for the Magnin algebra " + name +
                      "; structure constants enter via an external file",
        .requires_external = true,
    };
}

std::vector<Fixture> table_rows() {
    auto syms = Symbols::make();
    std::vector<Fixture> rows;

    rows.push_back(row_fixture(
        "g7_0.1", {1, 3, 4, 5, 6, 7}, diag_matrix(syms, {"1", "3", "4", "5", "6", "7"}),
        make_matrix(syms,
                    {
                        {"1", "0", "0", "0", "0", "0", "0"},
                        {"0", "t", "0", "0", "0", "0", "0"},
                        {"(1/2)*((t-1)/t)", "0", "1", "0", "0", "0", "0"},
                        {"0", "0", "0", "1", "0", "0", "0"},
                        {"0", "(1/6)*((3*t^2-5*t+2)/t)", "0", "0", "1", "0", "0"},
                        {"0", "0", "(1/3)*((1-t)/t)", "0", "0", "1", "0"},
                        {"0", "0", "0", "(1/3)*((1-t)/t)", "(1/2)*((1-t)/t)", "0", "1"},
                    })));

    rows.push_back(row_fixture(
        "g7_0.2", {1, 3, 4, 5, 6, 7}, diag_matrix(syms, {"1", "0", "1", "2", "3", "4"}),
        make_matrix(syms,
                    {
                        {"1", "0", "0", "0", "0", "0", "0"},
                        {"0", "t", "0", "0", "0", "0", "0"},
                        {"0", "0", "t", "0", "0", "0", "0"},
                        {"0", "(1/8)*((4*t-3*t^2-1)/t)", "0", "t", "0", "0", "0"},
                        {"(1/8)*((t^2-1)/t^2)", "0", "(1/2)*(1-t)", "0", "t", "0", "0"},
                        {"0", "0", "0", "(1/2)*(1-t)", "0", "t", "0"},
                        {"0", "0", "(1/8)*((1-t^2)/t)", "0", "(1/2)*(1-t)", "0", "t"},
                    })));

    rows.push_back(row_fixture(
        "g7_0.3", {1, 3, 4, 5, 6, 7}, diag_matrix(syms, {"1", "0", "1", "2", "3", "4"}),
        make_matrix(syms,
                    {
                        {"1", "0", "0", "0", "0", "0", "0"},
                        {"0", "t", "0", "0", "0", "0", "0"},
                        {"0", "0", "t", "0", "0", "0", "0"},
                        {"(1/4)*((t-1)/t)", "0", "0", "t", "0", "0", "0"},
                        {"0", "(1/3)*(1-t)", "0", "0", "t", "0", "0"},
                        {"0", "0", "(1/3)*(1-t)", "0", "0", "t", "0"},
                        {"0", "0", "(1/4)*(1-t)", "(1/3)*(1-t)", "0", "0", "t"},
                    })));

    {
        // Derivation with the off-diagonal -1: in the ideal basis
        // (e1, e3, e4, e5, e6, e7), column 5 reads D(e6) = 2 e6 - e7.
        LinearMap d = diag_matrix(syms, {"1", "0", "1", "3", "2", "3"});
        d.set(5, 4, Scalar::parse("-1", syms));
        rows.push_back(row_fixture(
            "g7_0.5", {1, 3, 4, 5, 6, 7}, std::move(d),
            make_matrix(syms,
                        {
                            {"1", "0", "0", "0", "0", "0", "0"},
                            {"0", "t", "0", "0", "0", "0", "0"},
                            {"0", "0", "t", "0", "0", "0", "0"},
                            {"0", "(1/3)*((t^2-1)/t)", "0", "t", "0", "0", "0"},
                            {"(1/6)*((t^2-1)/t^2)", "0", "(1/3)*((1-t^2)/t)", "0", "1", "0", "0"},
                            {"0", "0", "(1/6)*((t^2-1)/t)", "0", "0", "t", "0"},
                            {"0", "0", "(1/3)*((t^2-1)/t)", "0", "(5/6)*(t^2-1)", "0", "t"},
                        })));
    }

    rows.push_back(row_fixture(
        "g7_0.6", {2, 3, 4, 5, 6, 7}, diag_matrix(syms, {"1", "0", "2", "1", "3", "2"}),
        make_matrix(syms,
                    {
                        {"t", "0", "0", "0", "0", "0", "0"},
                        {"0", "1", "0", "0", "0", "0", "0"},
                        {"0", "0", "t", "0", "0", "0", "0"},
                        {"0", "(1/2)*((1-t^2)/t^2)", "(1/2)*((1-t^2)/t)", "1", "0", "0", "0"},
                        {"0", "0", "0", "0", "t", "0", "0"},
                        {"0", "0", "0", "0", "(1/2)*((1-t^2)/t)", "1", "0"},
                        {"0", "0", "(1/2)*((1-t^2)/t)", "(3/2)*(1-t^2)", "(1/2)*((t^2-1)/t)", "0",
                         "t"},
                    })));

    rows.push_back(row_fixture(
        "g7_0.7", {2, 3, 4, 5, 6, 7}, diag_matrix(syms, {"1", "0", "0", "1", "2", "1"}),
        make_matrix(syms,
                    {
                        {"t", "0", "0", "0", "0", "0", "0"},
                        {"0", "1", "0", "0", "0", "0", "0"},
                        {"0", "0", "t", "0", "0", "0", "0"},
                        {"t-1", "0", "0", "t^2", "0", "0", "0"},
                        {"0", "0", "0", "0", "t", "0", "0"},
                        {"0", "0", "0", "0", "0", "t", "0"},
                        {"0", "0", "1-t", "(1-t)*t", "0", "0", "t^2"},
                    })));

    rows.push_back(row_fixture(
        "g7_0.8", {2, 3, 4, 5, 6, 7}, diag_matrix(syms, {"1", "0", "0", "2", "1", "2"}),
        make_matrix(syms,
                    {
                        {"t", "0", "0", "0", "0", "0", "0"},
                        {"0", "1", "0", "0", "0", "0", "0"},
                        {"0", "1-t^2", "t^3", "t*(t^2-1)", "0", "0", "0"},
                        {"0", "0", "0", "t", "0", "0", "0"},
                        {"0", "0", "0", "0", "t^2", "0", "0"},
                        {"0", "0", "0", "0", "0", "t^3", "0"},
                        {"0", "0", "(1/2)*t^2*(1-t)", "t*(1-t^2)", "t^2*(1-t^2)", "0", "t^3"},
                    })));

    return rows;
}

}  // namespace

std::vector<Fixture> bundled_fixtures() {
    std::vector<Fixture> fixtures;
    fixtures.push_back(fixture_12346E());
    fixtures.push_back(fixture_g7_04());
    for (auto& row : table_rows()) fixtures.push_back(std::move(row));
    return fixtures;
}

std::optional<Fixture> find_fixture(const std::string& name) {
    for (auto& f : bundled_fixtures())
        if (f.name == name) return f;
    return std::nullopt;
}

Fixture attach_constants(const Fixture& fixture, const LieAlgebra& mu, bool replace) {
    if (mu.dim() != fixture.dim)
        throw DimensionError("attach_constants: algebra dimension " + std::to_string(mu.dim()) +
                             " does not match fixture dimension " + std::to_string(fixture.dim));
    if (mu.name() != fixture.name)
        throw InvalidInputError("attach_constants: algebra '" + mu.name() +
                                "' does not target fixture '" + fixture.name + "'");
    if (fixture.algebra && !replace)
        throw InvalidInputError("attach_constants: fixture '" + fixture.name +
                                "' is already complete (pass replace to override)");
    Fixture out = fixture;
    // Fixture data lives over {t} + declared parameters; lift the attached
    // constants if they were declared over a smaller set.
    auto target = out.witness.matrix().symbols();
    out.algebra = LieAlgebra(mu.name(), mu.table().lifted(target));
    out.requires_external = false;
    return out;
}

DegenerationCertificate certify_fixture(const Fixture& fixture) {
    if (!fixture.algebra)
        throw InvalidInputError("certify_fixture: fixture '" + fixture.name +
                                "' still needs external structure constants");
    return certify_degeneration(*fixture.algebra, fixture.complement_vector(),
                                fixture.ideal_subspace(), fixture.ideal_derivation,
                                fixture.witness);
}

LieAlgebra abelian(std::size_t n) {
    return LieAlgebra("abelian" + std::to_string(n), n, Symbols::make());
}

LieAlgebra heisenberg(std::size_t k) {
    const std::size_t n = 2 * k + 1;
    LieAlgebra mu("heisenberg" + std::to_string(n), n, Symbols::make());
    for (std::size_t i = 0; i < k; ++i)
        mu.table().set(2 * i, 2 * i + 1, n - 1, Scalar::one(mu.symbols()));
    return mu;
}

LieAlgebra filiform(std::size_t n) {
    if (n < 3) throw DimensionError("filiform algebras need dimension >= 3");
    LieAlgebra mu("filiform" + std::to_string(n), n, Symbols::make());
    for (std::size_t i = 1; i + 1 < n; ++i)
        mu.table().set(0, i, i + 1, Scalar::one(mu.symbols()));
    return mu;
}

}  // namespace liedegen
