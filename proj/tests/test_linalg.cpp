#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <liedegen/catalog.hpp>
#include <liedegen/error.hpp>
#include <liedegen/linear_map.hpp>

#include "test_support.hpp"

using namespace liedegen;

namespace {

LinearMap M(const SymbolsPtr& syms, const std::vector<std::vector<std::string>>& rows) {
    return make_matrix(syms, rows);
}

LinearMap rational_diag(const SymbolsPtr& syms, const std::vector<int>& d) {
    LinearMap m(d.size(), d.size(), syms);
    for (std::size_t i = 0; i < d.size(); ++i)
        m.set(i, i, Scalar::from_rational(syms, Rational(d[i])));
    return m;
}

// Independent inversion oracle for lower-triangular families: forward
// substitution column by column, no Gaussian elimination involved.
LinearMap lower_triangular_inverse(const LinearMap& a) {
    const std::size_t n = a.rows();
    LinearMap inv(n, n, a.symbols());
    for (std::size_t col = 0; col < n; ++col) {
        Vector x = zero_vector(n, a.symbols());
        for (std::size_t i = 0; i < n; ++i) {
            Scalar rhs = i == col ? Scalar::one(a.symbols()) : Scalar::zero(a.symbols());
            for (std::size_t j = 0; j < i; ++j) rhs = rhs - a.at(i, j) * x[j];
            x[i] = rhs / a.at(i, i);
        }
        for (std::size_t i = 0; i < n; ++i) inv.set(i, col, x[i]);
    }
    return inv;
}

}  // namespace

TEST_CASE("matmul basics") {
    auto syms = Symbols::make();
    LinearMap a = M(syms, {{"1", "2"}, {"3", "t"}});
    CHECK(LinearMap::identity(2, syms) * a == a);
    LinearMap d1 = M(syms, {{"t", "0"}, {"0", "t^2"}});
    LinearMap d2 = M(syms, {{"1/t", "0"}, {"0", "1"}});
    CHECK(d1 * d2 == M(syms, {{"1", "0"}, {"0", "t^2"}}));
    CHECK_THROWS_AS(a * M(syms, {{"1", "1"}}), DimensionError);
}

TEST_CASE("inverse of the dimension-6 witness diagonal") {
    auto syms = Symbols::make();
    LinearMap g = LinearMap::diagonal({Scalar::parse("t", syms), Scalar::parse("t^2", syms),
                                       Scalar::parse("t^3", syms), Scalar::parse("t^4", syms),
                                       Scalar::parse("t^5", syms), Scalar::parse("t^7", syms)});
    LinearMap ginv = inverse(g);
    CHECK(ginv.at(0, 0) == Scalar::parse("1/t", syms));
    CHECK(ginv.at(5, 5) == Scalar::parse("1/t^7", syms));
    CHECK(g * ginv == LinearMap::identity(6, syms));
}

TEST_CASE("witness family of the lambda fixture inverts exactly") {
    auto fx = find_fixture("g7_0.4");
    REQUIRE(fx.has_value());
    const LinearMap& g = fx->witness.matrix();
    auto syms = g.symbols();

    // Determinant: lower-triangular, so the product of the diagonal.
    CHECK(determinant(g) == Scalar::parse("t^8", syms));

    // Two independent inversion routes agree and both give two-sided
    // inverses.
    LinearMap by_elimination = inverse(g);
    LinearMap by_substitution = lower_triangular_inverse(g);
    CHECK(by_elimination == by_substitution);
    CHECK(g * by_elimination == LinearMap::identity(7, syms));
    CHECK(by_elimination * g == LinearMap::identity(7, syms));
}

TEST_CASE("singular matrices are rejected") {
    auto syms = Symbols::make();
    LinearMap a = M(syms, {{"1", "1"}, {"1", "1"}});
    CHECK(determinant(a).is_zero());
    CHECK_THROWS_AS(inverse(a), SingularMatrixError);
}

TEST_CASE("kernel") {
    auto syms = Symbols::make();

    SUBCASE("rank-1 square") {
        auto basis = kernel(M(syms, {{"1", "1"}, {"1", "1"}}));
        REQUIRE(basis.size() == 1);
        CHECK(basis[0][0] == Scalar::parse("-1", syms));
        CHECK(basis[0][1] == Scalar::one(syms));
    }

    SUBCASE("injective") { CHECK(kernel(LinearMap::identity(3, syms)).empty()); }

    SUBCASE("the ideal derivation of the dimension-6 fixture") {
        // Eigenspace of 1 for D = diag(1,0,2,1,2) on (e2,...,e6): kernel of
        // D - I is spanned by the first and fourth basis vectors (e2, e5).
        LinearMap d = rational_diag(syms, {1, 0, 2, 1, 2});
        LinearMap shifted = d - LinearMap::identity(5, syms);
        auto basis = kernel(shifted);
        REQUIRE(basis.size() == 2);
        CHECK(basis[0] == unit_vector(5, 0, syms));
        CHECK(basis[1] == unit_vector(5, 3, syms));
    }

    SUBCASE("A v = 0 and the rank-nullity count on random matrices") {
        testsupport::Rng rng(4242);
        for (int trial = 0; trial < 40; ++trial) {
            std::uniform_int_distribution<std::size_t> dims(1, 5);
            const std::size_t r = dims(rng), c = dims(rng);
            LinearMap a(r, c, syms);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j)
                    a.set(i, j, Scalar::from_rational(syms, testsupport::random_rational(rng, 4)));
            auto basis = kernel(a);
            CHECK(rank(a) + basis.size() == c);
            for (const auto& v : basis) CHECK(is_zero_vector(a.apply(v)));
        }
    }
}

TEST_CASE("minimal polynomial") {
    auto syms = Symbols::make();

    SUBCASE("diagonal with a repeated eigenvalue") {
        UnivariatePoly m = minimal_polynomial(rational_diag(syms, {1, 1, 2}));
        // (x-1)(x-2) = x^2 - 3x + 2
        REQUIRE(m.degree() == 2);
        CHECK(m.coefficients()[0] == Scalar::parse("2", syms));
        CHECK(m.coefficients()[1] == Scalar::parse("-3", syms));
        CHECK(m.coefficients()[2] == Scalar::one(syms));
    }

    SUBCASE("Jordan block") {
        LinearMap j = M(syms, {{"0", "1"}, {"0", "0"}});
        UnivariatePoly m = minimal_polynomial(j);
        REQUIRE(m.degree() == 2);
        CHECK(m.coefficients()[0].is_zero());
        CHECK(m.coefficients()[1].is_zero());
    }

    SUBCASE("the g7_0.5 table derivation") {
        auto fx = find_fixture("g7_0.5");
        REQUIRE(fx.has_value());
        const LinearMap& d = fx->ideal_derivation;
        UnivariatePoly m = minimal_polynomial(d);

        // Oracle first: x(x-1)(x-2)(x-3) annihilates D and no divisor
        // obtained by dropping a root does.
        auto from_roots = [&](const std::vector<int>& roots) {
            UnivariatePoly p(syms, {Scalar::one(syms)});
            for (int r : roots) {
                UnivariatePoly lin(syms, {Scalar::from_rational(syms, Rational(-r)),
                                          Scalar::one(syms)});
                p = p * lin;
            }
            return p;
        };
        UnivariatePoly expected = from_roots({0, 1, 2, 3});
        CHECK(expected.evaluate_at_matrix(d).is_zero());
        for (int drop = 0; drop <= 3; ++drop) {
            std::vector<int> roots;
            for (int r = 0; r <= 3; ++r)
                if (r != drop) roots.push_back(r);
            CHECK_FALSE(from_roots(roots).evaluate_at_matrix(d).is_zero());
        }
        CHECK(m == expected);

        // Squarefree, hence the off-diagonal -1 entry is harmless.
        CHECK(is_semisimple(d));
    }

    SUBCASE("t-dependent entries are refused") {
        LinearMap a = M(syms, {{"t", "0"}, {"0", "1"}});
        CHECK_THROWS_AS(minimal_polynomial(a), UnsupportedError);
    }

    SUBCASE("m(A) = 0 on random matrices") {
        testsupport::Rng rng(9001);
        for (int trial = 0; trial < 30; ++trial) {
            std::uniform_int_distribution<std::size_t> dims(1, 4);
            const std::size_t n = dims(rng);
            LinearMap a(n, n, syms);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    a.set(i, j, Scalar::from_rational(syms, Rational(testsupport::random_int(rng, 3))));
            UnivariatePoly m = minimal_polynomial(a);
            CHECK(m.evaluate_at_matrix(a).is_zero());
            CHECK(m.coefficients().back().is_one());
        }
    }
}

TEST_CASE("semisimplicity") {
    auto syms = Symbols::make();
    CHECK(is_semisimple(rational_diag(syms, {1, 2, 3})));
    CHECK_FALSE(is_semisimple(M(syms, {{"0", "1"}, {"0", "0"}})));

    SUBCASE("agrees with explicit diagonalizability on conjugated diagonals") {
        testsupport::Rng rng(31415);
        for (int trial = 0; trial < 40; ++trial) {
            std::uniform_int_distribution<std::size_t> dims(2, 5);
            std::uniform_int_distribution<int> eig(-3, 3);
            const std::size_t n = dims(rng);
            LinearMap p = testsupport::random_invertible(rng, n, syms);
            LinearMap d(n, n, syms);
            for (std::size_t i = 0; i < n; ++i)
                d.set(i, i, Scalar::from_rational(syms, Rational(eig(rng))));
            LinearMap a = p * d * inverse(p);
            CHECK(is_semisimple(a));

            // Plant a nilpotent part on a repeated eigenvalue: not
            // semisimple.
            LinearMap jordan = d;
            jordan.set(0, 1, Scalar::one(syms));
            jordan.set(1, 1, jordan.at(0, 0));
            LinearMap b = p * jordan * inverse(p);
            CHECK_FALSE(is_semisimple(b));
        }
    }
}

TEST_CASE("nilpotency of matrices") {
    auto syms = Symbols::make();
    CHECK(is_nilpotent_matrix(M(syms, {{"0", "1"}, {"0", "0"}})));
    CHECK_FALSE(is_nilpotent_matrix(rational_diag(syms, {1, 0})));

    // Inner derivations of a nilpotent algebra are nilpotent operators.
    LieAlgebra mu = *find_fixture("12346E")->algebra;
    for (std::size_t i = 0; i < mu.dim(); ++i)
        CHECK(is_nilpotent_matrix(ad(mu, unit_vector(mu.dim(), i, mu.symbols()))));
}

TEST_CASE("rational eigenvalues") {
    auto syms = Symbols::make();

    SUBCASE("repeated eigenvalue fills the space") {
        auto pairs = rational_eigenvalues(rational_diag(syms, {1, 1}));
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0].value == 1);
        CHECK(pairs[0].eigenvectors.size() == 2);
    }

    SUBCASE("rotation has no rational eigenvalues") {
        LinearMap rot = M(syms, {{"0", "-1"}, {"1", "0"}});
        CHECK_THROWS_AS(rational_eigenvalues(rot), UnsupportedError);
    }

    SUBCASE("fractional eigenvalues are found") {
        auto pairs = rational_eigenvalues(LinearMap::diagonal(
            {Scalar::parse("1/2", syms), Scalar::parse("3", syms)}));
        REQUIRE(pairs.size() == 2);
        CHECK(pairs[0].value == Rational(1, 2));
        CHECK(pairs[1].value == 3);
    }
}

TEST_CASE("affine solve") {
    auto syms = Symbols::make();
    LinearMap a = M(syms, {{"1", "1"}, {"2", "2"}});

    SUBCASE("consistent") {
        Vector b = {Scalar::parse("3", syms), Scalar::parse("6", syms)};
        auto sol = solve(a, b);
        REQUIRE(sol.has_value());
        CHECK(sol->kernel.size() == 1);
        Vector res = sub(a.apply(sol->particular), b);
        CHECK(is_zero_vector(res));
    }

    SUBCASE("inconsistent") {
        Vector b = {Scalar::parse("3", syms), Scalar::parse("5", syms)};
        CHECK_FALSE(solve(a, b).has_value());
    }
}

TEST_CASE("inverse correctness on random invertible matrices") {
    auto syms = Symbols::make();
    testsupport::Rng rng(2718281);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<std::size_t> dims(1, 5);
        const std::size_t n = dims(rng);
        LinearMap a = testsupport::random_invertible(rng, n, syms);
        LinearMap ainv = inverse(a);
        CHECK(a * ainv == LinearMap::identity(n, syms));
        CHECK(ainv * a == LinearMap::identity(n, syms));
    }
}

TEST_CASE("minimal polynomial divisor oracle on conjugated diagonals") {
    // For P diag(roots) P^-1 the minimal polynomial is the product over the
    // distinct roots; dropping any root must stop annihilating.
    auto syms = Symbols::make();
    testsupport::Rng rng(1618);
    std::uniform_int_distribution<std::size_t> dims(2, 4);
    std::uniform_int_distribution<int> eig(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = dims(rng);
        std::vector<int> roots(n);
        for (auto& r : roots) r = eig(rng);
        std::vector<int> distinct = roots;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

        LinearMap p = testsupport::random_invertible(rng, n, syms);
        LinearMap d(n, n, syms);
        for (std::size_t i = 0; i < n; ++i)
            d.set(i, i, Scalar::from_rational(syms, Rational(roots[i])));
        LinearMap a = p * d * inverse(p);

        auto from_roots = [&](const std::vector<int>& rs) {
            UnivariatePoly poly(syms, {Scalar::one(syms)});
            for (int r : rs) {
                UnivariatePoly lin(syms,
                                   {Scalar::from_rational(syms, Rational(-r)), Scalar::one(syms)});
                poly = poly * lin;
            }
            return poly;
        };
        UnivariatePoly expected = from_roots(distinct);
        CHECK(minimal_polynomial(a) == expected);
        for (std::size_t drop = 0; drop < distinct.size(); ++drop) {
            std::vector<int> fewer;
            for (std::size_t i = 0; i < distinct.size(); ++i)
                if (i != drop) fewer.push_back(distinct[i]);
            CHECK_FALSE(from_roots(fewer).evaluate_at_matrix(a).is_zero());
        }
    }
}
