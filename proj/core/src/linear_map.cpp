#include "liedegen/linear_map.hpp"

#include <algorithm>
#include <sstream>

#include "liedegen/error.hpp"

namespace liedegen {

Vector zero_vector(std::size_t n, const SymbolsPtr& syms) {
    return Vector(n, Scalar::zero(syms));
}

Vector unit_vector(std::size_t n, std::size_t i, const SymbolsPtr& syms) {
    Vector v = zero_vector(n, syms);
    v.at(i) = Scalar::one(syms);
    return v;
}

bool is_zero_vector(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionError("vector size mismatch");
    Vector r = a;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

Vector sub(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionError("vector size mismatch");
    Vector r = a;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

Vector scale(const Vector& v, const Scalar& c) {
    Vector r = v;
    for (auto& x : r) x = x * c;
    return r;
}

std::string vector_to_string(const Vector& v) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        const std::string coeff = v[i].to_string();
        if (!first) out << " + ";
        first = false;
        if (coeff == "1") {
            out << "e" << (i + 1);
        } else if (coeff.find(' ') == std::string::npos) {
            out << coeff << "*e" << (i + 1);
        } else {
            out << "(" << coeff << ")*e" << (i + 1);
        }
    }
    if (first) return "0";
    return out.str();
}

LinearMap::LinearMap(std::size_t rows, std::size_t cols, SymbolsPtr syms)
    : rows_(rows), cols_(cols), syms_(std::move(syms)),
      entries_(rows * cols, Scalar::zero(syms_)) {}

LinearMap LinearMap::identity(std::size_t n, const SymbolsPtr& syms) {
    LinearMap m(n, n, syms);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(syms));
    return m;
}

LinearMap LinearMap::diagonal(const Vector& entries) {
    if (entries.empty()) throw DimensionError("empty diagonal");
    LinearMap m(entries.size(), entries.size(), entries.front().symbols());
    for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, entries[i]);
    return m;
}

LinearMap LinearMap::from_rows(const std::vector<Vector>& rows, const SymbolsPtr& syms) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    LinearMap m(r, c, syms);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionError("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Vector LinearMap::apply(const Vector& v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector dimension mismatch");
    Vector r = zero_vector(rows_, syms_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] = r[i] + at(i, j) * v[j];
    return r;
}

Vector LinearMap::column(std::size_t j) const {
    Vector v = zero_vector(rows_, syms_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Vector LinearMap::row(std::size_t i) const {
    Vector v = zero_vector(cols_, syms_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix size mismatch");
    LinearMap r = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] + o.entries_[k];
    return r;
}

LinearMap LinearMap::operator-(const LinearMap& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix size mismatch");
    LinearMap r = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] - o.entries_[k];
    return r;
}

LinearMap LinearMap::operator*(const LinearMap& o) const {
    if (cols_ != o.rows_)
        throw DimensionError("matmul dimension mismatch: " + std::to_string(cols_) + " vs " +
                             std::to_string(o.rows_));
    LinearMap r(rows_, o.cols_, syms_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o.at(k, j).is_zero())
                    r.set(i, j, r.at(i, j) + at(i, k) * o.at(k, j));
        }
    return r;
}

LinearMap LinearMap::scaled(const Scalar& c) const {
    LinearMap r = *this;
    for (auto& e : r.entries_) e = e * c;
    return r;
}

bool LinearMap::operator==(const LinearMap& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

bool LinearMap::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Scalar& s) { return s.is_zero(); });
}

bool LinearMap::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

bool LinearMap::is_t_free() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Scalar& s) { return s.is_t_free(); });
}

LinearMap matmul(const LinearMap& a, const LinearMap& b) { return a * b; }

namespace {

// Reduced row echelon form, in place. Deterministic pivoting: columns left
// to right, pivot row = first row (top down) with a nonzero entry. Returns
// pivot (row, col) pairs in order and counts row swaps for the determinant.
struct RrefResult {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t swaps = 0;
    Scalar pivot_product;  // product of pivot values before normalization
};

RrefResult rref_in_place(LinearMap& m) {
    RrefResult res{.pivots = {}, .swaps = 0, .pivot_product = Scalar::one(m.symbols())};
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t r = pivot_row;
        while (r < m.rows() && m.at(r, col).is_zero()) ++r;
        if (r == m.rows()) continue;
        if (r != pivot_row) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                Scalar tmp = m.at(pivot_row, j);
                m.set(pivot_row, j, m.at(r, j));
                m.set(r, j, std::move(tmp));
            }
            ++res.swaps;
        }
        const Scalar pivot = m.at(pivot_row, col);
        res.pivot_product = res.pivot_product * pivot;
        const Scalar inv = pivot.inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m.set(pivot_row, j, m.at(pivot_row, j) * inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row || m.at(i, col).is_zero()) continue;
            const Scalar factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.set(i, j, m.at(i, j) - factor * m.at(pivot_row, j));
        }
        res.pivots.emplace_back(pivot_row, col);
        ++pivot_row;
    }
    return res;
}

}  // namespace

Scalar determinant(const LinearMap& a) {
    if (a.rows() != a.cols()) throw DimensionError("determinant of a non-square matrix");
    LinearMap m = a;
    RrefResult r = rref_in_place(m);
    if (r.pivots.size() < a.rows()) return Scalar::zero(a.symbols());
    Scalar det = r.pivot_product;
    if (r.swaps % 2 == 1) det = -det;
    return det;
}

LinearMap inverse(const LinearMap& a) {
    if (a.rows() != a.cols()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    LinearMap aug(n, 2 * n, a.symbols());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.set(i, j, a.at(i, j));
        aug.set(i, n + i, Scalar::one(a.symbols()));
    }
    RrefResult r = rref_in_place(aug);
    if (r.pivots.size() < n || r.pivots.back().second >= n)
        throw SingularMatrixError("matrix is singular (determinant is the zero scalar)");
    LinearMap inv(n, n, a.symbols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.set(i, j, aug.at(i, n + j));
    return inv;
}

std::size_t rank(const LinearMap& a) {
    LinearMap m = a;
    return rref_in_place(m).pivots.size();
}

std::vector<Vector> kernel(const LinearMap& a) {
    LinearMap m = a;
    RrefResult r = rref_in_place(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (const auto& [pr, pc] : r.pivots) is_pivot[pc] = true;
    std::vector<Vector> basis;
    for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        Vector v = zero_vector(a.cols(), a.symbols());
        v[free_col] = Scalar::one(a.symbols());
        for (const auto& [pr, pc] : r.pivots) v[pc] = -m.at(pr, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<AffineSolution> solve(const LinearMap& a, const Vector& b) {
    if (b.size() != a.rows()) throw DimensionError("solve: rhs size mismatch");
    LinearMap aug(a.rows(), a.cols() + 1, a.symbols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.set(i, j, a.at(i, j));
        aug.set(i, a.cols(), b[i]);
    }
    RrefResult r = rref_in_place(aug);
    for (const auto& [pr, pc] : r.pivots)
        if (pc == a.cols()) return std::nullopt;  // inconsistent system
    AffineSolution sol{zero_vector(a.cols(), a.symbols()), kernel(a)};
    for (const auto& [pr, pc] : r.pivots) sol.particular[pc] = aug.at(pr, a.cols());
    return sol;
}

UnivariatePoly::UnivariatePoly(SymbolsPtr syms, std::vector<Scalar> coeffs)
    : syms_(std::move(syms)), coeffs_(std::move(coeffs)) {
    trim();
}

void UnivariatePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UnivariatePoly UnivariatePoly::derivative() const {
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d.push_back(coeffs_[i] * Scalar::from_rational(syms_, Rational(static_cast<long>(i))));
    return UnivariatePoly(syms_, std::move(d));
}

UnivariatePoly UnivariatePoly::monic() const {
    if (coeffs_.empty()) return *this;
    const Scalar inv = coeffs_.back().inverse();
    std::vector<Scalar> c = coeffs_;
    for (auto& x : c) x = x * inv;
    return UnivariatePoly(syms_, std::move(c));
}

UnivariatePoly UnivariatePoly::operator*(const UnivariatePoly& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return UnivariatePoly(syms_);
    std::vector<Scalar> c(coeffs_.size() + o.coeffs_.size() - 1, Scalar::zero(syms_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
    return UnivariatePoly(syms_, std::move(c));
}

UnivariatePoly UnivariatePoly::operator-(const UnivariatePoly& o) const {
    std::vector<Scalar> c(std::max(coeffs_.size(), o.coeffs_.size()), Scalar::zero(syms_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] = c[i] - o.coeffs_[i];
    return UnivariatePoly(syms_, std::move(c));
}

bool UnivariatePoly::operator==(const UnivariatePoly& o) const { return coeffs_ == o.coeffs_; }

Scalar UnivariatePoly::evaluate(const Scalar& x) const {
    Scalar acc = Scalar::zero(syms_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

LinearMap UnivariatePoly::evaluate_at_matrix(const LinearMap& a) const {
    LinearMap acc(a.rows(), a.cols(), a.symbols());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * a;
        for (std::size_t i = 0; i < a.rows(); ++i) acc.set(i, i, acc.at(i, i) + *it);
    }
    return acc;
}

UnivariatePoly UnivariatePoly::remainder(const UnivariatePoly& o) const {
    if (o.coeffs_.empty()) throw DivisionByZeroError("univariate division by zero");
    UnivariatePoly r = *this;
    const Scalar lead_inv = o.coeffs_.back().inverse();
    while (r.degree() >= o.degree()) {
        const std::size_t shift = static_cast<std::size_t>(r.degree() - o.degree());
        const Scalar factor = r.coeffs_.back() * lead_inv;
        std::vector<Scalar> sub(shift + o.coeffs_.size(), Scalar::zero(syms_));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) sub[shift + i] = o.coeffs_[i] * factor;
        r = r - UnivariatePoly(syms_, std::move(sub));
    }
    return r;
}

UnivariatePoly UnivariatePoly::gcd(const UnivariatePoly& a, const UnivariatePoly& b) {
    UnivariatePoly x = a, y = b;
    while (!y.is_zero()) {
        UnivariatePoly r = x.remainder(y);
        x = y;
        y = r.is_zero() ? r : r.monic();
    }
    return x.is_zero() ? x : x.monic();
}

std::string UnivariatePoly::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        const std::string c = coeffs_[k].to_string();
        if (k == 0) {
            out << c;
        } else {
            if (c != "1") out << "(" << c << ")*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

namespace {

void require_t_free(const LinearMap& a, const char* what) {
    if (!a.is_t_free())
        throw UnsupportedError(std::string(what) +
                               " requires entries free of the deformation variable t");
}

}  // namespace

UnivariatePoly minimal_polynomial(const LinearMap& a) {
    if (a.rows() != a.cols()) throw DimensionError("minimal polynomial of a non-square matrix");
    require_t_free(a, "minimal_polynomial");
    const std::size_t n = a.rows();
    // Stack vec(A^0), vec(A^1), ... as columns and look for the first linear
    // dependence; its coefficients are the minimal polynomial's.
    std::vector<LinearMap> powers;
    powers.push_back(LinearMap::identity(n, a.symbols()));
    for (std::size_t k = 1; k <= n; ++k) {
        powers.push_back(powers.back() * a);
        LinearMap stacked(n * n, k + 1, a.symbols());
        for (std::size_t p = 0; p <= k; ++p)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    stacked.set(i * n + j, p, powers[p].at(i, j));
        auto null = kernel(stacked);
        if (null.empty()) continue;
        // Deterministic kernel: the single basis vector has a 1 at the top
        // power, already monic up to normalization.
        Vector dep = null.front();
        return UnivariatePoly(a.symbols(), std::move(dep)).monic();
    }
    throw Error("internal: no annihilating polynomial up to the dimension");
}

bool is_semisimple(const LinearMap& a) {
    UnivariatePoly m = minimal_polynomial(a);
    UnivariatePoly g = UnivariatePoly::gcd(m, m.derivative());
    return g.degree() <= 0;
}

bool is_nilpotent_matrix(const LinearMap& a) {
    if (a.rows() != a.cols()) throw DimensionError("nilpotency of a non-square matrix");
    LinearMap p = LinearMap::identity(a.rows(), a.symbols());
    for (std::size_t k = 0; k < a.rows(); ++k) p = p * a;
    return p.is_zero();
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> divs;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d * d != n) divs.push_back(n / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

std::vector<Eigenpair> rational_eigenvalues(const LinearMap& a) {
    if (!is_semisimple(a))
        throw UnsupportedError("rational_eigenvalues requires a semisimple operator");
    UnivariatePoly m = minimal_polynomial(a);

    // The minimal polynomial must have rational constants as coefficients.
    std::vector<Rational> coeffs;
    for (const auto& c : m.coefficients()) {
        if (!c.is_rational())
            throw UnsupportedError("parameter-dependent eigenvalues are unsupported");
        coeffs.push_back(c.as_rational());
    }

    std::vector<Rational> roots;
    std::vector<Rational> work(coeffs.begin(), coeffs.end());
    auto eval = [](const std::vector<Rational>& p, const Rational& x) {
        Rational acc = 0;
        for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
        return acc;
    };
    auto deflate = [](std::vector<Rational>& p, const Rational& r) {
        // Synthetic division by (x - r).
        std::vector<Rational> q(p.size() - 1);
        Rational carry = 0;
        for (std::size_t i = p.size(); i-- > 1;) {
            carry = p[i] + carry * r;
            q[i - 1] = carry;
        }
        p = std::move(q);
    };
    // Candidate set from the integer-scaled polynomial; zero handled first.
    while (work.size() > 1 && work.front() == 0) {
        roots.push_back(0);
        deflate(work, 0);
    }
    if (work.size() > 1) {
        // Clear denominators of the deflated polynomial; rational roots are
        // then p/q with p | constant term and q | leading coefficient.
        Integer lcm_den = 1;
        for (const auto& c : work) {
            Integer den = rational_den(c);
            lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, den) * den;
        }
        Integer a0 = rational_num(work.front() * lcm_den);
        Integer an = rational_num(work.back() * lcm_den);
        for (const Integer& p : positive_divisors(a0)) {
            for (const Integer& q : positive_divisors(an)) {
                for (int sign : {1, -1}) {
                    Rational cand = Rational(p * sign, q);
                    while (work.size() > 1 && eval(work, cand) == 0) {
                        roots.push_back(cand);
                        deflate(work, cand);
                    }
                }
            }
        }
    }
    if (work.size() > 1)
        throw UnsupportedError("irrational eigenvalues: minimal polynomial does not split over Q");

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

    std::vector<Eigenpair> pairs;
    std::size_t total = 0;
    for (const auto& r : roots) {
        LinearMap shifted = a;
        for (std::size_t i = 0; i < a.rows(); ++i)
            shifted.set(i, i, shifted.at(i, i) - Scalar::from_rational(a.symbols(), r));
        Eigenpair ep{r, kernel(shifted)};
        total += ep.eigenvectors.size();
        pairs.push_back(std::move(ep));
    }
    if (total != a.rows())
        throw UnsupportedError("eigenspaces do not fill the space (non-semisimple or irrational)");
    return pairs;
}

}  // namespace liedegen
