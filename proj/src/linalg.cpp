#include "jordanrep/linalg.hpp"

#include <utility>

#include "jordanrep/error.hpp"

namespace jordanrep {

bool is_zero(std::span<const Rational> v) {
    for (const auto& e : v)
        if (!e.is_zero()) return false;
    return true;
}

namespace {

// row[target] -= factor * row[source], skipping the columns before `from`.
void eliminate(RatMatrix& a, std::size_t target, std::size_t source, const Rational& factor,
               std::size_t from) {
    auto t = a.row(target);
    auto s = a.row(source);
    mpq_class tmp;
    for (std::size_t j = from; j < a.cols(); ++j) {
        if (s[j].is_zero()) continue;
        tmp = factor.raw() * s[j].raw();
        t[j] -= Rational(tmp);
    }
}

}  // namespace

namespace {

using IntRow = std::vector<mpz_class>;

// Scales a rational row to coprime integers (same row space element up to
// a positive factor).
IntRow to_integer_row(std::span<const Rational> row) {
    mpz_class l = 1;
    for (const auto& e : row)
        if (!e.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.raw().get_den_mpz_t());
    IntRow out(row.size());
    for (std::size_t j = 0; j < row.size(); ++j)
        if (!row[j].is_zero()) out[j] = row[j].raw().get_num() * (l / row[j].raw().get_den());
    return out;
}

// Divides by the positive gcd of the entries; returns it (1 for a zero row).
mpz_class remove_content(IntRow& row) {
    mpz_class g = 0;
    for (const auto& e : row) {
        if (sgn(e) == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
        if (g == 1) return g;
    }
    if (g > 1)
        for (auto& e : row)
            if (sgn(e) != 0) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
    return g == 0 ? mpz_class(1) : g;
}

// target := p·target − q·source with p = source[col], q = target[col], so
// target[col] becomes zero; then divides out the row content. Returns
// p / content, the factor by which target's original part was scaled.
mpq_class eliminate_int(IntRow& target, const IntRow& source, std::size_t col) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), source[col].get_mpz_t(), target[col].get_mpz_t());
    mpz_class p = source[col] / g;
    mpz_class q = target[col] / g;
    if (sgn(p) < 0) {
        p = -p;
        q = -q;
    }
    mpz_class tmp;
    for (std::size_t j = 0; j < target.size(); ++j) {
        if (sgn(target[j]) != 0 && p != 1) target[j] *= p;
        if (sgn(source[j]) != 0) {
            mpz_mul(tmp.get_mpz_t(), q.get_mpz_t(), source[j].get_mpz_t());
            target[j] -= tmp;
        }
    }
    const mpz_class content = remove_content(target);
    return mpq_class(p, content);
}

RatVector to_rational_row(const IntRow& row) {
    RatVector out(row.size());
    for (std::size_t j = 0; j < row.size(); ++j)
        if (sgn(row[j]) != 0) out[j] = Rational(mpq_class(row[j]));
    return out;
}

}  // namespace

Rref rref(RatMatrix a) {
    std::vector<IntRow> rows;
    rows.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        IntRow r = to_integer_row(a.row(i));
        remove_content(r);
        rows.push_back(std::move(r));
    }
    const std::size_t cols = a.cols();
    Rref out;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
        std::size_t r = pivot_row;
        while (r < rows.size() && sgn(rows[r][col]) == 0) ++r;
        if (r == rows.size()) continue;
        std::swap(rows[r], rows[pivot_row]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pivot_row || sgn(rows[i][col]) == 0) continue;
            eliminate_int(rows[i], rows[pivot_row], col);
        }
        out.pivot_cols.push_back(col);
        ++pivot_row;
    }
    RatMatrix reduced(a.rows(), cols);
    for (std::size_t i = 0; i < out.pivot_cols.size(); ++i) {
        const mpz_class& lead = rows[i][out.pivot_cols[i]];
        for (std::size_t j = out.pivot_cols[i]; j < cols; ++j)
            if (sgn(rows[i][j]) != 0) reduced(i, j) = Rational(mpq_class(rows[i][j], lead));
    }
    out.reduced = std::move(reduced);
    return out;
}

std::size_t rank(const RatMatrix& a) { return rref(a).rank(); }

std::vector<RatVector> nullspace(const RatMatrix& a) {
    const Rref r = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : r.pivot_cols) is_pivot[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVector v(a.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < r.rank(); ++i) v[r.pivot_cols[i]] = -r.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<AffineSolution> solve_affine(const RatMatrix& a, std::span<const Rational> b) {
    if (b.size() != a.rows()) throw InputError("solve_affine: right-hand side length mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const Rref r = rref(std::move(aug));
    if (!r.pivot_cols.empty() && r.pivot_cols.back() == a.cols()) return std::nullopt;

    AffineSolution sol;
    sol.particular.assign(a.cols(), Rational());
    for (std::size_t i = 0; i < r.rank(); ++i) sol.particular[r.pivot_cols[i]] = r.reduced(i, a.cols());

    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : r.pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVector v(a.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < r.rank(); ++i) v[r.pivot_cols[i]] = -r.reduced(i, f);
        sol.kernel_basis.push_back(std::move(v));
    }
    return sol;
}

Rational determinant(RatMatrix a) {
    if (!a.is_square()) throw InputError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t r = col;
        while (r < n && a(r, col).is_zero()) ++r;
        if (r == n) return 0;
        if (r != col) {
            auto x = a.row(r);
            auto y = a.row(col);
            for (std::size_t j = 0; j < n; ++j) std::swap(x[j], y[j]);
            det = -det;
        }
        det *= a(col, col);
        const Rational inv = Rational(1) / a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col).is_zero()) continue;
            const Rational factor = a(i, col) * inv;
            eliminate(a, i, col, factor, col);
        }
    }
    return det;
}

RatMatrix inverse(const RatMatrix& a) {
    if (!a.is_square()) throw InputError("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    const Rref r = rref(std::move(aug));
    if (r.rank() < n || r.pivot_cols[n - 1] != n - 1) throw InputError("matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
    return inv;
}

RatVector primitive(std::span<const Rational> v) {
    IntRow r = to_integer_row(v);
    remove_content(r);
    return to_rational_row(r);
}

RatMatrix primitive(const RatMatrix& m) {
    const RatVector flat(m.entries().begin(), m.entries().end());
    return RatMatrix(m.rows(), m.cols(), primitive(flat));
}

EchelonBasis::EchelonBasis(std::size_t width) : width_(width) {}
EchelonBasis::~EchelonBasis() = default;
EchelonBasis::EchelonBasis(const EchelonBasis&) = default;
EchelonBasis& EchelonBasis::operator=(const EchelonBasis&) = default;
EchelonBasis::EchelonBasis(EchelonBasis&&) noexcept = default;
EchelonBasis& EchelonBasis::operator=(EchelonBasis&&) noexcept = default;

mpq_class EchelonBasis::reduce_int(std::vector<mpz_class>& w) const {
    mpq_class scale = 1;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t p = pivots_[k];
        if (sgn(w[p]) == 0) continue;
        scale *= eliminate_int(w, rows_[k], p);
    }
    return scale;
}

RatVector EchelonBasis::reduce(RatVector v) const {
    if (v.size() != width_) throw InputError("EchelonBasis: vector width mismatch");
    mpz_class l = 1;
    for (const auto& e : v)
        if (!e.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.raw().get_den_mpz_t());
    std::vector<mpz_class> w = to_integer_row(v);
    const mpz_class content = remove_content(w);
    // w = (l / content)·v at this point.
    mpq_class scale(l, content);
    scale.canonicalize();
    scale *= reduce_int(w);
    RatVector out(width_);
    for (std::size_t j = 0; j < width_; ++j)
        if (sgn(w[j]) != 0) out[j] = Rational(mpq_class(w[j]) / scale);
    return out;
}

bool EchelonBasis::contains(const RatVector& v) const {
    if (v.size() != width_) throw InputError("EchelonBasis: vector width mismatch");
    std::vector<mpz_class> w = to_integer_row(v);
    reduce_int(w);
    for (const auto& e : w)
        if (sgn(e) != 0) return false;
    return true;
}

bool EchelonBasis::insert(const RatVector& v) {
    if (v.size() != width_) throw InputError("EchelonBasis: vector width mismatch");
    std::vector<mpz_class> w = to_integer_row(v);
    remove_content(w);
    reduce_int(w);
    std::size_t p = 0;
    while (p < width_ && sgn(w[p]) == 0) ++p;
    if (p == width_) return false;
    if (sgn(w[p]) < 0)
        for (auto& e : w) e = -e;
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(w));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    return true;
}

std::vector<RatVector> EchelonBasis::rows() const {
    std::vector<RatVector> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(to_rational_row(r));
    return out;
}

}  // namespace jordanrep
