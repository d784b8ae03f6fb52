#include "jordanrep/polynomial.hpp"

#include <sstream>

#include "jordanrep/error.hpp"

namespace jordanrep {

RatPolynomial::RatPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

void RatPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RatPolynomial RatPolynomial::monomial(std::size_t degree, Rational c) {
    std::vector<Rational> v(degree + 1);
    v[degree] = std::move(c);
    return RatPolynomial(std::move(v));
}

Rational RatPolynomial::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational();
}

RatPolynomial RatPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    return RatPolynomial(std::move(d));
}

RatPolynomial RatPolynomial::monic() const {
    if (is_zero()) return {};
    return *this * (Rational(1) / leading());
}

RatPolynomial RatPolynomial::scale_argument(const Rational& s) const {
    std::vector<Rational> c = coeffs_;
    Rational power = 1;
    for (auto& e : c) {
        e *= power;
        power *= s;
    }
    return RatPolynomial(std::move(c));
}

Rational RatPolynomial::operator()(const Rational& t) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

RatMatrix RatPolynomial::operator()(const RatMatrix& m) const {
    if (!m.is_square()) throw InputError("polynomial evaluated at a non-square matrix");
    const auto id = RatMatrix::identity(m.rows());
    RatMatrix acc(m.rows(), m.cols());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + id * *it;
    return acc;
}

RatPolynomial& RatPolynomial::operator+=(const RatPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

RatPolynomial& RatPolynomial::operator-=(const RatPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

RatPolynomial& RatPolynomial::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
}

RatPolynomial RatPolynomial::operator-() const { return *this * Rational(-1); }

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RatPolynomial(std::move(c));
}

std::string RatPolynomial::str(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        const Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (k == 0) {
            os << mag;
            continue;
        }
        if (!unit) os << mag << '*';
        os << var;
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
    if (b.is_zero()) throw InputError("polynomial division by zero");
    RatPolynomial q, r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
        const RatPolynomial t = RatPolynomial::monomial(shift, r.leading() / b.leading());
        q += t;
        r -= t * b;
    }
    return {q, r};
}

RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

RatPolynomial char_poly(const RatMatrix& m) {
    if (!m.is_square()) throw InputError("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    // c[k] is the coefficient of t^k; c[n] = 1.
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    const auto id = RatMatrix::identity(n);
    RatMatrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk + id * c[n - k + 1];
        c[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
    }
    return RatPolynomial(std::move(c));
}

std::size_t distinct_eigenvalue_count(const RatMatrix& m) {
    const RatPolynomial p = char_poly(m);
    const RatPolynomial g = gcd(p, p.derivative());
    return static_cast<std::size_t>(divmod(p, g).first.degree());
}

bool is_nilpotent(const RatMatrix& m) {
    if (!m.is_square()) throw InputError("nilpotency test needs a square matrix");
    if (m.rows() == 0) return true;
    // Repeated multiplication can stop early once the power vanishes.
    RatMatrix power = m;
    for (std::size_t k = 1; k < m.rows(); ++k) {
        if (power.is_zero()) return true;
        power = power * m;
    }
    return power.is_zero();
}

}  // namespace jordanrep
