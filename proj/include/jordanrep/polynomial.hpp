#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jordanrep/matrix.hpp"

namespace jordanrep {

/// Univariate polynomial with rational coefficients; index = degree.
class RatPolynomial {
public:
    RatPolynomial() = default;
    explicit RatPolynomial(std::vector<Rational> coefficients);

    static RatPolynomial monomial(std::size_t degree, Rational c = 1);
    static RatPolynomial constant(Rational c) { return RatPolynomial({std::move(c)}); }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t k) const;
    const Rational& leading() const { return coeffs_.back(); }

    RatPolynomial derivative() const;
    RatPolynomial monic() const;
    /// p(s·t)
    RatPolynomial scale_argument(const Rational& s) const;

    Rational operator()(const Rational& t) const;
    RatMatrix operator()(const RatMatrix& m) const;

    RatPolynomial& operator+=(const RatPolynomial& o);
    RatPolynomial& operator-=(const RatPolynomial& o);
    RatPolynomial& operator*=(const Rational& s);
    RatPolynomial operator-() const;
    friend RatPolynomial operator+(RatPolynomial a, const RatPolynomial& b) { return a += b; }
    friend RatPolynomial operator-(RatPolynomial a, const RatPolynomial& b) { return a -= b; }
    friend RatPolynomial operator*(RatPolynomial a, const Rational& s) { return a *= s; }
    friend RatPolynomial operator*(const Rational& s, RatPolynomial a) { return a *= s; }
    friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
    friend bool operator==(const RatPolynomial&, const RatPolynomial&) = default;

    std::string str(char var = 't') const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws InputError on division by zero.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);

/// Monic gcd (zero if both inputs are zero).
RatPolynomial gcd(RatPolynomial a, RatPolynomial b);

/// det(t·I − m), computed with the Faddeev–LeVerrier recurrence.
RatPolynomial char_poly(const RatMatrix& m);

/// Number of distinct roots of the characteristic polynomial over the
/// algebraic closure: deg(p / gcd(p, p')).
std::size_t distinct_eigenvalue_count(const RatMatrix& m);

/// m^n == 0 for an n×n matrix.
bool is_nilpotent(const RatMatrix& m);

}  // namespace jordanrep
