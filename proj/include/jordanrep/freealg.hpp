#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "jordanrep/matrix.hpp"
#include "jordanrep/polynomial.hpp"

namespace jordanrep {

class Rng;

enum class Letter : std::uint8_t { Y = 0, X = 1 };

/// A word over {x, y}. It is in PBW form iff it reads y^a x^b.
using Word = std::vector<Letter>;

/// Degree first, then lexicographic with y < x.
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

bool is_pbw(const Word& w);
Word pbw_word(std::size_t y_power, std::size_t x_power);

/// Display names for the two generators; the parser and printer use the
/// same pair, so image-algebra presentations round-trip with {u, v}.
struct Alphabet {
    char x = 'x';
    char y = 'y';
};
inline constexpr Alphabet kXY{'x', 'y'};
inline constexpr Alphabet kUV{'u', 'v'};

/// Element of k<x, y>: finite sum of words with nonzero rational coefficients.
class NcPolynomial {
public:
    using Terms = std::map<Word, Rational, WordOrder>;

    NcPolynomial() = default;
    NcPolynomial(Rational c);  // NOLINT(google-explicit-constructor)
    static NcPolynomial x();
    static NcPolynomial y();
    static NcPolynomial word(Word w, Rational c = 1);
    /// p(y) for a univariate polynomial p.
    static NcPolynomial in_y(const RatPolynomial& p);

    bool is_zero() const { return terms_.empty(); }
    /// Length of the longest word; -1 for zero.
    long degree() const;
    const Terms& terms() const { return terms_; }
    Rational coefficient(const Word& w) const;

    void add_term(const Word& w, const Rational& c);

    NcPolynomial& operator+=(const NcPolynomial& o);
    NcPolynomial& operator-=(const NcPolynomial& o);
    NcPolynomial& operator*=(const Rational& s);
    NcPolynomial operator-() const;
    NcPolynomial pow(unsigned k) const;

    friend NcPolynomial operator+(NcPolynomial a, const NcPolynomial& b) { return a += b; }
    friend NcPolynomial operator-(NcPolynomial a, const NcPolynomial& b) { return a -= b; }
    friend NcPolynomial operator*(NcPolynomial a, const Rational& s) { return a *= s; }
    friend NcPolynomial operator*(const Rational& s, NcPolynomial a) { return a *= s; }
    friend NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b);
    friend bool operator==(const NcPolynomial&, const NcPolynomial&) = default;

    /// Terms from the largest word down, e.g. "y^2*x + 2*y^3".
    std::string str(Alphabet names = kXY) const;

private:
    Terms terms_;
};

/// Parses the expression grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*'? factor)*
///   factor := rational | x | y | '(' expr ')' | factor '^' nat
/// A leading sign on the first term is also accepted.
NcPolynomial parse_expr(std::string_view text, Alphabet names = kXY);

/// xy - yx - y^2
NcPolynomial defining_relation();

/// Rewrites x·y -> y·x + y·y until every word is y^a x^b.
NcPolynomial normal_form(const NcPolynomial& p);

/// Substitution x -> fx, y -> fy in the free algebra (not normalized).
NcPolynomial substitute(const NcPolynomial& p, const NcPolynomial& fx, const NcPolynomial& fy);

/// Substitutes matrices for the generators; constants become multiples of I.
RatMatrix evaluate(const NcPolynomial& p, const RatMatrix& x, const RatMatrix& y);

/// x -> fx, y -> fy preserves the relation iff it maps xy - yx - y^2 to 0 in R.
bool check_endomorphism(const NcPolynomial& fx, const NcPolynomial& fy);

/// Automorphism x -> alpha·x + p(y), y -> alpha·y.
struct AutParams {
    Rational alpha = 1;
    RatPolynomial p;

    NcPolynomial image_x() const;
    NcPolynomial image_y() const;
    friend bool operator==(const AutParams&, const AutParams&) = default;
};

/// Parameters of outer ∘ inner (inner applied first).
AutParams compose_aut(const AutParams& outer, const AutParams& inner);

AutParams inverse_aut(const AutParams& phi);

/// Reads (alpha, p) back from images of x and y in normal form; throws
/// InvariantViolation if the images do not have that shape.
AutParams read_aut_params(const NcPolynomial& fx, const NcPolynomial& fy);

/// Number of PBW words y^a x^b with a + b <= d.
std::size_t pbw_count(std::size_t d);

/// Coordinates of a normal-form polynomial of degree <= d in the PBW basis
/// ordered by pbw_basis(d).
std::vector<Word> pbw_basis(std::size_t d);

/// Dimension of the degree <= d truncation of R / id(generators), where the
/// ideal part is spanned by normal_form(m·g·m') over PBW words m, m'.
std::size_t quotient_dim(const std::vector<NcPolynomial>& generators, std::size_t d);

/// Spanning set of the degree <= d truncation of the two-sided ideal, in
/// normal form.
std::vector<NcPolynomial> truncated_ideal_span(const std::vector<NcPolynomial>& generators,
                                               std::size_t d);

/// All words of length <= d in degree-then-lex order.
std::vector<Word> all_words(std::size_t d);

/// Same truncated-quotient count inside the free algebra k<x, y> (no PBW
/// rewriting): words of length <= d modulo span{m·g·m'}.
std::size_t free_quotient_dim(const std::vector<NcPolynomial>& generators, std::size_t d);

/// Random element with 1..max_terms words of length <= max_degree and
/// coefficients from Rng::nonzero_rational(coeff_bound).
NcPolynomial random_nc_polynomial(Rng& rng, std::size_t max_terms, std::size_t max_degree, long coeff_bound);

/// alpha nonzero, p of degree <= max_degree.
AutParams random_aut_params(Rng& rng, std::size_t max_degree, long coeff_bound);

}  // namespace jordanrep
