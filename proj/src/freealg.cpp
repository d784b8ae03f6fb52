#include "jordanrep/freealg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "jordanrep/error.hpp"
#include "jordanrep/linalg.hpp"
#include "jordanrep/random.hpp"

namespace jordanrep {

bool is_pbw(const Word& w) {
    bool seen_x = false;
    for (auto l : w) {
        if (l == Letter::X) seen_x = true;
        else if (seen_x) return false;
    }
    return true;
}

Word pbw_word(std::size_t y_power, std::size_t x_power) {
    Word w(y_power, Letter::Y);
    w.insert(w.end(), x_power, Letter::X);
    return w;
}

NcPolynomial::NcPolynomial(Rational c) {
    if (!c.is_zero()) terms_.emplace(Word{}, std::move(c));
}

NcPolynomial NcPolynomial::x() { return word({Letter::X}); }
NcPolynomial NcPolynomial::y() { return word({Letter::Y}); }

NcPolynomial NcPolynomial::word(Word w, Rational c) {
    NcPolynomial p;
    p.add_term(w, c);
    return p;
}

NcPolynomial NcPolynomial::in_y(const RatPolynomial& p) {
    NcPolynomial out;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k)
        out.add_term(Word(k, Letter::Y), p.coefficients()[k]);
    return out;
}

long NcPolynomial::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<long>(terms_.rbegin()->first.size());
}

Rational NcPolynomial::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational() : it->second;
}

void NcPolynomial::add_term(const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NcPolynomial& NcPolynomial::operator+=(const NcPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NcPolynomial& NcPolynomial::operator-=(const NcPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NcPolynomial& NcPolynomial::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
}

NcPolynomial NcPolynomial::operator-() const { return *this * Rational(-1); }

NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b) {
    NcPolynomial out;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    return out;
}

NcPolynomial NcPolynomial::pow(unsigned k) const {
    NcPolynomial result(1);
    for (unsigned i = 0; i < k; ++i) result = result * *this;
    return result;
}

namespace {

std::string word_str(const Word& w, Alphabet names) {
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!first) os << '*';
        first = false;
        os << (w[i] == Letter::X ? names.x : names.y);
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

}  // namespace

std::string NcPolynomial::str(Alphabet names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [w, c] = *it;
        const Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (w.empty()) {
            os << mag;
        } else {
            if (mag != Rational(1)) os << mag << '*';
            os << word_str(w, names);
        }
    }
    return os.str();
}

namespace {

class ExprParser {
public:
    ExprParser(std::string_view text, Alphabet names) : text_(text), names_(names) {}

    NcPolynomial parse() {
        NcPolynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_factor(char c) const {
        return std::isdigit(static_cast<unsigned char>(c)) || c == names_.x || c == names_.y || c == '(';
    }

    NcPolynomial expr() {
        bool negate = false;
        if (peek() == '-' || peek() == '+') {
            negate = text_[pos_] == '-';
            ++pos_;
        }
        NcPolynomial acc = term();
        if (negate) acc = -acc;
        for (;;) {
            const char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            NcPolynomial t = term();
            if (c == '+') acc += t;
            else acc -= t;
        }
        return acc;
    }

    NcPolynomial term() {
        NcPolynomial acc = factor();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (c != '\0' && starts_factor(c)) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    NcPolynomial factor() {
        NcPolynomial base = primary();
        while (peek() == '^') {
            ++pos_;
            if (peek() == '-') fail("negative exponent");
            const std::string digits = read_digits("exponent");
            if (digits.size() > 4 || std::stoul(digits) > 1000) fail("exponent too large");
            base = base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    std::string read_digits(const char* what) {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail(std::string("expected ") + what);
        return std::string(text_.substr(start, pos_ - start));
    }

    NcPolynomial primary() {
        const char c = peek();
        if (c == '\0') fail("unexpected end of input");
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string lit = read_digits("integer");
            if (peek() == '/') {
                ++pos_;
                const std::size_t at = pos_;
                const std::string den = read_digits("denominator");
                if (mpz_class(den) == 0) throw ParseError("zero denominator", at);
                lit += "/" + den;
            }
            return NcPolynomial(Rational::parse(lit));
        }
        if (c == names_.x) {
            ++pos_;
            return NcPolynomial::x();
        }
        if (c == names_.y) {
            ++pos_;
            return NcPolynomial::y();
        }
        if (c == '(') {
            ++pos_;
            NcPolynomial inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    Alphabet names_;
    std::size_t pos_ = 0;
};

}  // namespace

NcPolynomial parse_expr(std::string_view text, Alphabet names) { return ExprParser(text, names).parse(); }

NcPolynomial defining_relation() {
    const auto x = NcPolynomial::x();
    const auto y = NcPolynomial::y();
    return x * y - y * x - y * y;
}

NcPolynomial normal_form(const NcPolynomial& p) {
    // Both rewrite products of a word w = ..xy.. are strictly smaller than w
    // in lex order with y < x, so processing pending words from the largest
    // down touches each word once with its fully accumulated coefficient.
    std::map<Word, Rational, WordOrder> pending(p.terms().begin(), p.terms().end());
    NcPolynomial out;
    while (!pending.empty()) {
        auto it = std::prev(pending.end());
        Word w = it->first;
        Rational c = std::move(it->second);
        pending.erase(it);
        if (c.is_zero()) continue;
        std::size_t i = 0;
        while (i + 1 < w.size() && !(w[i] == Letter::X && w[i + 1] == Letter::Y)) ++i;
        if (i + 1 >= w.size()) {
            out.add_term(w, c);
            continue;
        }
        Word swapped = w;
        swapped[i] = Letter::Y;
        swapped[i + 1] = Letter::X;
        Word squared = w;
        squared[i] = Letter::Y;
        squared[i + 1] = Letter::Y;
        pending[swapped] += c;
        pending[squared] += c;
    }
    return out;
}

NcPolynomial substitute(const NcPolynomial& p, const NcPolynomial& fx, const NcPolynomial& fy) {
    NcPolynomial out;
    for (const auto& [w, c] : p.terms()) {
        NcPolynomial t(c);
        for (auto l : w) t = t * (l == Letter::X ? fx : fy);
        out += t;
    }
    return out;
}

RatMatrix evaluate(const NcPolynomial& p, const RatMatrix& x, const RatMatrix& y) {
    if (!x.is_square() || !y.is_square() || x.rows() != y.rows())
        throw InputError("evaluate: X and Y must be square of equal size");
    const std::size_t n = x.rows();
    RatMatrix acc(n, n);
    for (const auto& [w, c] : p.terms()) {
        RatMatrix m = RatMatrix::identity(n);
        for (auto l : w) m = m * (l == Letter::X ? x : y);
        acc += m * c;
    }
    return acc;
}

bool check_endomorphism(const NcPolynomial& fx, const NcPolynomial& fy) {
    return normal_form(substitute(defining_relation(), fx, fy)).is_zero();
}

NcPolynomial AutParams::image_x() const { return NcPolynomial::x() * alpha + NcPolynomial::in_y(p); }
NcPolynomial AutParams::image_y() const { return NcPolynomial::y() * alpha; }

AutParams compose_aut(const AutParams& outer, const AutParams& inner) {
    if (outer.alpha.is_zero() || inner.alpha.is_zero()) throw InputError("automorphism with alpha = 0");
    // outer(inner(x)) = a_in (a_out x + p_out(y)) + p_in(a_out y)
    return {outer.alpha * inner.alpha, inner.alpha * outer.p + inner.p.scale_argument(outer.alpha)};
}

AutParams inverse_aut(const AutParams& phi) {
    if (phi.alpha.is_zero()) throw InputError("automorphism with alpha = 0");
    const Rational inv = Rational(1) / phi.alpha;
    return {inv, -(inv * phi.p.scale_argument(inv))};
}

AutParams read_aut_params(const NcPolynomial& fx, const NcPolynomial& fy) {
    const NcPolynomial nx = normal_form(fx);
    const NcPolynomial ny = normal_form(fy);
    const Rational alpha = ny.coefficient({Letter::Y});
    if (ny != NcPolynomial::y() * alpha || alpha.is_zero())
        throw InvariantViolation("image of y is not a nonzero multiple of y: " + ny.str());
    if (nx.coefficient({Letter::X}) != alpha)
        throw InvariantViolation("image of x does not have coefficient alpha on x: " + nx.str());
    std::vector<Rational> coeffs;
    for (const auto& [w, c] : nx.terms()) {
        if (w == Word{Letter::X}) continue;
        if (std::any_of(w.begin(), w.end(), [](Letter l) { return l == Letter::X; }))
            throw InvariantViolation("image of x is not alpha*x + p(y): " + nx.str());
        if (coeffs.size() <= w.size()) coeffs.resize(w.size() + 1);
        coeffs[w.size()] = c;
    }
    return {alpha, RatPolynomial(std::move(coeffs))};
}

std::size_t pbw_count(std::size_t d) { return (d + 1) * (d + 2) / 2; }

std::vector<Word> pbw_basis(std::size_t d) {
    std::vector<Word> words;
    for (std::size_t total = 0; total <= d; ++total)
        for (std::size_t a = 0; a <= total; ++a) words.push_back(pbw_word(a, total - a));
    std::sort(words.begin(), words.end(), WordOrder{});
    return words;
}

std::vector<Word> all_words(std::size_t d) {
    std::vector<Word> words{Word{}};
    std::size_t level_start = 0;
    for (std::size_t len = 1; len <= d; ++len) {
        const std::size_t level_end = words.size();
        for (std::size_t i = level_start; i < level_end; ++i)
            for (auto l : {Letter::Y, Letter::X}) {
                Word w = words[i];
                w.push_back(l);
                words.push_back(std::move(w));
            }
        level_start = level_end;
    }
    std::sort(words.begin(), words.end(), WordOrder{});
    return words;
}

namespace {

using WordIndex = std::map<Word, std::size_t, WordOrder>;

WordIndex index_of(const std::vector<Word>& words) {
    WordIndex idx;
    for (std::size_t i = 0; i < words.size(); ++i) idx.emplace(words[i], i);
    return idx;
}

RatVector coordinates(const NcPolynomial& p, const WordIndex& idx) {
    RatVector v(idx.size());
    for (const auto& [w, c] : p.terms()) {
        auto it = idx.find(w);
        if (it == idx.end()) throw InvariantViolation("term outside the truncated basis: " + p.str());
        v[it->second] = c;
    }
    return v;
}

// Sums m·g·m' over multiplier words drawn from `multipliers` with total
// degree at most d, feeding each product (after `reduce`) to `sink`.
template <typename Reduce, typename Sink>
void for_each_ideal_product(const std::vector<NcPolynomial>& generators, const std::vector<Word>& multipliers,
                            std::size_t d, Reduce reduce, Sink sink) {
    for (const auto& g0 : generators) {
        const NcPolynomial g = reduce(g0);
        if (g.is_zero()) continue;
        const auto gd = static_cast<std::size_t>(g.degree());
        if (gd > d) continue;
        for (const auto& left : multipliers) {
            if (left.size() + gd > d) continue;
            const NcPolynomial lg = NcPolynomial::word(left) * g;
            for (const auto& right : multipliers) {
                if (left.size() + gd + right.size() > d) continue;
                sink(reduce(lg * NcPolynomial::word(right)));
            }
        }
    }
}

}  // namespace

std::vector<NcPolynomial> truncated_ideal_span(const std::vector<NcPolynomial>& generators, std::size_t d) {
    std::vector<NcPolynomial> out;
    for_each_ideal_product(generators, pbw_basis(d), d, normal_form,
                           [&](NcPolynomial p) { if (!p.is_zero()) out.push_back(std::move(p)); });
    return out;
}

std::size_t quotient_dim(const std::vector<NcPolynomial>& generators, std::size_t d) {
    const auto basis = pbw_basis(d);
    const auto idx = index_of(basis);
    EchelonBasis span(basis.size());
    for_each_ideal_product(generators, basis, d, normal_form,
                           [&](const NcPolynomial& p) { span.insert(coordinates(p, idx)); });
    return basis.size() - span.dim();
}

std::size_t free_quotient_dim(const std::vector<NcPolynomial>& generators, std::size_t d) {
    const auto words = all_words(d);
    const auto idx = index_of(words);
    EchelonBasis span(words.size());
    for_each_ideal_product(generators, words, d, [](const NcPolynomial& p) { return p; },
                           [&](const NcPolynomial& p) { span.insert(coordinates(p, idx)); });
    return words.size() - span.dim();
}

NcPolynomial random_nc_polynomial(Rng& rng, std::size_t max_terms, std::size_t max_degree, long coeff_bound) {
    NcPolynomial p;
    const auto terms = rng.uniform(1, static_cast<long>(max_terms));
    for (long t = 0; t < terms; ++t) {
        Word w(static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_degree))));
        for (auto& l : w) l = rng.uniform(0, 1) == 0 ? Letter::Y : Letter::X;
        p.add_term(w, rng.nonzero_rational(coeff_bound));
    }
    return p;
}

AutParams random_aut_params(Rng& rng, std::size_t max_degree, long coeff_bound) {
    std::vector<Rational> c(static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_degree))) + 1);
    for (auto& e : c) e = rng.rational(coeff_bound);
    return {rng.nonzero_rational(coeff_bound), RatPolynomial(std::move(c))};
}

}  // namespace jordanrep
