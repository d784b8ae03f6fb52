#include "jordanrep/imgalg.hpp"

#include "jordanrep/error.hpp"
#include "jordanrep/linalg.hpp"
#include "jordanrep/polynomial.hpp"

namespace jordanrep {

MatrixAlgebra generated_subalgebra(const RatMatrix& x, const RatMatrix& y) {
    if (!x.is_square() || !y.is_square() || x.rows() != y.rows())
        throw InputError("generated_subalgebra: X and Y must be square of equal size");
    const std::size_t n = x.rows();
    MatrixAlgebra alg;
    alg.ambient_n = n;

    EchelonBasis span(n * n);
    std::vector<RatMatrix> frontier;
    for (const RatMatrix& seed : {RatMatrix::identity(n), x, y})
        if (span.insert(seed.vec())) frontier.push_back(seed);
    while (!frontier.empty()) {
        std::vector<RatMatrix> next;
        for (const auto& m : frontier)
            for (const RatMatrix* g : {&x, &y}) {
                RatMatrix prod = m * *g;
                if (span.insert(prod.vec())) next.push_back(std::move(prod));
            }
        frontier = std::move(next);
    }
    for (const auto& row : span.rows()) alg.basis.push_back(RatMatrix::from_vec(row, n, n));

    alg.radical_basis = algebra_radical(alg.basis);
    if (!alg.radical_basis.empty()) {
        EchelonBasis rad2(n * n);
        for (const auto& a : alg.radical_basis)
            for (const auto& b : alg.radical_basis) rad2.insert((a * b).vec());
        alg.rad2_dim = rad2.dim();
    }
    return alg;
}

std::size_t word_span_dim(const RatMatrix& x, const RatMatrix& y, std::size_t maxlen) {
    const std::size_t n = x.rows();
    EchelonBasis total(n * n);
    total.insert(RatMatrix::identity(n).vec());
    std::vector<RatMatrix> level{RatMatrix::identity(n)};
    for (std::size_t len = 1; len <= maxlen; ++len) {
        EchelonBasis level_span(n * n);
        std::vector<RatMatrix> next;
        bool grew = false;
        for (const auto& w : level)
            for (const RatMatrix* g : {&x, &y}) {
                RatMatrix prod = *g * w;
                if (level_span.insert(prod.vec())) {
                    grew |= total.insert(prod.vec());
                    next.push_back(std::move(prod));
                }
            }
        // Once the cumulative span stops growing it is closed under the
        // generators, so longer words add nothing.
        if (!grew) break;
        level = std::move(next);
    }
    return total.dim();
}

std::size_t dimension_bound(std::size_t n) {
    if (n == 0) throw InputError("dimension_bound needs n >= 1");
    return n % 2 == 0 ? n * (n + 2) / 4 : (n + 1) * (n + 1) / 4;
}

ImageReport image_report(const Representation& rho, const MatrixAlgebra& image) {
    ImageReport r;
    r.n = rho.n();
    r.dim = image.dim();
    r.bound = dimension_bound(r.n);
    r.within_bound = r.dim <= r.bound;
    r.distinct_eigenvalues = distinct_eigenvalue_count(rho.x());
    r.semisimple_dim = image.semisimple_dim();
    r.basic = r.distinct_eigenvalues == r.semisimple_dim;
    r.local = r.semisimple_dim == 1;
    r.radical_dim = image.radical_basis.size();
    r.rad2_dim = image.rad2_dim;
    if (r.local) r.loops = r.radical_dim - r.rad2_dim;
    return r;
}

ImageReport image_report(const Representation& rho) {
    return image_report(rho, generated_subalgebra(rho.x(), rho.y()));
}

std::vector<NcPolynomial> Presentation::all_relations() const {
    std::vector<NcPolynomial> out;
    for (const auto& level : relations_by_degree) out.insert(out.end(), level.begin(), level.end());
    return out;
}

namespace {

// Coordinates of p in the word basis `index` (degree-then-lex order).
RatVector word_coordinates(const NcPolynomial& p, const std::map<Word, std::size_t, WordOrder>& index) {
    RatVector v(index.size());
    for (const auto& [w, c] : p.terms()) v[index.at(w)] = c;
    return v;
}

NcPolynomial from_coordinates(const RatVector& v, const std::vector<Word>& words) {
    NcPolynomial p;
    for (std::size_t i = 0; i < v.size(); ++i) p.add_term(words[i], v[i]);
    return p;
}

}  // namespace

Presentation extract_presentation(const Representation& rho, std::size_t d) {
    if (d < 2) throw InputError("extract_presentation needs degree bound d >= 2");
    const std::size_t n = rho.n();
    if (n == 0) throw InputError("extract_presentation needs a nonzero module");
    const MatrixAlgebra image = generated_subalgebra(rho.x(), rho.y());
    if (image.semisimple_dim() != 1)
        throw InputError("image algebra is not local (semisimple dimension " +
                         std::to_string(image.semisimple_dim()) + ")");
    Presentation pres;
    pres.alpha = rho.x().trace() / Rational(static_cast<long>(n));
    pres.degree_bound = d;
    const RatMatrix u = rho.x() - RatMatrix::identity(n) * pres.alpha;
    const RatMatrix& v = rho.y();
    if (!is_nilpotent(u)) throw InputError("X - (tr X / n) I is not nilpotent; X needs a single rational eigenvalue");

    // Letter X plays u and letter Y plays v throughout.
    const auto words = all_words(d);
    std::map<Word, std::size_t, WordOrder> index;
    for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
    std::vector<RatMatrix> values;
    values.reserve(words.size());
    for (const auto& w : words) {
        RatMatrix m = RatMatrix::identity(n);
        for (auto l : w) m = m * (l == Letter::X ? u : v);
        values.push_back(std::move(m));
    }

    pres.relations_by_degree.assign(d + 1, {});
    std::vector<NcPolynomial> found;
    for (std::size_t e = 1; e <= d; ++e) {
        std::size_t count = 0;
        while (count < words.size() && words[count].size() <= e) ++count;

        // Kernel of evaluation on words of length <= e.
        RatMatrix eval(n * n, count);
        for (std::size_t c = 0; c < count; ++c) {
            const RatVector col = values[c].vec();
            for (std::size_t r = 0; r < n * n; ++r) eval(r, c) = col[r];
        }
        const auto kernel = nullspace(eval);

        // Two-sided consequences of the relations of lower degree.
        EchelonBasis consequences(words.size());
        for (const auto& rel : found) {
            const auto rd = static_cast<std::size_t>(rel.degree());
            for (std::size_t l = 0; l < count; ++l) {
                if (words[l].size() + rd > e) continue;
                const NcPolynomial left = NcPolynomial::word(words[l]) * rel;
                for (std::size_t r = 0; r < count; ++r) {
                    if (words[l].size() + rd + words[r].size() > e) continue;
                    consequences.insert(word_coordinates(left * NcPolynomial::word(words[r]), index));
                }
            }
        }

        EchelonBasis fresh(words.size());
        for (const auto& k : kernel) {
            RatVector full(words.size());
            for (std::size_t i = 0; i < count; ++i) full[i] = k[i];
            const RatVector rem = consequences.reduce(std::move(full));
            if (!is_zero(rem)) fresh.insert(rem);
        }
        for (const auto& row : fresh.rows()) {
            NcPolynomial rel = from_coordinates(row, words);
            if (!evaluate(rel, u, v).is_zero())
                throw InvariantViolation("extracted relation does not vanish: " + rel.str(kUV));
            pres.relations_by_degree[e].push_back(rel);
        }
        found.insert(found.end(), pres.relations_by_degree[e].begin(), pres.relations_by_degree[e].end());
    }
    return pres;
}

void to_json(nlohmann::json& j, const ImageReport& r) {
    j = {{"n", r.n},
         {"dim", r.dim},
         {"bound", r.bound},
         {"within_bound", r.within_bound},
         {"r1_distinct_eigenvalues", r.distinct_eigenvalues},
         {"r2_semisimple_dim", r.semisimple_dim},
         {"basic", r.basic},
         {"local", r.local},
         {"radical_dim", r.radical_dim},
         {"rad2_dim", r.rad2_dim}};
    j["loops"] = r.loops ? nlohmann::json(*r.loops) : nlohmann::json(nullptr);
}

void to_json(nlohmann::json& j, const Presentation& p) {
    auto by_degree = nlohmann::json::array();
    for (const auto& level : p.relations_by_degree) {
        auto rels = nlohmann::json::array();
        for (const auto& r : level) rels.push_back(r.str(kUV));
        by_degree.push_back(std::move(rels));
    }
    auto flat = nlohmann::json::array();
    for (const auto& r : p.all_relations()) flat.push_back(r.str(kUV));
    j = {{"alpha", p.alpha.str()}, {"degree_bound", p.degree_bound}, {"relations", flat},
         {"relations_by_degree", by_degree}};
}

}  // namespace jordanrep
