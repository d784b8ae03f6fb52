#include "jordanrep/repmod.hpp"

#include "jordanrep/error.hpp"
#include "jordanrep/freealg.hpp"
#include "jordanrep/json_io.hpp"
#include "jordanrep/linalg.hpp"
#include "jordanrep/polynomial.hpp"

namespace jordanrep {

bool check_relation(const RatMatrix& x, const RatMatrix& y) {
    if (!x.is_square() || !y.is_square() || x.rows() != y.rows())
        throw InputError("check_relation: X and Y must be square of equal size");
#ifdef JORDANREP_MUTANT_RELATION_SIGN
    // Deliberately broken build used to smoke-test the verification suite.
    return (x * y - y * x + y * y).is_zero();
#else
    return (x * y - y * x - y * y).is_zero();
#endif
}

Representation::Representation(RatMatrix x, RatMatrix y) : x_(std::move(x)), y_(std::move(y)) {
    if (!check_relation(x_, y_)) throw InputError("X*Y - Y*X - Y^2 is not zero");
}

Representation simple_module(const Rational& alpha) { return {RatMatrix{{alpha}}, RatMatrix{{0}}}; }

Representation direct_sum(const Representation& a, const Representation& b) {
    return {block_diagonal(a.x(), b.x()), block_diagonal(a.y(), b.y())};
}

Representation conjugate(const Representation& rho, const RatMatrix& g) {
    const RatMatrix g_inv = inverse(g);
    return {g * rho.x() * g_inv, g * rho.y() * g_inv};
}

bool is_multiplicatively_closed(const std::vector<RatMatrix>& basis) {
    if (basis.empty()) return true;
    EchelonBasis span(basis.front().rows() * basis.front().cols());
    for (const auto& b : basis) span.insert(b.vec());
    for (const auto& a : basis)
        for (const auto& b : basis)
            if (!span.contains((a * b).vec())) return false;
    return true;
}

std::vector<RatMatrix> algebra_radical(const std::vector<RatMatrix>& basis) {
    if (basis.empty()) return {};
    if (!is_multiplicatively_closed(basis)) throw InputError("algebra_radical: span is not closed under products");
    const std::size_t k = basis.size();
    RatMatrix gram(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            gram(i, j) = (basis[i] * basis[j]).trace();
            gram(j, i) = gram(i, j);
        }
    std::vector<RatMatrix> radical;
    for (const auto& c : nullspace(gram)) {
        RatMatrix r(basis.front().rows(), basis.front().cols());
        for (std::size_t i = 0; i < k; ++i)
            if (!c[i].is_zero()) r += basis[i] * c[i];
        radical.push_back(primitive(r));
    }
    return radical;
}

EndoAlgebra endomorphism_algebra(const Representation& rho) {
    const std::size_t n = rho.n();
    const RatMatrix ops[] = {commutator_operator(rho.x()), commutator_operator(rho.y())};
    EndoAlgebra out;
    out.ambient_n = n;
    out.basis.push_back(RatMatrix::identity(n));
    EchelonBasis span(n * n);
    span.insert(out.basis.front().vec());
    for (const auto& v : nullspace(vstack(ops)))
        if (span.insert(v)) out.basis.push_back(RatMatrix::from_vec(primitive(v), n, n));
    out.radical_basis = algebra_radical(out.basis);
    out.semisimple_dim = out.basis.size() - out.radical_basis.size();
    return out;
}

Indecomposability indecomposability_class(const Representation& rho) {
    const EndoAlgebra end = endomorphism_algebra(rho);
    return {end.semisimple_dim == 1, end.semisimple_dim};
}

RatMatrix extension_residual(const Representation& m, const Representation& n, const RatMatrix& theta_x,
                             const RatMatrix& theta_y) {
    return n.x() * theta_y + theta_x * m.y() - n.y() * theta_x - theta_y * m.x() - n.y() * theta_y -
           theta_y * m.y();
}

ExtResult ext1(const Representation& m, const Representation& n) {
    const std::size_t rows = n.n();
    const std::size_t cols = m.n();
    const std::size_t block = rows * cols;
    const auto id_n = RatMatrix::identity(rows);
    const auto id_m = RatMatrix::identity(cols);

    // Unknown vector is (vec θ_X, vec θ_Y).
    const RatMatrix on_theta_x = sandwich_operator(id_n, m.y()) - sandwich_operator(n.y(), id_m);
    const RatMatrix on_theta_y = sandwich_operator(n.x(), id_m) - sandwich_operator(id_n, m.x()) -
                                 sandwich_operator(n.y(), id_m) - sandwich_operator(id_n, m.y());
    RatMatrix cocycle_op(block, 2 * block);
    for (std::size_t i = 0; i < block; ++i)
        for (std::size_t j = 0; j < block; ++j) {
            cocycle_op(i, j) = on_theta_x(i, j);
            cocycle_op(i, block + j) = on_theta_y(i, j);
        }

    // Coboundaries: t ↦ (t·X_M − X_N·t, t·Y_M − Y_N·t).
    EchelonBasis coboundaries(2 * block);
    const RatMatrix db_x = sandwich_operator(id_n, m.x()) - sandwich_operator(n.x(), id_m);
    const RatMatrix db_y = sandwich_operator(id_n, m.y()) - sandwich_operator(n.y(), id_m);
    for (std::size_t j = 0; j < block; ++j) {
        RatVector col(2 * block);
        for (std::size_t i = 0; i < block; ++i) {
            col[i] = db_x(i, j);
            col[block + i] = db_y(i, j);
        }
        coboundaries.insert(std::move(col));
    }

    const auto cocycles = nullspace(cocycle_op);
    ExtResult out;
    out.cocycle_dim = cocycles.size();
    out.coboundary_dim = coboundaries.dim();
    EchelonBasis classes = coboundaries;
    for (const auto& c : cocycles) {
        if (!classes.insert(c)) continue;
        const std::span<const Rational> all(c);
        out.cocycle_basis.emplace_back(RatMatrix::from_vec(all.subspan(0, block), rows, cols),
                                       RatMatrix::from_vec(all.subspan(block, block), rows, cols));
    }
    out.dim = out.cocycle_basis.size();
    if (out.dim != out.cocycle_dim - out.coboundary_dim)
        throw InvariantViolation("coboundaries are not contained in the cocycle space");
    return out;
}

bool kernel_ideal_check(const Rational& alpha, std::size_t d) {
    if (d < 1) throw InputError("kernel_ideal_check needs d >= 1");
    const std::vector<NcPolynomial> gens{NcPolynomial::y(), NcPolynomial::x() - NcPolynomial(alpha)};
    const Representation s = simple_module(alpha);
    for (const auto& p : truncated_ideal_span(gens, d))
        if (!evaluate(p, s.x(), s.y()).is_zero()) return false;
    return quotient_dim(gens, d) == 1;
}

void to_json(nlohmann::json& j, const Representation& r) {
    j = {{"n", r.n()}, {"X", r.x()}, {"Y", r.y()}};
}

void from_json(const nlohmann::json& j, Representation& r) {
    if (!j.is_object() || !j.contains("X") || !j.contains("Y"))
        throw InputError("representation JSON needs X and Y");
    auto x = j.at("X").get<RatMatrix>();
    auto y = j.at("Y").get<RatMatrix>();
    if (j.contains("n") && j.at("n").get<std::size_t>() != x.rows())
        throw InputError("representation JSON: n does not match matrix size");
    r = Representation(std::move(x), std::move(y));
}

}  // namespace jordanrep
