#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "jordanrep/matrix.hpp"

namespace jordanrep {

/// X·Y − Y·X − Y² == 0, exactly.
bool check_relation(const RatMatrix& x, const RatMatrix& y);

/// An n-dimensional module over the Jordan plane: x acts by X, y by Y.
class Representation {
public:
    /// Throws InputError if the shapes disagree or the relation fails.
    Representation(RatMatrix x, RatMatrix y);

    /// The zero-dimensional module.
    Representation() = default;

    std::size_t n() const { return x_.rows(); }
    const RatMatrix& x() const { return x_; }
    const RatMatrix& y() const { return y_; }

private:
    RatMatrix x_;
    RatMatrix y_;
};

/// S_α: x ↦ α, y ↦ 0.
Representation simple_module(const Rational& alpha);

Representation direct_sum(const Representation& a, const Representation& b);

/// Simultaneous conjugation g·(X, Y)·g⁻¹.
Representation conjugate(const Representation& rho, const RatMatrix& g);

struct EndoAlgebra {
    std::size_t ambient_n = 0;
    std::vector<RatMatrix> basis;         // identity first
    std::vector<RatMatrix> radical_basis;
    std::size_t semisimple_dim = 0;
};

EndoAlgebra endomorphism_algebra(const Representation& rho);

/// Radical of the unital matrix algebra spanned by `basis`, as the kernel of
/// the trace form (a, b) ↦ tr(ab); valid in characteristic 0. Throws
/// InputError when the span is not closed under multiplication.
std::vector<RatMatrix> algebra_radical(const std::vector<RatMatrix>& basis);

/// Product of every pair of basis elements lies in the span.
bool is_multiplicatively_closed(const std::vector<RatMatrix>& basis);

struct Indecomposability {
    bool absolutely_indecomposable = false;
    std::size_t semisimple_dim = 0;

    std::string tag() const {
        return absolutely_indecomposable ? "AbsolutelyIndecomposable" : "NotAbsolutelyIndecomposable";
    }
};

/// Absolutely indecomposable iff End(ρ)/rad is one-dimensional.
Indecomposability indecomposability_class(const Representation& rho);

struct ExtResult {
    std::size_t dim = 0;
    /// Cocycle representatives (θ_X, θ_Y), one per basis class of Ext¹.
    std::vector<std::pair<RatMatrix, RatMatrix>> cocycle_basis;
    std::size_t cocycle_dim = 0;
    std::size_t coboundary_dim = 0;
};

/// Ext¹(M, N) from block upper-triangular extensions
/// [[X_N, θ_X], [0, X_M]], [[Y_N, θ_Y], [0, Y_M]].
ExtResult ext1(const Representation& m, const Representation& n);

/// Off-diagonal block of the relation for the extension defined by
/// (θ_X, θ_Y); zero iff the pair is a cocycle.
RatMatrix extension_residual(const Representation& m, const Representation& n, const RatMatrix& theta_x,
                             const RatMatrix& theta_y);

/// Every element of the degree <= d truncation of id(y, x − α) acts by zero
/// on S_α, and that truncated quotient is one-dimensional.
bool kernel_ideal_check(const Rational& alpha, std::size_t d);

void to_json(nlohmann::json& j, const Representation& r);
void from_json(const nlohmann::json& j, Representation& r);

}  // namespace jordanrep
