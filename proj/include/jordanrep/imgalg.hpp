#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "jordanrep/freealg.hpp"
#include "jordanrep/matrix.hpp"
#include "jordanrep/repmod.hpp"

namespace jordanrep {

/// Unital subalgebra of n×n matrices given by a reduced basis.
struct MatrixAlgebra {
    std::size_t ambient_n = 0;
    std::vector<RatMatrix> basis;
    bool contains_identity = true;
    std::vector<RatMatrix> radical_basis;
    std::size_t rad2_dim = 0;

    std::size_t dim() const { return basis.size(); }
    std::size_t semisimple_dim() const { return basis.size() - radical_basis.size(); }
};

/// Smallest unital subalgebra containing X and Y: seeds {I, X, Y} and
/// multiplies new elements on the right by X and Y until the span is stable.
MatrixAlgebra generated_subalgebra(const RatMatrix& x, const RatMatrix& y);

/// Dimension of span{w(X, Y) : |w| <= maxlen}, computed level by level as
/// V_0 = k·I, V_k = X·V_{k-1} + Y·V_{k-1} (left multiplication).
std::size_t word_span_dim(const RatMatrix& x, const RatMatrix& y, std::size_t maxlen);

/// n(n+2)/4 for even n, (n+1)²/4 for odd n.
std::size_t dimension_bound(std::size_t n);

struct ImageReport {
    std::size_t n = 0;
    std::size_t dim = 0;
    std::size_t bound = 0;
    bool within_bound = false;
    std::size_t distinct_eigenvalues = 0;   // r1, from X
    std::size_t semisimple_dim = 0;         // r2, of the image algebra
    bool basic = false;                     // r1 == r2
    bool local = false;                     // r2 == 1
    std::optional<std::size_t> loops;       // dim rad/rad², local case only
    std::size_t radical_dim = 0;
    std::size_t rad2_dim = 0;
};

ImageReport image_report(const Representation& rho);
ImageReport image_report(const Representation& rho, const MatrixAlgebra& image);

struct Presentation {
    Rational alpha;                        // u = X − alpha·I, v = Y
    std::size_t degree_bound = 0;
    /// relations_by_degree[e] holds the new relations found at degree e.
    std::vector<std::vector<NcPolynomial>> relations_by_degree;

    std::vector<NcPolynomial> all_relations() const;
};

/// Minimal relations between u = X − αI and v = Y, degree by degree up to d.
/// Requires a local image algebra with X − αI nilpotent, α = tr(X)/n.
Presentation extract_presentation(const Representation& rho, std::size_t d);

void to_json(nlohmann::json& j, const ImageReport& r);
/// Relation strings use the u, v alphabet.
void to_json(nlohmann::json& j, const Presentation& p);

}  // namespace jordanrep
