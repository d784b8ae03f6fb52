#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "jordanrep/matrix.hpp"

namespace jordanrep {

struct Rref {
    RatMatrix reduced;
    std::vector<std::size_t> pivot_cols;  // one per nonzero row, increasing

    std::size_t rank() const { return pivot_cols.size(); }
};

/// Reduced row echelon form; pivots are the first nonzero entry scanning
/// columns left to right, rows top to bottom.
Rref rref(RatMatrix a);

std::size_t rank(const RatMatrix& a);

/// Basis of {v : a·v = 0}, one vector per free column in increasing order,
/// with a 1 in that free column.
std::vector<RatVector> nullspace(const RatMatrix& a);

struct AffineSolution {
    RatVector particular;              // free variables set to zero
    std::vector<RatVector> kernel_basis;
};

/// Solves a·v = b. Returns nullopt when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const RatMatrix& a, std::span<const Rational> b);

Rational determinant(RatMatrix a);

/// Throws InputError for singular or non-square input.
RatMatrix inverse(const RatMatrix& a);

/// Incrementally maintained row space in echelon form.
///
/// Rows are kept as primitive integer vectors (positive leading entry) in
/// increasing pivot order; all elimination is fraction-free, which keeps
/// entry sizes small for the conjugated samples this toolkit produces.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t width);
    ~EchelonBasis();
    EchelonBasis(const EchelonBasis&);
    EchelonBasis& operator=(const EchelonBasis&);
    EchelonBasis(EchelonBasis&&) noexcept;
    EchelonBasis& operator=(EchelonBasis&&) noexcept;

    std::size_t width() const { return width_; }
    std::size_t dim() const { return rows_.size(); }

    /// v minus the combination of basis rows that clears every pivot
    /// column (zero iff v is in the span).
    RatVector reduce(RatVector v) const;
    bool contains(const RatVector& v) const;

    /// Adds v to the span. Returns false (and changes nothing) if v was
    /// already in it.
    bool insert(const RatVector& v);

    /// Basis rows, echelon order.
    std::vector<RatVector> rows() const;

private:
    mpq_class reduce_int(std::vector<mpz_class>& w) const;

    std::size_t width_;
    std::vector<std::vector<mpz_class>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Positive rational multiple with coprime integer entries.
RatVector primitive(std::span<const Rational> v);
RatMatrix primitive(const RatMatrix& m);

bool is_zero(std::span<const Rational> v);

}  // namespace jordanrep
