#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "jordanrep/rational.hpp"

namespace jordanrep {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static RatMatrix diagonal(std::span<const Rational> diag);
    /// Column-major unstacking of a vector of length rows*cols.
    static RatMatrix from_vec(std::span<const Rational> v, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const Rational> entries() const { return entries_; }
    std::span<Rational> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }
    std::span<const Rational> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }

    /// Column-major stacking: index i + j*rows.
    RatVector vec() const;

    RatMatrix transpose() const;
    Rational trace() const;
    RatMatrix pow(unsigned k) const;

    RatMatrix& operator+=(const RatMatrix& o);
    RatMatrix& operator-=(const RatMatrix& o);
    RatMatrix& operator*=(const Rational& s);

    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
    friend RatMatrix operator*(const Rational& s, RatMatrix a) { return a *= s; }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatVector operator*(const RatMatrix& a, const RatVector& v);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

/// Kronecker product a ⊗ b.
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);

/// Matrix of θ ↦ left·θ·right acting on column-major vec(θ).
RatMatrix sandwich_operator(const RatMatrix& left, const RatMatrix& right);

/// Matrix of X ↦ X·a − a·X acting on column-major vec(X).
RatMatrix commutator_operator(const RatMatrix& a);

RatMatrix block_diagonal(const RatMatrix& a, const RatMatrix& b);

/// Stacks matrices with equal column counts vertically.
RatMatrix vstack(std::span<const RatMatrix> blocks);

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

}  // namespace jordanrep
