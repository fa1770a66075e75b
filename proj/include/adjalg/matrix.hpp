#pragma once

#include <cstddef>
#include <vector>

#include "adjalg/rational.hpp"

namespace adjalg {

// Dense row-major matrix of exact rationals. Values are immutable by
// convention once built (every algorithm here returns fresh matrices),
// so sharing across threads is safe.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix ones(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const RationalMatrix&) const = default;

    bool is_zero() const;
    bool is_binary() const;     // every entry 0 or 1
    bool is_symmetric() const;
    bool is_integer() const;    // every entry has denominator 1

    Rational trace() const;
    Rational entry_sum() const;
    RationalMatrix transpose() const;

    // Row-major concatenation of all entries, as a 1 x (rows*cols) row.
    RationalMatrix vectorize_row_major() const;

    const std::vector<Rational>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// Exact product. Throws DimensionError unless a.cols() == b.rows().
RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);

// Entrywise (Hadamard) product. Throws DimensionError on shape mismatch.
RationalMatrix hadamard(const RationalMatrix& a, const RationalMatrix& b);

// Normalized trace inner product (1/n) * trace(a*b), computed without
// forming the full product. For symmetric inputs this equals
// (1/n) * (sum of entries of a o b); the normalization makes the
// identity a unit vector. Throws DimensionError unless both are n x n.
Rational trace_inner(const RationalMatrix& a, const RationalMatrix& b, std::size_t n);

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& c, const RationalMatrix& m);

struct RrefResult {
    RationalMatrix R;                 // the unique reduced row echelon form
    RationalMatrix T;                 // invertible, with R = T * input
    std::size_t rank = 0;             // number of nonzero rows of R
    std::vector<std::size_t> pivots;  // pivot column of each of the first `rank` rows
};

/*
 * Reduced row echelon form with transform tracking.
 *
 * Pivoting is deterministic: leftmost nonzero column, topmost nonzero
 * entry, full reduction above and below, pivots scaled to 1. The same
 * row operations are applied to an identity block, which yields T with
 * T * m = R; T is invertible because it is a product of elementary
 * matrices. Deterministic pivoting makes every downstream canonical
 * form (basis matrices, Z matrices, polynomial coefficients)
 * bit-reproducible.
 */
RrefResult rref_with_transform(const RationalMatrix& m);

// Coefficients of v in the row space of an RREF matrix, if it lies
// there. Because pivot columns of R are unit columns, the only
// candidate expansion of a 1 x cols row vector v is
// sum_i v[pivot_i] * R_i; returns those coefficients when the residual
// vanishes, and nothing otherwise.
std::vector<Rational> rowspace_coefficients(const RrefResult& rref, const RationalMatrix& v,
                                            bool* inside);

// {I, a, a^2, ..., a^top}. Throws DimensionError unless a is square.
std::vector<RationalMatrix> matrix_powers(const RationalMatrix& a, std::size_t top);

// Stacks row-major vectorizations of equally shaped matrices into one
// matrix, one input matrix per row.
RationalMatrix stack_vectorized(const std::vector<RationalMatrix>& mats);

}  // namespace adjalg
