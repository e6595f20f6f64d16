#pragma once

#include <cstdint>
#include <vector>

#include "lip/gf.hpp"

namespace lip {

/// Dense exact matrix over a Field, row-major. Immutable in spirit:
/// all operations return new matrices.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

    static Matrix identity(const FieldPtr& field, std::size_t n);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Elem v) { a_[i * cols_ + j] = v; }
    const std::vector<Elem>& entries() const { return a_; }

    bool operator==(const Matrix& b) const;

    Matrix operator*(const Matrix& b) const;
    Matrix transposed() const;

    /// Rows of this stacked on top of rows of b.
    Matrix vstack(const Matrix& b) const;

    /// Rows selected by index, in the given order.
    Matrix take_rows(const std::vector<std::size_t>& idx) const;

    /// Determinant by Gaussian elimination; matrix must be square.
    Elem determinant() const;

    /// Inverse of a nonsingular square matrix.
    Matrix inverse() const;

    /// Exactly one nonzero entry in each row and each column.
    bool is_monomial() const;

    std::vector<Elem> row(std::size_t i) const;

private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

struct RrefResult {
    Matrix r;
    std::size_t rank;
    std::vector<std::size_t> pivot_cols;
};

/// Unique reduced row-echelon form; row space preserved.
RrefResult rref(const Matrix& m);

/// Basis of the right null space {v : M v^t = 0}, one vector per row,
/// in RREF. Row count = cols - rank.
Matrix kernel(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Matrix with weights[i] at (i, perm[i]), zero elsewhere.
Matrix weighted_permutation(const FieldPtr& field, std::size_t n,
                            const std::vector<std::size_t>& perm,
                            const std::vector<Elem>& weights);

/// Square matrix with entries 1/(x_i + y_j). Requires x distinct,
/// y distinct and x_i + y_j != 0 for all i, j.
Matrix cauchy(const FieldPtr& field, const std::vector<Elem>& x,
              const std::vector<Elem>& y);

/// Square matrix with (i, j) entry a_i^j, exponents 0 .. n-1.
Matrix vandermonde(const FieldPtr& field, const std::vector<Elem>& a);

/// V(a)^{-1} V(b); super-regular whenever the a_i and b_j are
/// 2n distinct elements (enforced).
Matrix vandermonde_superregular(const FieldPtr& field, const std::vector<Elem>& a,
                                const std::vector<Elem>& b);

/// True iff every square submatrix is nonsingular. Exhaustive over all
/// row/column subsets; refuses matrices with min(rows, cols) > 6.
bool is_super_regular(const Matrix& m);

} // namespace lip
