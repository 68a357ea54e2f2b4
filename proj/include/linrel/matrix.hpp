#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "linrel/field.hpp"

namespace linrel {

/// Dense exact matrix over a FieldSpec, read as the linear map
/// K^cols -> K^rows, x |-> Mx. Zero-row and zero-column shapes are legal
/// (K^0 = {0}) and supported by every operation.
class Matrix {
public:
    Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);  // zero-filled
    static Matrix identity(const FieldSpec& f, std::size_t n);
    static Matrix from_rows(const FieldSpec& f, std::size_t rows, std::size_t cols,
                            std::vector<Scalar> entries);  // row-major
    static Matrix from_ints(const FieldSpec& f,
                            std::initializer_list<std::initializer_list<long long>> rows);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    Scalar* row_ptr(std::size_t i) { return e_.data() + i * cols_; }
    const Scalar* row_ptr(std::size_t i) const { return e_.data() + i * cols_; }

    std::vector<Scalar> row(std::size_t i) const;
    void set_row(std::size_t i, const std::vector<Scalar>& values);
    void swap_rows(std::size_t i, std::size_t j);

    Matrix transpose() const;
    Matrix negated() const;
    Matrix rows_slice(std::size_t r0, std::size_t r1) const;  // [r0, r1)
    Matrix cols_slice(std::size_t c0, std::size_t c1) const;  // [c0, c1)
    Matrix select_cols(const std::vector<std::size_t>& idx) const;

    bool is_zero() const;
    bool is_identity() const;

    bool operator==(const Matrix&) const = default;

private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> e_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix rref;
    std::size_t rank;
    std::vector<std::size_t> pivot_cols;
    Matrix transform;  // invertible, transform * input = rref exactly
};

/// Gauss-Jordan reduced row-echelon form with the row transform tracked.
/// Pivots are the first nonzero entry per column, in column order.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Columns form a basis of ker(m); column count = cols - rank.
Matrix kernel_basis(const Matrix& m);
/// Columns form a basis of im(m) (the pivot columns of m); count = rank.
Matrix image_basis(const Matrix& m);

struct CanonicalDecomposition {
    Matrix p, p_inv, q, q_inv;
    std::size_t rank;
};

/// Rank-revealing factorization m = p_inv * [I_r 0; 0 0] * q_inv with
/// invertible p, q.
CanonicalDecomposition canonical_decomposition(const Matrix& m);

/// One-sided inverses; absence means the property (injective / surjective /
/// bijective) fails, it is not an error.
std::optional<Matrix> left_inverse(const Matrix& m);   // L*m = I iff m injective
std::optional<Matrix> right_inverse(const Matrix& m);  // m*R = I iff m surjective
std::optional<Matrix> inverse(const Matrix& m);

/// Exact linear solves a*X = B, columnwise, free variables set to zero.
/// Reuses one row reduction of a across many right-hand sides.
class LinearSolver {
public:
    explicit LinearSolver(const Matrix& a);
    std::optional<Matrix> solve(const Matrix& b) const;  // nullopt if inconsistent

private:
    std::size_t arows_, acols_;
    RrefResult rr_;
};

std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b);  // X with a*X = b
std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b);   // X with X*a = b

/// Canonical basis of the row space: the nonzero rows of rref(m).
Matrix row_space_basis(const Matrix& m);

/// Incremental row-space builder used for basis completion and membership
/// tests. Maintains its basis in RREF.
class RowSpaceBuilder {
public:
    RowSpaceBuilder(const FieldSpec& f, std::size_t width);
    /// Adds the row if independent of the current space; returns whether it
    /// enlarged the space.
    bool insert(std::vector<Scalar> row);
    bool contains(std::vector<Scalar> row) const;
    std::size_t dim() const { return basis_.size(); }
    std::size_t width() const { return width_; }
    Matrix basis() const;

private:
    void reduce(std::vector<Scalar>& row) const;

    FieldSpec field_;
    std::size_t width_;
    std::vector<std::size_t> pivots_;             // ascending
    std::vector<std::vector<Scalar>> basis_;      // RREF rows, pivot order
};

}  // namespace linrel
