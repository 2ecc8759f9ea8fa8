#pragma once

// Exact rational scalars and dense matrices.
//
// Kronecker convention (used everywhere in the library): in V (x) W the basis
// vector e_i (x) f_j sits at index i * dim(W) + j, for rows and columns alike.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tannaka/error.hpp"

namespace tannaka::lin {

/// A reduced fraction p/q with q > 0.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(long num, long den);
    explicit Scalar(mpq_class v);

    /// Parses "p", "-p" or "p/q". Throws InputError on malformed text or q = 0.
    static Scalar parse(std::string_view text);

    [[nodiscard]] std::string str() const;
    [[nodiscard]] const mpq_class& raw() const { return value_; }
    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    Scalar& operator+=(const Scalar& o) { value_ += o.value_; return *this; }
    Scalar& operator-=(const Scalar& o) { value_ -= o.value_; return *this; }
    Scalar& operator*=(const Scalar& o) { value_ *= o.value_; return *this; }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a) { return Scalar(mpq_class(-a.value_)); }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

private:
    mpq_class value_{0};
};

/// Dense row-major matrix of exact scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    /// Builds from integer rows; all rows must have equal length.
    static Matrix from_rows(const std::vector<std::vector<long>>& rows);
    /// Column vector with the given entries.
    static Matrix column(std::vector<Scalar> entries);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] std::string shape() const;

    Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    [[nodiscard]] std::span<const Scalar> entries() const { return entries_; }

    [[nodiscard]] Matrix column_at(std::size_t c) const;
    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] bool is_zero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

/// g after f, i.e. the product g * f. Throws DimensionError when f.rows != g.cols.
Matrix compose(const Matrix& g, const Matrix& f);

Matrix kronecker(const Matrix& f, const Matrix& g);
/// Kronecker product of a list; the empty list gives the 1x1 identity.
Matrix kronecker(std::span<const Matrix> factors);

/// (I_left (x) m (x) I_right) * x without forming the Kronecker product.
Matrix apply_middle(std::size_t left, const Matrix& m, std::size_t right, const Matrix& x);
/// x * (I_left (x) m (x) I_right) without forming the Kronecker product.
Matrix after_middle(const Matrix& x, std::size_t left, const Matrix& m, std::size_t right);

/// Horizontal and vertical block concatenation.
Matrix hstack(std::span<const Matrix> blocks);
Matrix vstack(std::span<const Matrix> blocks);

/// Some X with A * X = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero, so the answer is deterministic.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Basis of the null space as column vectors, one per free column of the
/// reduced row echelon form, in increasing column order.
std::vector<Matrix> kernel_basis(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Factor permutation: output factor i is input factor perm[i]. `dims` are the
/// input factor dimensions. Throws InputError unless perm is a bijection.
Matrix permutation_matrix(std::span<const std::size_t> perm, std::span<const std::size_t> dims);

/// Same as compose(m, permutation_matrix(perm, dims)) without materialising
/// the permutation; the columns of m are indexed by the output factors.
Matrix permute_columns(const Matrix& m, std::span<const std::size_t> perm,
                       std::span<const std::size_t> dims);

/// Swap of two factors V (x) W -> W (x) V.
Matrix swap_matrix(std::size_t dim_v, std::size_t dim_w);

/// First entry (row-major scan) where a and b differ; both must share a shape.
struct EntryDiff {
    std::size_t row;
    std::size_t col;
    Scalar lhs;
    Scalar rhs;
};
std::optional<EntryDiff> first_difference(const Matrix& a, const Matrix& b);

}  // namespace tannaka::lin
