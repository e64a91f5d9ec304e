#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "aomoto/field.hpp"

namespace aomoto {

/// Dense matrix over a prime field. Entries are always reduced mod p.
///
/// Linear maps between graded pieces are stored in column convention:
/// a map V -> W with dim V = n, dim W = m is an m x n matrix whose
/// column c holds the image of the c-th basis vector of V.
class Matrix {
 public:
    Matrix() = default;
    Matrix(PrimeField field, std::size_t rows, std::size_t cols);
    Matrix(PrimeField field, std::size_t rows, std::size_t cols, const std::vector<long long>& row_major);

    static Matrix identity(PrimeField field, std::size_t n);

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Scalar value) { data_[r * cols_ + c] = value % field_.characteristic(); }
    void add_to(std::size_t r, std::size_t c, Scalar value)
    {
        data_[r * cols_ + c] = field_.add(data_[r * cols_ + c], value % field_.characteristic());
    }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    void set_column(std::size_t c, const Vector& v);

    bool is_zero() const;
    Matrix transpose() const;
    Vector apply(const Vector& v) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Block sum diag(a, b).
    static Matrix block_sum(const Matrix& a, const Matrix& b);

 private:
    PrimeField field_{2};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Rank over F_p. For p = 2 rows are bit-packed.
std::size_t rank(const Matrix& m);

/// Basis of the right null space {x : Mx = 0}, one vector per free column in
/// increasing column order, read off the reduced row echelon form.
std::vector<Vector> kernel_basis(const Matrix& m);

/// One solution of Mx = v with all free variables set to zero, or nullopt.
std::optional<Vector> solve_linear(const Matrix& m, const Vector& v);

/// Reduced row echelon form together with the pivot column of each nonzero row.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};
Echelon row_reduce(const Matrix& m);

}  // namespace aomoto
