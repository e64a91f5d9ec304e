#include "aomoto/matrix.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace aomoto {

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0)
{
}

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols, const std::vector<long long>& row_major)
    : Matrix(field, rows, cols)
{
    if (row_major.size() != rows * cols)
        throw std::invalid_argument("matrix initializer has wrong size");
    for (std::size_t i = 0; i < row_major.size(); ++i)
        data_[i] = field_.reduce(row_major[i]);
}

Matrix Matrix::identity(PrimeField field, std::size_t n)
{
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_column(std::size_t c, const Vector& v)
{
    for (std::size_t r = 0; r < rows_; ++r)
        set(r, c, v[r]);
}

bool Matrix::is_zero() const
{
    for (Scalar x : data_)
        if (x != 0)
            return false;
    return true;
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.data_[c * rows_ + r] = (*this)(r, c);
    return t;
}

Vector Matrix::apply(const Vector& v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("matrix-vector size mismatch");
    Vector out(rows_, 0);
    const std::uint32_t p = field_.characteristic();
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < cols_; ++c)
            acc += static_cast<std::uint64_t>((*this)(r, c)) * v[c];
        out[r] = static_cast<Scalar>(acc % p);
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_ || !(a.field_ == b.field_))
        throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(a.field_, a.rows_, b.cols_);
    const std::uint32_t p = a.field_.characteristic();
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t c = 0; c < b.cols_; ++c) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < a.cols_; ++k)
                acc += static_cast<std::uint64_t>(a(r, k)) * b(k, c);
            out.data_[r * out.cols_ + c] = static_cast<Scalar>(acc % p);
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.field_ == b.field_))
        throw std::invalid_argument("matrix sum shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i)
        out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
    return out;
}

Matrix Matrix::block_sum(const Matrix& a, const Matrix& b)
{
    Matrix out(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t c = 0; c < a.cols_; ++c)
            out.set(r, c, a(r, c));
    for (std::size_t r = 0; r < b.rows_; ++r)
        for (std::size_t c = 0; c < b.cols_; ++c)
            out.set(a.rows_ + r, a.cols_ + c, b(r, c));
    return out;
}

namespace {

std::size_t rank_gf2(const Matrix& m)
{
    const std::size_t words = (m.cols() + 63) / 64;
    std::vector<std::uint64_t> bits(m.rows() * words, 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c))
                bits[r * words + c / 64] |= std::uint64_t{1} << (c % 64);

    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        std::size_t pivot = rank;
        while (pivot < m.rows() && !(bits[pivot * words + w] & mask))
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != rank)
            for (std::size_t k = w; k < words; ++k)
                std::swap(bits[pivot * words + k], bits[rank * words + k]);
        const std::uint64_t* prow = &bits[rank * words];
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            std::uint64_t* row = &bits[r * words];
            if (row[w] & mask)
                for (std::size_t k = w; k < words; ++k)
                    row[k] ^= prow[k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

Echelon row_reduce(const Matrix& m)
{
    const PrimeField& f = m.field();
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
        std::size_t pivot = row;
        while (pivot < a.rows() && a(pivot, c) == 0)
            ++pivot;
        if (pivot == a.rows())
            continue;
        if (pivot != row)
            for (std::size_t k = 0; k < a.cols(); ++k) {
                Scalar t = a(pivot, k);
                a.set(pivot, k, a(row, k));
                a.set(row, k, t);
            }
        const Scalar scale = f.inv(a(row, c));
        for (std::size_t k = c; k < a.cols(); ++k)
            a.set(row, k, f.mul(a(row, k), scale));
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, c) == 0)
                continue;
            const Scalar factor = f.neg(a(r, c));
            for (std::size_t k = c; k < a.cols(); ++k)
                a.set(r, k, f.add(a(r, k), f.mul(factor, a(row, k))));
        }
        pivots.push_back(c);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    if (m.field().characteristic() == 2)
        return rank_gf2(m);
    return row_reduce(m).pivots.size();
}

std::vector<Vector> kernel_basis(const Matrix& m)
{
    const PrimeField& f = m.field();
    Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivots)
        is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = f.neg(e.reduced(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve_linear(const Matrix& m, const Vector& v)
{
    if (v.size() != m.rows())
        throw std::invalid_argument("solve_linear: right-hand side has wrong length");
    Matrix augmented(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            augmented.set(r, c, m(r, c));
        augmented.set(r, m.cols(), v[r]);
    }
    Echelon e = row_reduce(augmented);
    Vector x(m.cols(), 0);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == m.cols())
            return std::nullopt;
        x[e.pivots[r]] = e.reduced(r, m.cols());
    }
    return x;
}

}  // namespace aomoto
