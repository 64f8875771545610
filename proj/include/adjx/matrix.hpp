#ifndef ADJX_MATRIX_HPP
#define ADJX_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adjx/ring.hpp"

namespace adjx
{

// Row-major dense matrix of ring elements. The ring is passed to the
// arithmetic helpers below, never stored.
template <class E>
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const E& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<E> data)
        : rows_(rows), cols_(cols), data_(std::move(data))
    {
        if (data_.size() != rows_ * cols_) {
            throw std::invalid_argument("matrix data has " + std::to_string(data_.size()) + " entries, expected "
                                        + std::to_string(rows_ * cols_));
        }
    }

    std::size_t rows() const noexcept
    {
        return rows_;
    }
    std::size_t cols() const noexcept
    {
        return cols_;
    }
    bool square() const noexcept
    {
        return rows_ == cols_;
    }
    bool empty() const noexcept
    {
        return data_.empty();
    }

    E& operator()(std::size_t i, std::size_t j)
    {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const E& operator()(std::size_t i, std::size_t j) const
    {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    const std::vector<E>& data() const noexcept
    {
        return data_;
    }

    std::vector<E> row(std::size_t i) const
    {
        return {data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_)};
    }
    std::vector<E> col(std::size_t j) const
    {
        std::vector<E> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            out.push_back((*this)(i, j));
        }
        return out;
    }
    void set_row(std::size_t i, const std::vector<E>& r)
    {
        assert(r.size() == cols_);
        std::copy(r.begin(), r.end(), data_.begin() + static_cast<long>(i * cols_));
    }
    void set_col(std::size_t j, const std::vector<E>& c)
    {
        assert(c.size() == rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            (*this)(i, j) = c[i];
        }
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<E> data_;
};

template <CommutativeRing R>
using MatrixOf = Matrix<element_t<R>>;

template <CommutativeRing R>
using Vec = std::vector<element_t<R>>;

template <CommutativeRing R>
MatrixOf<R> zero_matrix(const R& ring, std::size_t rows, std::size_t cols)
{
    return MatrixOf<R>(rows, cols, ring.zero());
}

template <CommutativeRing R>
MatrixOf<R> identity_matrix(const R& ring, std::size_t n)
{
    auto m = zero_matrix(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = ring.one();
    }
    return m;
}

template <CommutativeRing R, class F>
auto map_matrix(const MatrixOf<R>& m, F&& f)
{
    using Out = std::invoke_result_t<F, const element_t<R>&>;
    std::vector<Out> data;
    data.reserve(m.data().size());
    for (const auto& x : m.data()) {
        data.push_back(f(x));
    }
    return Matrix<Out>(m.rows(), m.cols(), std::move(data));
}

// Sum of a[i]*b[i]; the accumulator starts from the first product so that no
// zero constant is materialized.
template <CommutativeRing R, class GetA, class GetB>
element_t<R> dot_with(const R& ring, std::size_t len, GetA&& a, GetB&& b)
{
    if (len == 0) {
        return ring.zero();
    }
    auto acc = ring.mul(a(0), b(0));
    for (std::size_t k = 1; k < len; ++k) {
        acc = ring.add(acc, ring.mul(a(k), b(k)));
    }
    return acc;
}

template <CommutativeRing R>
element_t<R> dot(const R& ring, const Vec<R>& a, const Vec<R>& b)
{
    assert(a.size() == b.size());
    return dot_with(ring, a.size(), [&](std::size_t k) -> const auto& { return a[k]; },
                    [&](std::size_t k) -> const auto& { return b[k]; });
}

template <CommutativeRing R>
MatrixOf<R> mat_mul(const R& ring, const MatrixOf<R>& a, const MatrixOf<R>& b)
{
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix product shape mismatch");
    }
    MatrixOf<R> out(a.rows(), b.cols(), ring.zero());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            out(i, j) = dot_with(ring, a.cols(), [&](std::size_t k) -> const auto& { return a(i, k); },
                                 [&](std::size_t k) -> const auto& { return b(k, j); });
        }
    }
    return out;
}

// M * x for a column vector x.
template <CommutativeRing R>
Vec<R> mat_vec(const R& ring, const MatrixOf<R>& m, const Vec<R>& x)
{
    assert(m.cols() == x.size());
    Vec<R> out;
    out.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out.push_back(dot_with(ring, m.cols(), [&](std::size_t k) -> const auto& { return m(i, k); },
                               [&](std::size_t k) -> const auto& { return x[k]; }));
    }
    return out;
}

// y * M for a row vector y.
template <CommutativeRing R>
Vec<R> vec_mat(const R& ring, const Vec<R>& y, const MatrixOf<R>& m)
{
    assert(m.rows() == y.size());
    Vec<R> out;
    out.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        out.push_back(dot_with(ring, m.rows(), [&](std::size_t k) -> const auto& { return y[k]; },
                               [&](std::size_t k) -> const auto& { return m(k, j); }));
    }
    return out;
}

template <CommutativeRing R>
MatrixOf<R> mat_add(const R& ring, const MatrixOf<R>& a, const MatrixOf<R>& b)
{
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    MatrixOf<R> out(a);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(i, j) = ring.add(a(i, j), b(i, j));
        }
    }
    return out;
}

template <CommutativeRing R>
MatrixOf<R> mat_sub(const R& ring, const MatrixOf<R>& a, const MatrixOf<R>& b)
{
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    MatrixOf<R> out(a);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(i, j) = ring.sub(a(i, j), b(i, j));
        }
    }
    return out;
}

template <CommutativeRing R>
MatrixOf<R> mat_scale(const R& ring, const MatrixOf<R>& a, const element_t<R>& c)
{
    MatrixOf<R> out(a);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(i, j) = ring.mul(a(i, j), c);
        }
    }
    return out;
}

// acc += col * row
template <CommutativeRing R>
void add_outer(const R& ring, MatrixOf<R>& acc, const Vec<R>& col, const Vec<R>& row)
{
    assert(acc.rows() == col.size() && acc.cols() == row.size());
    for (std::size_t i = 0; i < col.size(); ++i) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            acc(i, j) = ring.add(acc(i, j), ring.mul(col[i], row[j]));
        }
    }
}

template <CommutativeRing R>
Vec<R> vec_add(const R& ring, const Vec<R>& a, const Vec<R>& b)
{
    assert(a.size() == b.size());
    Vec<R> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out.push_back(ring.add(a[i], b[i]));
    }
    return out;
}

template <CommutativeRing R>
MatrixOf<R> transpose(const MatrixOf<R>& a)
{
    std::vector<element_t<R>> data;
    data.reserve(a.data().size());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            data.push_back(a(i, j));
        }
    }
    return MatrixOf<R>(a.cols(), a.rows(), std::move(data));
}

template <CommutativeRing R>
bool mat_equal(const R& ring, const MatrixOf<R>& a, const MatrixOf<R>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    for (std::size_t k = 0; k < a.data().size(); ++k) {
        if (!ring.equal(a.data()[k], b.data()[k])) {
            return false;
        }
    }
    return true;
}

template <CommutativeRing R>
bool is_scalar_matrix(const R& ring, const MatrixOf<R>& a, const element_t<R>& c)
{
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!ring.equal(a(i, j), i == j ? c : ring.zero())) {
                return false;
            }
        }
    }
    return true;
}

// Lifts a matrix of integers into a ring.
template <CommutativeRing R>
MatrixOf<R> from_int_rows(const R& ring, const std::vector<std::vector<long>>& rows)
{
    const std::size_t n = rows.size();
    const std::size_t m = n ? rows.front().size() : 0;
    MatrixOf<R> out(n, m, ring.zero());
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != m) {
            throw std::invalid_argument("ragged matrix rows");
        }
        for (std::size_t j = 0; j < m; ++j) {
            out(i, j) = ring.from_int(rows[i][j]);
        }
    }
    return out;
}

template <CommutativeRing R>
MatrixOf<R> random_matrix(const R& ring, std::size_t rows, std::size_t cols, std::mt19937_64& rng)
{
    std::vector<element_t<R>> data;
    data.reserve(rows * cols);
    for (std::size_t k = 0; k < rows * cols; ++k) {
        data.push_back(ring.random(rng));
    }
    return MatrixOf<R>(rows, cols, std::move(data));
}

} // namespace adjx

#endif
