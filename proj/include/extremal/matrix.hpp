#pragma once

#include "extremal/error.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace extremal {

/// Dense row-major matrix over one exact field. T is Rational, ModP or
/// QuadExt; entries must agree on field_id().
template <class T>
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    /// Rejects ragged input and mixed fields.
    explicit Matrix(const std::vector<std::vector<T>>& rows) {
        rows_ = rows.size();
        cols_ = rows.empty() ? 0 : rows.front().size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) {
                throw MalformedInput("matrix rows have unequal lengths");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
        check_single_field();
    }

    static Matrix identity(std::size_t n, const T& proto) {
        Matrix m(n, n, zero_like(proto));
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = one_like(proto);
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return data_.empty(); }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    Matrix transposed() const {
        Matrix t;
        t.rows_ = cols_;
        t.cols_ = rows_;
        t.data_.reserve(data_.size());
        for (std::size_t c = 0; c < cols_; ++c) {
            for (std::size_t r = 0; r < rows_; ++r) {
                t.data_.push_back((*this)(r, c));
            }
        }
        return t;
    }

    bool is_symmetric() const {
        if (!is_square()) {
            return false;
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = i + 1; j < cols_; ++j) {
                if (!((*this)(i, j) == (*this)(j, i))) {
                    return false;
                }
            }
        }
        return true;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) {
            return;
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            std::swap((*this)(a, c), (*this)(b, c));
        }
    }

    /// Throws MalformedInput when two entries disagree on their field.
    void check_single_field() const {
        for (const auto& entry : data_) {
            if (entry.field_id() != data_.front().field_id()) {
                throw MalformedInput("matrix mixes entries from different fields");
            }
        }
    }

    friend bool operator==(const Matrix& lhs, const Matrix& rhs) {
        return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// M * x for a column vector x.
template <class T>
std::vector<T> multiply(const Matrix<T>& m, std::span<const T> x) {
    if (x.size() != m.cols()) {
        throw MalformedInput("matrix-vector dimension mismatch");
    }
    std::vector<T> out;
    out.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        T acc = zero_like(x.empty() ? m(r, 0) : x.front());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            acc += m(r, c) * x[c];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

} // namespace extremal
