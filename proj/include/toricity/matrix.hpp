#pragma once

#include "toricity/error.hpp"
#include "toricity/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace toricity {

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class DenseMatrix {
public:
    DenseMatrix() = default;

    DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) {
            throw ToricityError(ErrorKind::DimensionMismatch,
                                "matrix entry count " + std::to_string(entries_.size()) +
                                    " does not match shape " + std::to_string(rows_) + "x" +
                                    std::to_string(cols_));
        }
    }

    /// Builds a matrix from nested rows. `cols` is only consulted when there
    /// are no rows, so that empty matrices keep their column count.
    static DenseMatrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols = 0) {
        if (!rows.empty()) cols = rows.front().size();
        DenseMatrix out(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) {
                throw ToricityError(ErrorKind::DimensionMismatch,
                                    "ragged matrix: row " + std::to_string(r) + " has " +
                                        std::to_string(rows[r].size()) + " entries, expected " +
                                        std::to_string(cols));
            }
            for (std::size_t c = 0; c < cols; ++c) out(r, c) = rows[r][c];
        }
        return out;
    }

    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
        std::vector<std::vector<T>> nested;
        for (const auto& row : rows) nested.emplace_back(row);
        return from_rows(nested);
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix out(n, n);
        for (std::size_t i = 0; i < n; ++i) out(i, i) = T(1);
        return out;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const T> row(std::size_t r) const {
        return std::span<const T>(entries_.data() + r * cols_, cols_);
    }
    std::span<T> row(std::size_t r) { return std::span<T>(entries_.data() + r * cols_, cols_); }

    std::vector<T> column(std::size_t c) const {
        std::vector<T> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
        return out;
    }

    const std::vector<T>& entries() const noexcept { return entries_; }

    std::vector<std::vector<T>> to_rows() const {
        std::vector<std::vector<T>> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
        return out;
    }

    DenseMatrix transpose() const {
        DenseMatrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }

    DenseMatrix select_columns(std::span<const std::size_t> cols) const {
        DenseMatrix out(rows_, cols.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols.size(); ++k) out(r, k) = (*this)(r, cols[k]);
        return out;
    }

    DenseMatrix select_rows(std::span<const std::size_t> rows) const {
        DenseMatrix out(rows.size(), cols_);
        for (std::size_t k = 0; k < rows.size(); ++k)
            for (std::size_t c = 0; c < cols_; ++c) out(k, c) = (*this)(rows[k], c);
        return out;
    }

    /// Stacks `below` under this matrix. Column counts must agree unless one
    /// side has no rows.
    DenseMatrix vstack(const DenseMatrix& below) const {
        if (rows_ == 0) return below;
        if (below.rows_ == 0) return *this;
        if (below.cols_ != cols_) {
            throw ToricityError(ErrorKind::DimensionMismatch, "vstack: column counts differ");
        }
        DenseMatrix out(rows_ + below.rows_, cols_);
        std::copy(entries_.begin(), entries_.end(), out.entries_.begin());
        std::copy(below.entries_.begin(), below.entries_.end(),
                  out.entries_.begin() + static_cast<std::ptrdiff_t>(entries_.size()));
        return out;
    }

    DenseMatrix hstack(const DenseMatrix& right) const {
        if (right.rows_ != rows_) {
            throw ToricityError(ErrorKind::DimensionMismatch, "hstack: row counts differ");
        }
        DenseMatrix out(rows_, cols_ + right.cols_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
            for (std::size_t c = 0; c < right.cols_; ++c) out(r, cols_ + c) = right(r, c);
        }
        return out;
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (e != 0) return false;
        return true;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.cols_ != b.rows_) {
            throw ToricityError(ErrorKind::DimensionMismatch, "matrix product: inner dimensions differ");
        }
        DenseMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> entries_;
};

using RationalMatrix = DenseMatrix<Rational>;
using IntegerMatrix = DenseMatrix<Integer>;

RationalMatrix to_rational(const IntegerMatrix& m);

/// Exact conversion; throws Precondition when an entry is not integral.
IntegerMatrix to_integer(const RationalMatrix& m);

RationalVector multiply(const RationalMatrix& m, std::span<const Rational> v);

std::string to_string(const RationalMatrix& m);
std::string to_string(const IntegerMatrix& m);

}  // namespace toricity
