#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "skein/scalar.hpp"

namespace skein {

/// Dense square-or-rectangular matrix over Scalar, row-major.
class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    static ScalarMatrix identity(int n) {
        ScalarMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    Scalar& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    ScalarMatrix& operator+=(const ScalarMatrix& o) {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
        return *this;
    }

    ScalarMatrix& operator*=(const Scalar& c) {
        for (auto& x : data_)
            if (!x.is_zero()) x *= c;
        return *this;
    }

    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        ScalarMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Scalar& x = a(i, k);
                if (x.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
            }
        return r;
    }

    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Scalar trace() const {
        Scalar t;
        for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    bool is_diagonal() const {
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (i != j && !(*this)(i, j).is_zero()) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    /// c if this equals c times the identity.
    std::optional<Scalar> as_scalar() const {
        if (rows_ != cols_ || !is_diagonal()) return std::nullopt;
        if (rows_ == 0) return Scalar{};
        for (int i = 1; i < rows_; ++i)
            if (!((*this)(i, i) == (*this)(0, 0))) return std::nullopt;
        return (*this)(0, 0);
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> data_;
};

/// A matrix stored by columns of (row, value) pairs, for the generator
/// matrices which have at most two entries per column.
struct SparseColumns {
    int dim = 0;
    std::vector<std::vector<std::pair<int, Scalar>>> cols;

    ScalarMatrix dense() const {
        ScalarMatrix m(dim, dim);
        for (int c = 0; c < dim; ++c)
            for (const auto& [r, x] : cols[c]) m(r, c) = x;
        return m;
    }
};

/// a * g for sparse g.
inline ScalarMatrix operator*(const ScalarMatrix& a, const SparseColumns& g) {
    if (a.cols() != g.dim) throw std::invalid_argument("matrix shape mismatch");
    ScalarMatrix r(a.rows(), g.dim);
    for (int c = 0; c < g.dim; ++c)
        for (const auto& [k, x] : g.cols[c])
            for (int i = 0; i < a.rows(); ++i)
                if (!a(i, k).is_zero()) r(i, c) += a(i, k) * x;
    return r;
}

}  // namespace skein
