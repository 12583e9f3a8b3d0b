#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace krawtchouk {

/// A function on {0,...,N} held as its value vector, indexed 0..N.
template <field_scalar S>
using Signal = std::vector<S>;

/// Dense row-major matrix. All the named operators of the calculus
/// (Phi, B, Gamma, P, P', T, T(N), U, the Pascal basis, J, D) are instances.
template <field_scalar S>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                if (aik == S(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += S(aik * b(k, j));
            }
        return c;
    }

    /// Column action M f.
    friend Signal<S> operator*(const Matrix& m, const Signal<S>& f) {
        if (m.cols_ != f.size()) throw std::invalid_argument("matrix-vector: length mismatch");
        Signal<S> out(m.rows_, S(0));
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) out[i] += S(m(i, j) * f[j]);
        return out;
    }

    friend Matrix operator*(const S& s, const Matrix& m) {
        Matrix c(m.rows_, m.cols_);
        for (std::size_t i = 0; i < m.data_.size(); ++i) c.data_[i] = S(s * m.data_[i]);
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix sum: shape mismatch");
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = S(a.data_[i] + b.data_[i]);
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix difference: shape mismatch");
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = S(a.data_[i] - b.data_[i]);
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<S> data_;
};

/// Backend-aware equality: exact comparison for rationals, tolerance scaled
/// to the largest participating magnitude for float64.
template <field_scalar S>
bool signals_close(const Signal<S>& a, const Signal<S>& b, double tol = 1e-9) {
    if (a.size() != b.size()) return false;
    if constexpr (scalar_traits<S>::exact) {
        return a == b;
    } else {
        double scale = 1.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            scale = std::max({scale, std::fabs(scalar_traits<S>::to_double(a[i])),
                              std::fabs(scalar_traits<S>::to_double(b[i]))});
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!approx_equal(scalar_traits<S>::to_double(a[i]), scalar_traits<S>::to_double(b[i]),
                              tol, scale))
                return false;
        return true;
    }
}

template <field_scalar S>
bool matrices_close(const Matrix<S>& a, const Matrix<S>& b, double tol = 1e-9) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    if constexpr (scalar_traits<S>::exact) {
        return a == b;
    } else {
        double scale = 1.0;
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                scale = std::max({scale, std::fabs(scalar_traits<S>::to_double(a(i, j))),
                                  std::fabs(scalar_traits<S>::to_double(b(i, j)))});
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                if (!approx_equal(scalar_traits<S>::to_double(a(i, j)),
                                  scalar_traits<S>::to_double(b(i, j)), tol, scale))
                    return false;
        return true;
    }
}

/// Row action f^T M, the orientation of the standard transform.
template <field_scalar S>
Signal<S> row_apply(const Signal<S>& f, const Matrix<S>& m) {
    if (m.rows() != f.size()) throw std::invalid_argument("vector-matrix: length mismatch");
    Signal<S> out(m.cols(), S(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (f[i] == S(0)) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += S(f[i] * m(i, j));
    }
    return out;
}

template <field_scalar S>
Matrix<S> diagonal(const Signal<S>& d) {
    Matrix<S> m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

/// Kronecker product associated to the left: index (a,b) -> a*cols(B)+b.
template <field_scalar S>
Matrix<S> kronecker(const Matrix<S>& a, const Matrix<S>& b) {
    Matrix<S> c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == S(0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = S(a(i, j) * b(k, l));
        }
    return c;
}

}  // namespace krawtchouk
