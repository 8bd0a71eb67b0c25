#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "grasscount/errors.hpp"
#include "grasscount/integer.hpp"

namespace grasscount {

/// Dense row-major matrix. Sizes here are tiny (ambient dimension <= 24),
/// so no attempt is made at sparsity or blocking.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : init) {
            if (r.size() != cols_) throw argument_error("ragged matrix initializer");
            for (const auto& e : r) data_.push_back(e);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    void set_row(std::size_t i, const std::vector<T>& r) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
    }

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rational>;

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
    Matrix<T> t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

template <class T>
Matrix<T> mul(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw argument_error("matrix product shape mismatch");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

template <class T>
std::vector<T> mul_vec(const std::vector<T>& v, const Matrix<T>& m) {
    if (v.size() != m.rows()) throw argument_error("vector-matrix shape mismatch");
    std::vector<T> out(m.cols(), T(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
    }
    return out;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    T s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

inline RatVec to_rational(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

/// Pairwise inner products b * b^tr; symmetric positive semidefinite.
inline RatMatrix gram(const RatMatrix& b) {
    RatMatrix g(b.rows(), b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t k = i; k < b.rows(); ++k) {
            Rational s(0);
            for (std::size_t j = 0; j < b.cols(); ++j) s += b(i, j) * b(k, j);
            g(i, k) = s;
            if (k != i) g(k, i) = s;
        }
    return g;
}

/// Exact determinant of a square rational matrix, by Gaussian elimination.
inline Rational det(RatMatrix m) {
    if (m.rows() != m.cols()) throw argument_error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    Rational d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m(piv, col) == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            m.swap_rows(piv, col);
            d = -d;
        }
        d *= m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            Rational f = m(i, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return d;
}

/// Rank over the rationals.
inline std::size_t rank(RatMatrix m) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(piv, r);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, col) == 0) continue;
            Rational f = m(i, col) / m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

inline std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

inline RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw argument_error("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) throw rank_error("matrix is singular");
        a.swap_rows(piv, col);
        inv.swap_rows(piv, col);
        Rational p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Rational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

/// det(b b^tr) as an exact rational; equals (det b)^2 for square b and 0
/// when b is not of full row rank.
inline SquaredMagnitude det_squared(const RatMatrix& b) {
    Rational d = det(gram(b));
    if (d < 0) d = 0;  // symmetric PSD; negatives cannot occur exactly
    return SquaredMagnitude(d);
}

inline SquaredMagnitude det_squared(const IntMatrix& b) {
    return det_squared(to_rational(b));
}

}  // namespace grasscount
