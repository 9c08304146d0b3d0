#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

namespace connlab {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix over an arbitrary ring. Integer matrices use
/// long long entries with overflow-checked products; exact routines fall
/// back to GMP integers when that throws.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T init = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, init) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r ? rows[0].size() : 0;
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    /// Products over long long are overflow-checked and throw
    /// std::overflow_error; callers redo the computation in GMP integers.
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if constexpr (std::is_same_v<T, long long>) {
                        long long prod;
                        if (__builtin_mul_overflow(aik, b(k, j), &prod) ||
                            __builtin_add_overflow(c(i, j), prod, &c(i, j)))
                            throw std::overflow_error("integer matrix product overflow");
                    } else {
                        c(i, j) += aik * b(k, j);
                    }
                }
            }
        return c;
    }

    Matrix operator*(const T& s) const {
        Matrix c = *this;
        for (auto& x : c.data_) x *= s;
        return c;
    }

    Matrix abs() const {
        Matrix c = *this;
        for (auto& x : c.data_) if (x < T{}) x = -x;
        return c;
    }

    T trace() const {
        require_square();
        T t{};
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    /// Principal submatrix keeping exactly the listed positions (sorted).
    Matrix principal_submatrix(const std::vector<std::size_t>& keep) const {
        require_square();
        Matrix s(keep.size(), keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = 0; j < keep.size(); ++j)
                s(i, j) = (*this)(keep[i], keep[j]);
        return s;
    }

    template <class U>
    Matrix<U> cast() const {
        Matrix<U> m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = static_cast<U>((*this)(i, j));
        return m;
    }

    void require_square() const {
        if (!square()) throw std::invalid_argument("square matrix required");
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMat = Matrix<long long>;
using BigMat = Matrix<BigInt>;
using RatMat = Matrix<Rational>;
using RealMat = Matrix<double>;
using CplxMat = Matrix<std::complex<double>>;

// gmpxx has no long long overloads; long is 64-bit here
inline BigInt to_bigint(long long x) { return BigInt(static_cast<long>(x)); }
inline Rational to_rat(long long x) { return Rational(static_cast<long>(x)); }

inline BigMat to_big(const IntMat& a) {
    BigMat m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = to_bigint(a(i, j));
    return m;
}

inline RatMat to_rational(const IntMat& a) {
    RatMat m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = to_rat(a(i, j));
    return m;
}

inline RealMat to_real(const IntMat& a) {
    RealMat m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = static_cast<double>(a(i, j));
    return m;
}

inline double max_abs(const RealMat& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m = std::max(m, std::abs(a(i, j)));
    return m;
}

/// Max absolute row sum.
inline double inf_norm(const RealMat& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::abs(a(i, j));
        m = std::max(m, s);
    }
    return m;
}

}  // namespace connlab
