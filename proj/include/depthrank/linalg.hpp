#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "depthrank/errors.hpp"

// Dense row-major matrices for the small dimensions (d <= 10) this library
// works in. Observations are stored one per row; a Sample is just a matrix
// whose rows are the observations.

namespace depthrank {

using Vector = std::vector<double>;

class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::initializer_list<double> entries)
        : rows_(rows), cols_(cols), a_(entries) {
        if (a_.size() != rows * cols)
            throw data_error("Matrix: initializer size does not match shape");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::span<const double> row(std::size_t r) const {
        return std::span<const double>(a_.data() + r * cols_, cols_);
    }
    std::span<double> row(std::size_t r) {
        return std::span<double>(a_.data() + r * cols_, cols_);
    }

    const std::vector<double>& data() const { return a_; }
    std::vector<double>& data() { return a_; }

private:
    std::size_t rows_, cols_;
    std::vector<double> a_;
};

using Sample = Matrix; // n x d, one observation per row

inline Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw data_error("matmul: shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

inline Vector matvec(const Matrix& a, std::span<const double> x) {
    if (a.cols() != x.size()) throw data_error("matvec: shape mismatch");
    Vector y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

inline double dot(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

// x' M y for square M.
inline double quad_form(std::span<const double> x, const Matrix& m,
                        std::span<const double> y) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double t = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) t += m(i, j) * y[j];
        s += x[i] * t;
    }
    return s;
}

namespace detail {

// LU decomposition with partial pivoting, in place. Returns the permutation
// sign, or throws numeric_error on (numerical) singularity.
inline int lu_decompose(Matrix& m, std::vector<std::size_t>& piv) {
    const std::size_t n = m.rows();
    piv.resize(n);
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i) piv[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::fabs(m(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            double v = std::fabs(m(i, k));
            if (v > best) { best = v; p = i; }
        }
        if (best == 0.0)
            throw numeric_error("lu_decompose: matrix is singular");
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            std::swap(piv[k], piv[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            m(i, k) /= m(k, k);
            double f = m(i, k);
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return sign;
}

} // namespace detail

inline double determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw data_error("determinant: matrix not square");
    Matrix lu = m;
    std::vector<std::size_t> piv;
    int sign;
    try {
        sign = detail::lu_decompose(lu, piv);
    } catch (const numeric_error&) {
        return 0.0;
    }
    double det = sign;
    for (std::size_t i = 0; i < lu.rows(); ++i) det *= lu(i, i);
    return det;
}

inline Matrix invert(const Matrix& m) {
    if (m.rows() != m.cols()) throw data_error("invert: matrix not square");
    const std::size_t n = m.rows();
    Matrix lu = m;
    std::vector<std::size_t> piv;
    detail::lu_decompose(lu, piv);

    Matrix inv(n, n);
    Vector col(n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < n; ++i) col[i] = (piv[i] == c) ? 1.0 : 0.0;
        for (std::size_t i = 1; i < n; ++i)        // forward substitution
            for (std::size_t j = 0; j < i; ++j) col[i] -= lu(i, j) * col[j];
        for (std::size_t i = n; i-- > 0;) {        // back substitution
            for (std::size_t j = i + 1; j < n; ++j) col[i] -= lu(i, j) * col[j];
            col[i] /= lu(i, i);
        }
        for (std::size_t i = 0; i < n; ++i) inv(i, c) = col[i];
    }
    return inv;
}

// Lower-triangular Cholesky factor L with L L' = m; throws numeric_error if
// m is not (numerically) symmetric positive definite.
inline Matrix cholesky(const Matrix& m) {
    if (m.rows() != m.cols()) throw data_error("cholesky: matrix not square");
    const std::size_t n = m.rows();
    Matrix l(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = m(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            if (i == j) {
                if (s <= 0.0)
                    throw numeric_error(
                        "cholesky: matrix is not positive definite (pivot " +
                        std::to_string(i) + ")");
                l(i, i) = std::sqrt(s);
            } else {
                l(i, j) = s / l(j, j);
            }
        }
    }
    return l;
}

// Sample mean vector and covariance matrix with the unbiased n-1 divisor.
inline std::pair<Vector, Matrix> sample_mean_cov(const Sample& s) {
    const std::size_t n = s.rows(), d = s.cols();
    if (n < 2)
        throw data_error("sample_mean_cov: need at least 2 observations, got " +
                         std::to_string(n));
    Vector mean(d, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) mean[j] += s(i, j);
    for (std::size_t j = 0; j < d; ++j) mean[j] /= static_cast<double>(n);

    Matrix cov(d, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            double cj = s(i, j) - mean[j];
            for (std::size_t k = j; k < d; ++k)
                cov(j, k) += cj * (s(i, k) - mean[k]);
        }
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = j; k < d; ++k) {
            cov(j, k) /= static_cast<double>(n - 1);
            cov(k, j) = cov(j, k);
        }
    return {std::move(mean), std::move(cov)};
}

} // namespace depthrank
