#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace framekit {

using cd = std::complex<double>;
using Vec = std::vector<cd>;

enum class Field { Real, Complex };

inline const char* field_name(Field f) { return f == Field::Real ? "real" : "complex"; }

// Dense row-major complex matrix. Real matrices are stored with zero
// imaginary parts; the owning Frame carries the field tag.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cd& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const cd& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vec col(std::size_t c) const {
        Vec v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const cd& z : a_) s += std::norm(z);
        return std::sqrt(s);
    }

    // Largest |S(i,j) - conj(S(j,i))| over all pairs.
    double max_asymmetry() const {
        double worst = 0.0;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return worst;
    }

    bool is_hermitian(double rel_tol = 1e-12) const {
        if (rows_ != cols_) return false;
        double scale = std::max(frobenius_norm(), 1.0);
        return max_asymmetry() <= rel_tol * scale;
    }

    Mat operator*(const Mat& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("Mat multiply: shape mismatch");
        Mat out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                cd aik = (*this)(i, k);
                if (aik == cd{}) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j)
                    out(i, j) += aik * rhs(k, j);
            }
        return out;
    }

    Mat adjoint() const {
        Mat out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(j, i) = std::conj((*this)(i, j));
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cd> a_;
};

// <x, y> = sum_i x_i * conj(y_i); linear in the first argument.
inline cd inner(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("inner: dimension mismatch");
    cd s{};
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
    return s;
}

inline double norm_sq(const Vec& x) {
    double s = 0.0;
    for (const cd& z : x) s += std::norm(z);
    return s;
}

inline double norm(const Vec& x) { return std::sqrt(norm_sq(x)); }

inline Vec scaled(Vec x, cd a) {
    for (cd& z : x) z *= a;
    return x;
}

inline Vec normalized(const Vec& x) {
    double n = norm(x);
    if (n == 0.0) throw std::invalid_argument("normalized: zero vector");
    return scaled(x, 1.0 / n);
}

inline Vec add(Vec x, const Vec& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return x;
}

inline Vec sub(Vec x, const Vec& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
    return x;
}

// x - <x,u> u for unit u.
inline Vec reject(Vec x, const Vec& u) {
    cd c = inner(x, u);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c * u[i];
    return x;
}

inline Vec unit_axis(std::size_t dim, std::size_t k) {
    Vec v(dim);
    v[k] = 1.0;
    return v;
}

}  // namespace framekit
