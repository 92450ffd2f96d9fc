#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "selfinv/numeric.hpp"

namespace selfinv {

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows * cols) throw std::invalid_argument("matrix data has the wrong size");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Fraction-free (Bareiss) determinant over an exact field. Row swaps flip the sign.
template <class T>
T bareiss_determinant(Matrix<T> m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    const std::size_t size = m.rows();
    if (size == 0) return T(1);
    bool negate = false;
    T previous(1);
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (is_zero(m(k, k))) {
            std::size_t pivot = k + 1;
            while (pivot < size && is_zero(m(pivot, k))) ++pivot;
            if (pivot == size) return T(0);
            for (std::size_t c = k; c < size; ++c) std::swap(m(k, c), m(pivot, c));
            negate = !negate;
        }
        for (std::size_t r = k + 1; r < size; ++r) {
            for (std::size_t c = k + 1; c < size; ++c) {
                T v = m(k, k) * m(r, c) - m(r, k) * m(k, c);
                v /= previous;
                m(r, c) = std::move(v);
            }
        }
        previous = m(k, k);
    }
    T det = m(size - 1, size - 1);
    return negate ? -det : det;
}

/// Floating-point determinant by Gaussian elimination with partial pivoting.
inline ComplexDouble lu_determinant(Matrix<ComplexDouble> m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    const std::size_t size = m.rows();
    ComplexDouble det(1.0);
    for (std::size_t k = 0; k < size; ++k) {
        std::size_t pivot = k;
        for (std::size_t r = k + 1; r < size; ++r) {
            if (std::abs(m(r, k)) > std::abs(m(pivot, k))) pivot = r;
        }
        if (m(pivot, k) == ComplexDouble(0.0)) return 0.0;
        if (pivot != k) {
            for (std::size_t c = 0; c < size; ++c) std::swap(m(k, c), m(pivot, c));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t r = k + 1; r < size; ++r) {
            const ComplexDouble f = m(r, k) / m(k, k);
            for (std::size_t c = k + 1; c < size; ++c) m(r, c) -= f * m(k, c);
        }
    }
    return det;
}

}  // namespace selfinv
