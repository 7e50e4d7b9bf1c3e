#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace ptl {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major storage.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }

    Complex& operator()(std::size_t row, std::size_t col) noexcept { return data_[row * dim_ + col]; }
    const Complex& operator()(std::size_t row, std::size_t col) const noexcept
    {
        return data_[row * dim_ + col];
    }

    std::span<const Complex> data() const noexcept { return data_; }

    double max_abs() const noexcept;
    double frobenius_norm() const noexcept;
    bool is_finite() const noexcept;
    Complex trace() const noexcept;

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;

    /// y = M v
    std::vector<Complex> apply(std::span<const Complex> v) const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// Largest entrywise |a - b|; throws Error{DimensionMismatch} on size mismatch.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace ptl
