#include "ptlattice/complex_matrix.hpp"

#include <cmath>
#include <string>

#include "ptlattice/errors.hpp"

namespace ptl {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b)
{
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "matrix dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
    }
}

} // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t dim)
{
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        m(i, i) = 1.0;
    return m;
}

double ComplexMatrix::max_abs() const noexcept
{
    double result = 0.0;
    for (const auto& v : data_)
        result = std::max(result, std::abs(v));
    return result;
}

double ComplexMatrix::frobenius_norm() const noexcept
{
    double sum = 0.0;
    for (const auto& v : data_)
        sum += std::norm(v);
    return std::sqrt(sum);
}

bool ComplexMatrix::is_finite() const noexcept
{
    for (const auto& v : data_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            return false;
    }
    return true;
}

Complex ComplexMatrix::trace() const noexcept
{
    Complex sum = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        sum += (*this)(i, i);
    return sum;
}

ComplexMatrix ComplexMatrix::adjoint() const
{
    ComplexMatrix result(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            result(j, i) = std::conj((*this)(i, j));
    return result;
}

ComplexMatrix ComplexMatrix::conjugate() const
{
    ComplexMatrix result = *this;
    for (auto& v : result.data_)
        v = std::conj(v);
    return result;
}

std::vector<Complex> ComplexMatrix::apply(std::span<const Complex> v) const
{
    if (v.size() != dim_)
        throw Error(ErrorKind::DimensionMismatch, "vector length does not match matrix dimension");
    std::vector<Complex> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < dim_; ++j)
            acc += (*this)(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other)
{
    require_same_dim(*this, other);
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other)
{
    require_same_dim(*this, other);
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs)
{
    require_same_dim(lhs, rhs);
    const std::size_t n = lhs.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex{})
                continue;
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += a * rhs(k, j);
        }
    return out;
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b)
{
    require_same_dim(a, b);
    double result = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        result = std::max(result, std::abs(a.data()[i] - b.data()[i]));
    return result;
}

} // namespace ptl
